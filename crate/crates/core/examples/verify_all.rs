//! Runs every published check and prints a one-line verdict for each.

use triexp::verify::run_all;

fn main() {
    for r in run_all() {
        println!("[{}] {:>2} {}", if r.passed { "PASS" } else { "FAIL" }, r.id, r.title);
    }
}
