//! Points with exactly k expansions, checked by the census.

use triexp::census::{default_node_cap, null_infinite_check, witness_for_bk};
use triexp::expansion::{eval, Base};

fn main() {
    for b in ["silver", "5/2", "3"] {
        let base: Base = b.parse().unwrap();
        for k in 1..=5 {
            let w = witness_for_bk(&base, k, default_node_cap()).unwrap();
            println!("q = {b:<7} k = {k}  {w}");
        }
    }
    let base: Base = "2".parse().unwrap();
    let r = null_infinite_check(&eval(&"1(0)*".parse().unwrap(), &base), &base, default_node_cap()).unwrap();
    println!(
        "q = 2, x = 1/2: countably many expansions: {}, {} branching values",
        r.null_infinite,
        r.switch_nodes.len()
    );
}
