//! Dimensions across a grid of rational bases, written as CSV to stdout.

use triexp::cli::{sweep, write_sweep_csv};
use triexp::numeric::rat;

fn main() {
    let rows = sweep(&rat(2, 1), &rat(3, 1), 11, 6).unwrap();
    write_sweep_csv(&rows, 6, std::io::stdout().lock()).unwrap();
}
