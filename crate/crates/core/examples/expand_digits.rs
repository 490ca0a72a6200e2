//! Greedy and quasi-greedy digits of points given as polynomials in q.

use triexp::expansion::{greedy_digits, quasi_greedy_digits, Base};

fn main() {
    let base: Base = "5/2".parse().unwrap();
    for x in ["1", "q - 1", "1/2", "2/3 q - 1"] {
        let p = base.parse_element(x).unwrap();
        let g = greedy_digits(&p, &base, 20).unwrap();
        let qg = quasi_greedy_digits(&p, &base, 20).unwrap();
        println!("x = {x:<10} greedy {}  quasi-greedy {}", g.digits, qg);
    }
}
