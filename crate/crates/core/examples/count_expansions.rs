//! Exact expansion counts from the follower graph of a point.

use triexp::census::{classify_detailed, default_node_cap};
use triexp::expansion::{eval, Base};
use triexp::words::EPWord;

fn main() {
    let cases = [
        ("3", "0qq(1q)*"),
        ("3", "0(q)*"),
        ("2", "(10)*"),
        ("5/2", "(100)*"),
        ("silver", "0q(q11)*"),
    ];
    for (b, w) in cases {
        let base: Base = b.parse().unwrap();
        let word: EPWord = w.parse().unwrap();
        let c = classify_detailed(&eval(&word, &base), &base, default_node_cap());
        println!(
            "q = {b:<7} {w:<10} {:<20} {:?}, {} nodes",
            c.cardinality.label(),
            c.certificate,
            c.nodes_explored
        );
    }
}
