//! Exact dimensions where a closed form exists and certified bounds elsewhere.

use triexp::dimension::{dim_attractor, dim_univoque, dim_univoque_bounds, entropy, silver_subshift};
use triexp::expansion::Base;

fn main() {
    for b in ["2", "silver", "12/5", "qstar", "3", "4"] {
        let base: Base = b.parse().unwrap();
        println!(
            "q = {b:<6} dim E = {}  dim U = {}",
            dim_attractor(&base, 6),
            dim_univoque(&base, 6).unwrap()
        );
    }
    let silver = Base::silver();
    for m in [2, 4, 6, 8] {
        println!("silver, block length {m}: {}", dim_univoque_bounds(&silver, m).unwrap());
    }
    println!(
        "entropy of the silver subshift: {}",
        entropy(&silver_subshift()).unwrap()
    );
}
