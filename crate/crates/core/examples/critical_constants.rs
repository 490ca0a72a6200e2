//! The two thresholds of the digit set {0, 1, q} as exact algebraic numbers.

use triexp::expansion::{alpha, Base};

fn main() {
    for base in [Base::critical(), Base::attractor_threshold(), Base::silver()] {
        let q = base.real();
        println!(
            "{:<7} root of {:?}  ~ {:.12}",
            base.label(),
            q.defining().coeffs(),
            q.to_f64()
        );
        let a = alpha(&base, 24).expect("alpha is defined up to q*");
        match &a.closure {
            Some(w) => println!("        alpha = {w}"),
            None => println!("        alpha starts {}", a.prefix),
        }
    }
}
