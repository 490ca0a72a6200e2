//! Deciding from the digits whether a sequence is the only expansion of its value.

use triexp::expansion::{unique_membership_word, Base};
use triexp::words::EPWord;

fn main() {
    let words = ["(0)*", "(1q)*", "(10)*", "0(q)*", "(1q0)*", "1(q)*"];
    for b in ["2", "silver", "3"] {
        let base: Base = b.parse().unwrap();
        print!("q = {b:<7}");
        for w in words {
            let word: EPWord = w.parse().unwrap();
            print!(" {w}:{:?}", unique_membership_word(&word, &base).unwrap());
        }
        println!();
    }
}
