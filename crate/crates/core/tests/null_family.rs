//! Expansions of z_k = (0^k q^∞)_2, the points with countably many expansions at q = 2.

use std::collections::BTreeSet;

use triexp::census::{classify, default_node_cap, expansion_prefixes, null_infinite_check, Cardinality};
use triexp::expansion::{eval, Base};
use triexp::numeric::rat;

fn z(k: usize, base: &Base) -> triexp::numeric::FieldElement {
    eval(&format!("{}(q)*", "0".repeat(k)).parse().unwrap(), base)
}

/// Depth-`n` prefixes of 0^k q^∞, 0^(k-1) 1^∞, 0^(k-1) 1^m 0 q^∞ and 0^(k-1) 1^(m-1) q 0^∞, m ≥ 1.
fn four_families(k: usize, n: usize) -> BTreeSet<String> {
    let seq = |s: String, tail: char| s.chars().chain(std::iter::repeat(tail)).take(n).collect::<String>();
    let z = "0".repeat(k - 1);
    let mut out = BTreeSet::from([seq(format!("{z}0"), 'q'), seq(z.clone(), '1')]);
    for m in 1..=n {
        out.insert(seq(format!("{z}{}0", "1".repeat(m)), 'q'));
        out.insert(seq(format!("{z}{}q", "1".repeat(m - 1)), '0'));
    }
    out
}

/// All depth-`n` digit strings keeping the remainder in [0, 2], by exhaustive branching.
fn brute(k: usize, n: usize) -> BTreeSet<String> {
    let mut level = vec![(String::new(), rat(1, 1) / rat(1 << (k - 1), 1))];
    for _ in 0..n {
        let mut next = Vec::new();
        for (p, r) in level {
            for (c, d) in [('0', 0), ('1', 1), ('q', 2)] {
                let y = rat(2, 1) * &r - rat(d, 1);
                if y >= rat(0, 1) && y <= rat(2, 1) {
                    next.push((format!("{p}{c}"), y));
                }
            }
        }
        level = next;
    }
    level.into_iter().map(|(p, _)| p).collect()
}

#[test]
fn z_k_are_null_infinite() {
    let two: Base = "2".parse().unwrap();
    for k in 1..=5 {
        let x = z(k, &two);
        assert_eq!(x.as_rational(), Some(rat(1, 1) / rat(1 << (k - 1), 1)));
        assert_eq!(classify(&x, &two, default_node_cap()), Cardinality::CountablyInfinite);
        assert!(null_infinite_check(&x, &two, default_node_cap()).unwrap().null_infinite);
    }
}

#[test]
fn prefixes_match_exhaustive_branching() {
    let two: Base = "2".parse().unwrap();
    for k in 1..=4 {
        for n in [6, 8, 10] {
            let got: BTreeSet<String> = expansion_prefixes(&z(k, &two), &two, n)
                .iter()
                .map(|w| w.to_string())
                .collect();
            assert_eq!(got, brute(k, n), "k = {k}, depth {n}");
        }
    }
}

#[test]
fn four_families_are_complete_only_for_k_one() {
    assert_eq!(brute(1, 8), four_families(1, 8));
    for k in 2..=4 {
        for n in [8, 10] {
            let all = brute(k, n);
            let fam = four_families(k, n);
            assert!(fam.is_subset(&all), "k = {k}");
            // z_k = 2^(1-k) = (0^(k-2) 1 0^∞)_2 is the one expansion left out.
            let missing: BTreeSet<String> = all.difference(&fam).cloned().collect();
            let one_zero: String = "0".repeat(k - 2) + "1" + &"0".repeat(n + 1 - k);
            assert_eq!(missing, BTreeSet::from([one_zero]), "k = {k}, depth {n}");
        }
    }
}
