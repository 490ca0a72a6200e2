use std::collections::{BTreeSet, VecDeque};

use proptest::prelude::*;
use triexp::census::{build_graph, classify, count_prefixes_to_depth, default_node_cap, Cardinality};
use triexp::expansion::{eval, Base};
use triexp::words::{Digit, EPWord};

fn word() -> impl Strategy<Value = EPWord> {
    let d = |lo| prop::collection::vec(prop::sample::select(Digit::ALL.to_vec()), lo..=4);
    (d(0), d(1)).prop_map(|(p, q)| EPWord::new(&p, &q).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn below_two_unique_or_continuum(w in word()) {
        let base: Base = "3/2".parse().unwrap();
        let c = classify(&eval(&w, &base), &base, default_node_cap());
        prop_assert!(matches!(c, Cardinality::Finite { k: 1, .. } | Cardinality::Continuum), "{}: {}", w, c.label());
    }

    #[test]
    fn no_finite_multiplicity_up_to_critical(w in word(), b in prop::sample::select(vec!["2", "11/5", "23/10", "qc"])) {
        let base: Base = b.parse().unwrap();
        let c = classify(&eval(&w, &base), &base, default_node_cap());
        prop_assert!(!matches!(c.finite_count(), Some(k) if k >= 2), "{} at {}: {}", w, b, c.label());
    }

    #[test]
    fn finite_witnesses_are_sound(w in word(), b in prop::sample::select(vec!["2", "silver", "5/2", "qstar", "3", "4"])) {
        let base: Base = b.parse().unwrap();
        let x = eval(&w, &base);
        if let Cardinality::Finite { k, witnesses } = classify(&x, &base, default_node_cap()) {
            prop_assert_eq!(witnesses.len() as u128, k);
            prop_assert_eq!(witnesses.iter().collect::<BTreeSet<_>>().len() as u128, k);
            prop_assert!(witnesses.contains(&w));
            for v in &witnesses {
                prop_assert_eq!(eval(v, &base), x.clone());
            }
        }
    }

    #[test]
    fn pruned_graph_invariants(w in word(), b in prop::sample::select(vec!["2", "qc", "silver", "qstar", "3"])) {
        let base: Base = b.parse().unwrap();
        let x = eval(&w, &base);
        let g = build_graph(&x, &base, default_node_cap()).unwrap();
        let root = g.root().expect("an expansion exists");
        prop_assert_eq!(&g.nodes()[root], &x);
        let mut seen = vec![false; g.len()];
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(v) = queue.pop_front() {
            prop_assert!(!g.edges(v).is_empty());
            for &(d, t) in g.edges(v) {
                prop_assert_eq!(&base.shift(&g.nodes()[v], d), &g.nodes()[t]);
                prop_assert!(base.in_hull(&g.nodes()[t]));
                if !seen[t] {
                    seen[t] = true;
                    queue.push_back(t);
                }
            }
        }
        prop_assert!(seen.iter().all(|&s| s));
    }
}

#[test]
fn finite_counts_stabilise_for_the_three_family() {
    let base: Base = "3".parse().unwrap();
    for k in 1..=6 {
        let w: EPWord = format!("0{}(1q)*", "q".repeat(k - 1)).parse().unwrap();
        let x = eval(&w, &base);
        assert_eq!(classify(&x, &base, default_node_cap()).finite_count(), Some(k as u128));
        for depth in [k + 8, k + 16, k + 24] {
            assert_eq!(
                count_prefixes_to_depth(&x, &base, depth),
                k as u128,
                "k = {k}, depth {depth}"
            );
        }
    }
}

#[test]
fn witnesses_are_linked_by_sibling_moves() {
    let base: Base = "3".parse().unwrap();
    for k in 1..=4 {
        let w: EPWord = format!("0{}(1q)*", "q".repeat(k - 1)).parse().unwrap();
        let Cardinality::Finite { witnesses, .. } = classify(&eval(&w, &base), &base, default_node_cap()) else {
            panic!("finite");
        };
        let mut reached = BTreeSet::from([w.clone()]);
        let mut queue = VecDeque::from([w]);
        while let Some(v) = queue.pop_front() {
            for s in v.substitute_siblings(2 * k + 4) {
                if witnesses.contains(&s) && reached.insert(s.clone()) {
                    queue.push_back(s);
                }
            }
        }
        assert_eq!(reached, witnesses.into_iter().collect::<BTreeSet<_>>(), "k = {k}");
    }
}

#[test]
fn countable_and_continuum_counts_keep_growing() {
    let cases = [
        ("3", "0(q)*"),
        ("2", "0(q)*"),
        ("3/2", "(100)*"),
        ("5/2", "(100)*"),
        ("3", "(100)*"),
    ];
    for (b, w) in cases {
        let base: Base = b.parse().unwrap();
        let x = eval(&w.parse().unwrap(), &base);
        let counts: Vec<u128> = [8, 16, 24]
            .iter()
            .map(|&d| count_prefixes_to_depth(&x, &base, d))
            .collect();
        assert!(counts.windows(2).all(|p| p[0] < p[1]), "{w} at {b}: {counts:?}");
    }
}
