//! Library results checked against independent brute-force or closed-form computations.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_bigint::BigInt;
use triexp::census::{
    alpha_gap_index, build_graph, classify, count_prefixes_to_depth, default_node_cap, witness_for_bk,
};
use triexp::dimension::{
    delta_lower_bound, dim_univoque_bounds, entropy, silver_subshift, spectral_radius, super_regime_subshift,
};
use triexp::expansion::{
    alpha, eval, greedy_digits, quasi_greedy_digits, switch_region, unique_membership_word, Base, UniquenessVerdict,
};
use triexp::numeric::{rat, sign_of_poly_at, IntPolynomial, Rational, RealAlgebraic, Sign};
use triexp::words::{Digit, EPWord};

fn w(s: &str) -> EPWord {
    s.parse().unwrap()
}

fn b(s: &str) -> Base {
    s.parse().unwrap()
}

fn digit_value(d: Digit, q: &Rational) -> Rational {
    match d {
        Digit::D0 => rat(0, 1),
        Digit::D1 => rat(1, 1),
        Digit::DQ => q.clone(),
    }
}

/// All length-`n` digit strings whose remainders stay in `[0, M]` for a rational base.
fn brute_prefixes(x: &Rational, q: &Rational, n: usize) -> Vec<(Vec<Digit>, Rational)> {
    let m = q / (q - rat(1, 1));
    let mut level = vec![(Vec::new(), x.clone())];
    for _ in 0..n {
        let mut next = Vec::new();
        for (p, r) in level {
            for d in Digit::ALL {
                let y = q * &r - digit_value(d, q);
                if y >= rat(0, 1) && y <= m {
                    let mut p2 = p.clone();
                    p2.push(d);
                    next.push((p2, y));
                }
            }
        }
        level = next;
    }
    level
}

#[test]
fn threshold_polynomial_signs() {
    let p = IntPolynomial::from_i64(&[-1, 2, -3, 1]);
    assert_eq!(p.eval(&rat(5, 2)), rat(7, 8));
    assert_eq!(p.eval(&rat(2, 1)), rat(-1, 1));
    assert_eq!(
        sign_of_poly_at(&p, &RealAlgebraic::from_rational(rat(5, 2))),
        Sign::Positive
    );
    assert_eq!(sign_of_poly_at(&p, &RealAlgebraic::from_int(2)), Sign::Negative);
}

#[test]
fn golden_square_refinement() {
    let exact = (3.0 + 5f64.sqrt()) / 2.0;
    let iv = RealAlgebraic::attractor_threshold().refine(&rat(1, 100_000));
    let (lo, hi) = iv.to_f64_bounds();
    assert!(lo <= exact && exact <= hi);
    assert!(lo > 2.61802 && hi < 2.61804);
}

#[test]
fn word_comparison_and_tails() {
    let a = w("(q1)*");
    let probe = w("q1q(0)*");
    assert_eq!(a.lex_compare(&probe), Ordering::Greater);
    let first_difference = (0..10).find(|&i| a.at(i) != probe.at(i)).unwrap();
    assert_eq!(first_difference, 3);
    let v = w("0q(1q)*");
    let naive: BTreeSet<Vec<Digit>> = (0..12).map(|s| (0..40).map(|i| v.at(s + i)).collect()).collect();
    // q(1q)* and (q1)* are one sequence.
    assert_eq!(naive.len(), 3);
    assert_eq!(v.distinct_tails().len(), 3);
}

#[test]
fn evaluation_and_greedy_at_two() {
    let two = b("2");
    // (1/2) / (1 - 1/8)
    let series = rat(1, 2) / (rat(1, 1) - rat(1, 8));
    assert_eq!(series, rat(4, 7));
    let x = eval(&w("(100)*"), &two);
    assert_eq!(x.as_rational(), Some(series.clone()));
    let run = greedy_digits(&x, &two, 3).unwrap();
    assert_eq!(run.digits.to_string(), "100");
    assert_eq!(run.remainder.as_rational(), Some(series));
}

#[test]
fn quasi_greedy_of_one_at_two() {
    let q = rat(2, 1);
    let best = brute_prefixes(&rat(1, 1), &q, 6)
        .into_iter()
        .filter(|(_, r)| r > &rat(0, 1))
        .map(|(p, _)| p)
        .max()
        .unwrap();
    assert_eq!(best, vec![Digit::D1; 6]);
    let two = b("2");
    let x = two.parse_element("q - 1").unwrap();
    assert_eq!(quasi_greedy_digits(&x, &two, 6).unwrap().digits(), &best[..]);
    assert_eq!(alpha(&two, 6).unwrap().closure.unwrap().to_string(), "(1)*");
}

#[test]
fn switch_regions_from_endpoints() {
    for (q, low, high) in [
        (rat(2, 1), (rat(1, 2), rat(1, 1)), (rat(1, 1), rat(3, 2))),
        (rat(5, 2), (rat(2, 5), rat(2, 3)), (rat(1, 1), rat(16, 15))),
    ] {
        let m = &q / (&q - rat(1, 1));
        // φ_0 ∩ φ_1 = [1/q, M/q], φ_1 ∩ φ_q = [1, (1 + M)/q].
        assert_eq!((rat(1, 1) / &q, &m / &q), low);
        assert_eq!((rat(1, 1), (rat(1, 1) + &m) / &q), high);
        let base = Base::from_rational(q).unwrap();
        let s = switch_region(&base);
        let pair = |p: Option<(triexp::numeric::FieldElement, triexp::numeric::FieldElement)>| {
            let (a, c) = p.unwrap();
            (a.as_rational().unwrap(), c.as_rational().unwrap())
        };
        assert_eq!(pair(s.low), low);
        assert_eq!(pair(s.high), high);
    }
}

#[test]
fn unique_words_agree_with_census() {
    for (word, base) in [("(1q)*", b("3")), ("(q11)*", Base::silver())] {
        let v = w(word);
        assert_eq!(unique_membership_word(&v, &base).unwrap(), UniquenessVerdict::Unique);
        assert_eq!(
            classify(&eval(&v, &base), &base, default_node_cap()).finite_count(),
            Some(1)
        );
    }
}

#[test]
fn follower_graph_of_a_half_at_three() {
    let three = b("3");
    let g = build_graph(&eval(&w("0(q)*"), &three), &three, 100).unwrap();
    let mut edges = BTreeSet::new();
    for v in 0..g.len() {
        for &(d, t) in g.edges(v) {
            let from = g.nodes()[v].as_rational().unwrap();
            let to = g.nodes()[t].as_rational().unwrap();
            assert_eq!(&rat(3, 1) * &from - digit_value(d, &rat(3, 1)), to);
            edges.insert((from.to_string(), d.to_char(), to.to_string()));
        }
    }
    let want: BTreeSet<(String, char, String)> = [("1/2", '0', "3/2"), ("1/2", '1', "1/2"), ("3/2", 'q', "3/2")]
        .iter()
        .map(|(a, d, c)| (a.to_string(), *d, c.to_string()))
        .collect();
    assert_eq!(edges, want);
}

#[test]
fn silver_witness_for_two() {
    let silver = Base::silver();
    assert_eq!(alpha_gap_index(&silver).unwrap(), 1);
    let v = witness_for_bk(&silver, 2, default_node_cap()).unwrap();
    assert_eq!(v, w("0q(11q)*"));
}

#[test]
fn prefix_counts_match_brute_force() {
    let three = b("3");
    let x = eval(&w("0qq(1q)*"), &three);
    assert_eq!(count_prefixes_to_depth(&x, &three, 12), 3);
    let two = b("2");
    let y = eval(&w("(100)*"), &two);
    let mut last = 0;
    for d in [4, 8, 12] {
        let brute = brute_prefixes(&rat(4, 7), &rat(2, 1), d).len() as u128;
        assert_eq!(count_prefixes_to_depth(&y, &two, d), brute);
        assert!(brute > last);
        last = brute;
    }
}

#[test]
fn three_state_characteristic_polynomial() {
    // Cofactor expansion of det(xI - A) for A = [[1,1,0],[0,1,1],[1,1,1]]:
    // (x-1)((x-1)^2 - 1) + (-1)(0·(x-1) + 1) = x^3 - 3x^2 + 2x - 1.
    let a = super_regime_subshift();
    assert_eq!(a.adjacency(), &[vec![1, 1, 0], vec![0, 1, 1], vec![1, 1, 1]]);
    assert_eq!(a.char_poly().coeffs(), &[-1, 2, -3, 1].map(BigInt::from)[..]);
    let rho = spectral_radius(&a);
    assert_eq!(rho, RealAlgebraic::critical_base());
    assert!((rho.to_f64().ln() - 0.8435987).abs() < 1e-7);
    // The commonly quoted 0.84365 is off in the fifth decimal.
    assert!((rho.to_f64().ln() - 0.84365).abs() < 6e-5);
}

fn power_iteration(a: &[Vec<u64>]) -> f64 {
    let n = a.len();
    let mut v = vec![1.0f64; n];
    let mut rho = 0.0;
    for _ in 0..2000 {
        let u: Vec<f64> = (0..n)
            .map(|i| (0..n).map(|j| a[i][j] as f64 * v[j]).sum::<f64>() + v[i])
            .collect();
        let norm = u.iter().cloned().fold(0.0, f64::max);
        rho = norm / v.iter().cloned().fold(0.0, f64::max);
        v = u.iter().map(|x| x / norm).collect();
    }
    rho - 1.0
}

#[test]
fn silver_subshift_radius() {
    let s = silver_subshift();
    let rho = power_iteration(s.adjacency());
    assert!((rho - 1.83929).abs() < 5e-6);
    assert!((spectral_radius(&s).to_f64() - rho).abs() < 1e-9);
    let h = entropy(&s).unwrap().approx();
    assert!((h - rho.ln()).abs() < 1e-12);
    let ratio = h / (1.0 + 2f64.sqrt()).ln();
    assert!((ratio - 0.691404).abs() < 1e-5);
}

#[test]
fn delta_bounds_in_closed_form() {
    for (base, want) in [(Base::silver(), 0.2621), (Base::attractor_threshold(), 0.2401)] {
        let (m, d) = delta_lower_bound(&base).unwrap();
        let exact = 2f64.ln() / (3.0 * base.to_f64().ln());
        assert_eq!(m, 1);
        assert!((d.approx() - exact).abs() < 1e-12);
        assert!((exact - want).abs() < 5e-5);
    }
}

#[test]
fn bounds_at_the_threshold_contain_the_boundary_value() {
    let qs = Base::attractor_threshold();
    let r = dim_univoque_bounds(&qs, 8).unwrap();
    let boundary = RealAlgebraic::critical_base().to_f64().ln() / qs.to_f64().ln();
    assert!((boundary - 0.8765357).abs() < 1e-7);
    assert!((boundary - 0.8766).abs() < 1e-4);
    assert!(r.contains(boundary), "{r}");
}
