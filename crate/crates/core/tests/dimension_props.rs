use proptest::prelude::*;
use triexp::dimension::{
    delta_lower_bound, dim_attractor, dim_multi, dim_univoque, dim_univoque_bounds, entropy, silver_subshift,
    super_regime_subshift, DimReport, ExactValue,
};
use triexp::expansion::Base;
use triexp::numeric::rat;

fn growth(counts: &[u128]) -> f64 {
    let n = counts.len();
    counts[n - 1] as f64 / counts[n - 2] as f64
}

#[test]
fn follower_set_of_one_has_full_growth() {
    let a = super_regime_subshift();
    let one = a.states().iter().position(|s| s == "1").unwrap();
    let all = a.walk_counts(None, 20);
    let from_one = a.walk_counts(Some(one), 20);
    assert!((growth(&all) - growth(&from_one)).abs() < 1e-6);
}

#[test]
fn silver_sandwich() {
    let silver = Base::silver();
    let (_, delta) = delta_lower_bound(&silver).unwrap();
    let e = entropy(&silver_subshift()).unwrap().approx() / silver.to_f64().ln();
    assert!(delta.approx() <= e && e <= 1.0);
    let b = dim_univoque_bounds(&silver, 8).unwrap();
    assert!(b.contains(e), "{b}");
}

#[test]
fn frozen_bounds() {
    // Values of the block-subshift sandwich at block length 8.
    for (base, lo, hi) in [
        (Base::silver(), 0.526153, 0.786440),
        ("12/5".parse().unwrap(), 0.446905, 0.765820),
    ] {
        let b = dim_univoque_bounds(&base, 8).unwrap();
        assert!((b.lo() - lo).abs() < 1e-6 && (b.hi() - hi).abs() < 1e-6, "{b}");
    }
}

#[test]
fn exact_values_away_from_the_middle() {
    let three: Base = "3".parse().unwrap();
    assert!((dim_attractor(&three, 6).approx() - 0.876036).abs() < 1e-5);
    assert!((dim_univoque(&three, 6).unwrap().approx() - 0.767877).abs() < 1e-5);
    assert_eq!(
        dim_univoque(&"2".parse().unwrap(), 6).unwrap(),
        DimReport::exact(ExactValue::Rational(rat(0, 1)), 6)
    );
    assert_eq!(dim_attractor(&Base::silver(), 6).approx(), 1.0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn univoque_dimension_decreases_past_the_threshold(a in 2619i64..6000, gap in 1i64..2000) {
        let lo = Base::from_rational(rat(a, 1000)).unwrap();
        let hi = Base::from_rational(rat(a + gap, 1000)).unwrap();
        prop_assert!(dim_univoque(&hi, 6).unwrap().approx() < dim_univoque(&lo, 6).unwrap().approx());
    }

    #[test]
    fn multi_dimension_is_independent_of_k(a in 2325i64..5000, k in 2usize..8) {
        let base = Base::from_rational(rat(a, 1000)).unwrap();
        prop_assert_eq!(dim_multi(&base, k, 6).unwrap(), dim_multi(&base, 2, 6).unwrap());
    }

    #[test]
    fn bounds_nest_as_blocks_lengthen(a in 2325i64..2618) {
        let base = Base::from_rational(rat(a, 1000)).unwrap();
        let mut prev = dim_univoque_bounds(&base, 1).unwrap();
        for m in 2..=6 {
            let b = dim_univoque_bounds(&base, m).unwrap();
            prop_assert!(prev.lo() <= b.lo() && b.hi() <= prev.hi(), "q = {}/1000, m = {}: {} then {}", a, m, prev, b);
            prop_assert!(b.lo() <= b.hi());
            prev = b;
        }
    }
}
