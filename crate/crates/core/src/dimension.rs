//! Hausdorff dimensions of the attractor and of the sets of points with a
//! given number of expansions.
//!
//! Closed forms are carried symbolically as ratios of logarithms of real
//! algebraic numbers. On `(q_c, q*)`, where no closed form is known, the
//! dimension of the univoque set is bracketed by two block subshifts.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::census::alpha_gap_index;
use crate::census::graph::{component_stats, scc};
use crate::expansion::{alpha, Base, ExpansionError, Regime};
use crate::numeric::{isolate_real_roots, rational_to_f64, IntPolynomial, Rational, RealAlgebraic};
use crate::words::Digit;

/// Decimal places printed unless asked otherwise.
pub const DEFAULT_PRECISION: usize = 6;

/// Approximations are `f64`; more places than this are noise.
pub const MAX_PRECISION: usize = 15;

/// Block length used by [`dim_univoque`] on `(q_c, q*)`.
pub const DEFAULT_BOUNDS_DEPTH: usize = 8;

/// Largest block length accepted by [`dim_univoque_bounds`].
pub const MAX_BOUNDS_DEPTH: usize = 12;

/// Outward rounding applied to every floating bound.
const BOUND_SLACK: f64 = 1e-12;

const MAX_POWER_STEPS: usize = 100_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DimensionError {
    #[error("adjacency matrix must be square with one row per state")]
    Shape,
    #[error("spectral radius {0} is below 1")]
    DegenerateSubshift(String),
    #[error("no point has exactly {k} expansions in this base")]
    EmptySet { k: usize },
    #[error("block depth must lie in 1..={MAX_BOUNDS_DEPTH}, got {0}")]
    Depth(usize),
    #[error(transparent)]
    Expansion(#[from] ExpansionError),
}

/// A subshift of finite type: labelled states and a nonnegative integer
/// adjacency matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SFT {
    states: Vec<String>,
    adjacency: Vec<Vec<u64>>,
}

impl SFT {
    pub fn new(states: Vec<String>, adjacency: Vec<Vec<u64>>) -> Result<SFT, DimensionError> {
        let n = states.len();
        if n == 0 || adjacency.len() != n || adjacency.iter().any(|r| r.len() != n) {
            return Err(DimensionError::Shape);
        }
        Ok(SFT { states, adjacency })
    }

    fn from_rows(states: &[&str], rows: &[&[u64]]) -> SFT {
        SFT::new(
            states.iter().map(|s| s.to_string()).collect(),
            rows.iter().map(|r| r.to_vec()).collect(),
        )
        .expect("well-formed matrix")
    }

    pub fn states(&self) -> &[String] {
        &self.states
    }

    pub fn adjacency(&self) -> &[Vec<u64>] {
        &self.adjacency
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn row(&self, state: &str) -> Option<&[u64]> {
        self.states
            .iter()
            .position(|s| s == state)
            .map(|i| self.adjacency[i].as_slice())
    }

    /// `det(xI − A)`, computed division-free.
    pub fn char_poly(&self) -> IntPolynomial {
        let a: Vec<Vec<BigInt>> = self
            .adjacency
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        let mut c = berkowitz(&a);
        c.reverse();
        IntPolynomial::new(c)
    }

    /// Number of admissible words of each length `1..=len`, over all start
    /// states or from one.
    pub fn walk_counts(&self, start: Option<usize>, len: usize) -> Vec<u128> {
        let n = self.len();
        let mut x: Vec<u128> = match start {
            Some(s) => (0..n).map(|i| u128::from(i == s)).collect(),
            None => vec![1; n],
        };
        let mut out = Vec::with_capacity(len);
        for _ in 0..len {
            out.push(x.iter().sum());
            let mut y = vec![0u128; n];
            for (i, xi) in x.iter().enumerate() {
                for (j, &a) in self.adjacency[i].iter().enumerate() {
                    y[j] += xi * u128::from(a);
                }
            }
            x = y;
        }
        out
    }

    /// Floating enclosure of the spectral radius by power iteration.
    pub fn radius_estimate(&self) -> (f64, f64) {
        let adj: Vec<Vec<usize>> = self
            .adjacency
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .flat_map(|(j, &a)| std::iter::repeat_n(j, a as usize))
                    .collect()
            })
            .collect();
        radius_bounds(&adj)
    }
}

/// Coefficients of `det(xI − A)`, highest degree first.
fn berkowitz(a: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = a.len();
    let mut v = vec![BigInt::one(), -a[0][0].clone()];
    for r in 1..n {
        let mut t = vec![BigInt::one(), -a[r][r].clone()];
        let mut col: Vec<BigInt> = (0..r).map(|i| a[i][r].clone()).collect();
        for _ in 0..r {
            let rc: BigInt = (0..r).map(|j| &a[r][j] * &col[j]).sum();
            t.push(-rc);
            col = (0..r).map(|i| (0..r).map(|j| &a[i][j] * &col[j]).sum()).collect();
        }
        v = (0..r + 2)
            .map(|i| (0..=r.min(i)).map(|j| &t[i - j] * &v[j]).sum())
            .collect();
    }
    v
}

/// Collatz-Wielandt enclosure of the spectral radius of a 0/1 graph given
/// by adjacency lists, taken over its strongly connected components.
fn radius_bounds(adj: &[Vec<usize>]) -> (f64, f64) {
    let (comp, ncomp) = scc(adj);
    let stats = component_stats(adj, &comp, ncomp);
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); ncomp];
    for (v, &c) in comp.iter().enumerate() {
        if stats[c].1 > 0 {
            members[c].push(v);
        }
    }
    let mut local = vec![usize::MAX; adj.len()];
    let mut best = (0.0f64, 0.0f64);
    for nodes in members.iter().filter(|m| !m.is_empty()) {
        for (i, &v) in nodes.iter().enumerate() {
            local[v] = i;
        }
        let sub: Vec<Vec<usize>> = nodes
            .iter()
            .map(|&v| {
                adj[v]
                    .iter()
                    .filter(|&&w| comp[w] == comp[v])
                    .map(|&w| local[w])
                    .collect()
            })
            .collect();
        let (lo, hi) = irreducible_bounds(&sub);
        best = (best.0.max(lo), best.1.max(hi));
    }
    best
}

/// Power iteration on `A + I`, which is primitive when `A` is irreducible.
fn irreducible_bounds(adj: &[Vec<usize>]) -> (f64, f64) {
    let n = adj.len();
    let mut x = vec![1.0f64; n];
    let (mut lo, mut hi) = (0.0f64, f64::INFINITY);
    for _ in 0..MAX_POWER_STEPS {
        let mut y = x.clone();
        for (v, es) in adj.iter().enumerate() {
            for &w in es {
                y[v] += x[w];
            }
        }
        let (mut l, mut h) = (f64::INFINITY, 0.0f64);
        for (yi, xi) in y.iter().zip(&x) {
            let r = yi / xi;
            l = l.min(r);
            h = h.max(r);
        }
        lo = lo.max(l - 1.0);
        hi = hi.min(h - 1.0);
        if hi - lo <= 1e-14 * hi.max(1.0) {
            break;
        }
        let s = y.iter().cloned().fold(0.0, f64::max);
        x = y.into_iter().map(|t| t / s).collect();
    }
    (lo.max(0.0), hi)
}

/// The largest real root of the characteristic polynomial, which for a
/// nonnegative matrix is its spectral radius. A nilpotent matrix gives the
/// rational 0.
pub fn spectral_radius(m: &SFT) -> RealAlgebraic {
    isolate_real_roots(&m.char_poly())
        .into_iter()
        .max()
        .expect("the spectral radius of a nonnegative matrix is an eigenvalue")
}

/// A dimension or entropy known in closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum ExactValue {
    Rational(Rational),
    /// `log x`
    Log(RealAlgebraic),
    /// `scale · log(num) / log(den)`
    LogRatio {
        scale: Rational,
        num: RealAlgebraic,
        den: RealAlgebraic,
    },
}

impl ExactValue {
    fn log_ratio(num: RealAlgebraic, den: RealAlgebraic) -> ExactValue {
        ExactValue::LogRatio {
            scale: Rational::one(),
            num,
            den,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            ExactValue::Rational(r) => rational_to_f64(r),
            ExactValue::Log(x) => x.to_f64().ln(),
            ExactValue::LogRatio { scale, num, den } => rational_to_f64(scale) * num.to_f64().ln() / den.to_f64().ln(),
        }
    }
}

fn name(x: &RealAlgebraic) -> String {
    if let Some(r) = x.as_rational() {
        return r.to_string();
    }
    let named = [
        (RealAlgebraic::critical_base(), "qc"),
        (RealAlgebraic::attractor_threshold(), "qstar"),
        (RealAlgebraic::silver_ratio(), "(1+sqrt2)"),
    ];
    named
        .iter()
        .find(|(c, _)| c == x)
        .map(|(_, s)| s.to_string())
        .unwrap_or_else(|| format!("[{x}]"))
}

impl fmt::Display for ExactValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactValue::Rational(r) => write!(f, "{r}"),
            ExactValue::Log(x) => write!(f, "log {}", name(x)),
            ExactValue::LogRatio { scale, num, den } => {
                if !scale.is_one() {
                    write!(f, "{scale} * ")?;
                }
                write!(f, "log {} / log {}", name(num), name(den))
            }
        }
    }
}

/// A dimension: exact with a decimal approximation, or floating bounds.
#[derive(Clone, Debug, PartialEq)]
#[allow(clippy::large_enum_variant)]
pub enum DimReport {
    Exact {
        value: ExactValue,
        approx: f64,
        precision: usize,
    },
    Bounds {
        lo: f64,
        hi: f64,
        precision: usize,
    },
}

impl DimReport {
    pub fn exact(value: ExactValue, precision: usize) -> DimReport {
        let approx = value.to_f64();
        DimReport::Exact {
            value,
            approx,
            precision: precision.min(MAX_PRECISION),
        }
    }

    pub fn bounds(lo: f64, hi: f64, precision: usize) -> DimReport {
        assert!(lo <= hi, "bounds out of order: {lo} > {hi}");
        DimReport::Bounds {
            lo,
            hi,
            precision: precision.min(MAX_PRECISION),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, DimReport::Exact { .. })
    }

    pub fn exact_value(&self) -> Option<&ExactValue> {
        match self {
            DimReport::Exact { value, .. } => Some(value),
            DimReport::Bounds { .. } => None,
        }
    }

    pub fn lo(&self) -> f64 {
        match self {
            DimReport::Exact { approx, .. } => *approx,
            DimReport::Bounds { lo, .. } => *lo,
        }
    }

    pub fn hi(&self) -> f64 {
        match self {
            DimReport::Exact { approx, .. } => *approx,
            DimReport::Bounds { hi, .. } => *hi,
        }
    }

    /// The approximation, or the midpoint of the bounds.
    pub fn approx(&self) -> f64 {
        (self.lo() + self.hi()) / 2.0
    }

    pub fn precision(&self) -> usize {
        match self {
            DimReport::Exact { precision, .. } | DimReport::Bounds { precision, .. } => *precision,
        }
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo() <= x && x <= self.hi()
    }

    fn decimal(&self, x: f64) -> String {
        format!("{:.*}", self.precision(), x)
    }
}

impl fmt::Display for DimReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DimReport::Exact { value, approx, .. } => write!(f, "{value} ~ {}", self.decimal(*approx)),
            DimReport::Bounds { lo, hi, .. } => write!(f, "[{}, {}]", self.decimal(*lo), self.decimal(*hi)),
        }
    }
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
enum ReportRepr {
    Exact {
        symbolic: String,
        value: String,
        precision: usize,
    },
    Bounds {
        lo: String,
        hi: String,
        precision: usize,
    },
}

impl Serialize for DimReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let precision = self.precision();
        let repr = match self {
            DimReport::Exact { value, approx, .. } => ReportRepr::Exact {
                symbolic: value.to_string(),
                value: self.decimal(*approx),
                precision,
            },
            DimReport::Bounds { lo, hi, .. } => ReportRepr::Bounds {
                lo: self.decimal(*lo),
                hi: self.decimal(*hi),
                precision,
            },
        };
        repr.serialize(s)
    }
}

/// Topological entropy, the logarithm of the spectral radius.
pub fn entropy(m: &SFT) -> Result<DimReport, DimensionError> {
    let rho = spectral_radius(m);
    if rho.cmp_rational(&Rational::one()).is_lt() {
        return Err(DimensionError::DegenerateSubshift(rho.to_string()));
    }
    Ok(DimReport::exact(ExactValue::Log(rho), DEFAULT_PRECISION))
}

/// The three-state subshift over `{0, 1, q}` forbidding `0q`, `10` and
/// nothing after `q`, which contains every unique expansion for `q > q*`.
pub fn super_regime_subshift() -> SFT {
    SFT::from_rows(&["0", "1", "q"], &[&[1, 1, 0], &[0, 1, 1], &[1, 1, 1]])
}

/// The seven-state subshift on two-letter blocks that carries the unique
/// expansions at `q = 1 + √2`.
pub fn silver_subshift() -> SFT {
    SFT::from_rows(
        &["00", "01", "11", "1q", "q0", "q1", "qq"],
        &[
            &[1, 1, 0, 0, 0, 0, 0],
            &[0, 0, 1, 1, 0, 0, 0],
            &[0, 0, 1, 1, 0, 0, 0],
            &[0, 0, 0, 0, 1, 1, 0],
            &[0, 1, 0, 0, 0, 0, 0],
            &[0, 0, 1, 1, 0, 0, 0],
            &[0, 0, 0, 0, 1, 1, 1],
        ],
    )
}

fn is_at_most_threshold(base: &Base) -> bool {
    base.regime() != Regime::Super
}

fn is_threshold(base: &Base) -> bool {
    base.real() == &RealAlgebraic::attractor_threshold()
}

/// `dim_H E_q`: 1 while the attractor is an interval, `log q*/log q` after.
pub fn dim_attractor(base: &Base, precision: usize) -> DimReport {
    if is_at_most_threshold(base) {
        return DimReport::exact(ExactValue::Rational(Rational::one()), precision);
    }
    DimReport::exact(
        ExactValue::log_ratio(RealAlgebraic::attractor_threshold(), base.real().clone()),
        precision,
    )
}

/// `dim_H U_q`: 0 up to `q_c`, `log q_c/log q` from `q*` on, and block
/// subshift bounds in between.
pub fn dim_univoque(base: &Base, precision: usize) -> Result<DimReport, DimensionError> {
    match base.regime() {
        Regime::SubCritical => Ok(DimReport::exact(ExactValue::Rational(Rational::zero()), precision)),
        Regime::Middle if !is_threshold(base) => {
            let b = dim_univoque_bounds(base, DEFAULT_BOUNDS_DEPTH)?;
            Ok(DimReport::bounds(b.lo(), b.hi(), precision))
        }
        _ => Ok(DimReport::exact(
            ExactValue::log_ratio(RealAlgebraic::critical_base(), base.real().clone()),
            precision,
        )),
    }
}

/// `dim_H U_q^(k)`, the same as `dim_H U_q` whenever the set is nonempty.
pub fn dim_multi(base: &Base, k: usize, precision: usize) -> Result<DimReport, DimensionError> {
    assert!(k >= 1, "k must be positive");
    if k >= 2 && base.regime() == Regime::SubCritical {
        return Err(DimensionError::EmptySet { k });
    }
    dim_univoque(base, precision)
}

/// `dim_H` of the points with a continuum of expansions: full, as for `E_q`.
pub fn dim_continuum(base: &Base, precision: usize) -> DimReport {
    dim_attractor(base, precision)
}

/// The least `m ≥ 1` with `α(q) > Q 1^m Q 0^∞` and the lower bound
/// `log 2 / ((m + 2) log q)` it gives for `dim_H U_q`.
pub fn delta_lower_bound(base: &Base) -> Result<(usize, DimReport), DimensionError> {
    if base.regime() != Regime::Middle {
        return Err(ExpansionError::UnsupportedRegime.into());
    }
    let m = alpha_gap_index(base)?;
    let value = ExactValue::LogRatio {
        scale: Rational::new(BigInt::one(), BigInt::from(m + 2)),
        num: RealAlgebraic::from_int(2),
        den: base.real().clone(),
    };
    Ok((m, DimReport::exact(value, DEFAULT_PRECISION)))
}

fn code(d: Digit) -> u8 {
    match d {
        Digit::D0 => 0,
        Digit::D1 => 1,
        Digit::DQ => 2,
    }
}

/// Window constraints at block length `m`, as digit codes compared
/// lexicographically.
struct Windows {
    after_zero: Vec<u8>,
    ones: Vec<u8>,
    alpha: Vec<u8>,
    after_q: Vec<u8>,
}

impl Windows {
    fn new(alpha: &[u8], m: usize) -> Windows {
        let mut after_zero = vec![1];
        after_zero.extend_from_slice(&alpha[..m - 1]);
        let mut after_q = vec![0];
        after_q.extend(std::iter::repeat_n(2, m - 1));
        Windows {
            after_zero,
            ones: vec![1; m],
            alpha: alpha[..m].to_vec(),
            after_q,
        }
    }

    /// Whether the digit `d` may be followed by the `m` digits `t`. The
    /// strict form implies the conditions for all continuations; the
    /// non-strict form is implied by them.
    fn allows(&self, d: u8, t: &[u8], strict: bool) -> bool {
        match (d, strict) {
            (0, true) => t < &self.after_zero[..],
            (0, false) => t <= &self.after_zero[..],
            (1, true) => &self.ones[..] < t && t < &self.alpha[..],
            (1, false) => &self.ones[..] <= t && t <= &self.alpha[..],
            (_, true) => t > &self.after_q[..],
            (_, false) => true,
        }
    }
}

/// Spectral radius bounds of the block subshift on length-`m` words whose
/// `(m+1)`-windows all pass [`Windows::allows`].
fn block_radius(w: &Windows, m: usize, strict: bool) -> (f64, f64) {
    let states = 3usize.pow(m as u32);
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); states];
    let mut digits = vec![0u8; m + 1];
    for idx in 0..states * 3 {
        let mut r = idx;
        for i in (0..=m).rev() {
            digits[i] = (r % 3) as u8;
            r /= 3;
        }
        if w.allows(digits[0], &digits[1..], strict) {
            adj[idx / 3].push(idx % states);
        }
    }
    radius_bounds(&adj)
}

/// Bounds for `dim_H U_q` on `(q_c, q*]` from block subshifts of length up
/// to `m` sandwiching the set of unique expansions, combined with
/// [`delta_lower_bound`].
pub fn dim_univoque_bounds(base: &Base, m: usize) -> Result<DimReport, DimensionError> {
    if base.regime() != Regime::Middle {
        return Err(ExpansionError::UnsupportedRegime.into());
    }
    if m == 0 || m > MAX_BOUNDS_DEPTH {
        return Err(DimensionError::Depth(m));
    }
    let a: Vec<u8> = alpha(base, m)?.prefix.digits().iter().map(|&d| code(d)).collect();
    let log_q = base.to_f64().ln();
    let (_, delta) = delta_lower_bound(base)?;
    let mut lo = (delta.lo() - BOUND_SLACK).max(0.0);
    let mut hi = 1.0f64;
    for j in 1..=m {
        let w = Windows::new(&a, j);
        let (rho_lo, _) = block_radius(&w, j, true);
        let (_, rho_hi) = block_radius(&w, j, false);
        if rho_lo > 1.0 {
            lo = lo.max(rho_lo.ln() / log_q - BOUND_SLACK);
        }
        hi = hi.min(rho_hi.max(1.0).ln() / log_q + BOUND_SLACK);
    }
    Ok(DimReport::bounds(lo, hi.max(lo), DEFAULT_PRECISION))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;

    fn b(s: &str) -> Base {
        s.parse().unwrap()
    }

    fn square(n: usize, f: impl Fn(usize, usize) -> u64) -> SFT {
        let states = (0..n).map(|i| i.to_string()).collect();
        SFT::new(states, (0..n).map(|i| (0..n).map(|j| f(i, j)).collect()).collect()).unwrap()
    }

    #[test]
    fn rejects_bad_shapes() {
        assert_eq!(SFT::new(vec!["a".into()], vec![vec![1, 1]]), Err(DimensionError::Shape));
        assert_eq!(SFT::new(vec![], vec![]), Err(DimensionError::Shape));
    }

    #[test]
    fn berkowitz_small_cases() {
        let m = square(2, |i, j| [[1, 2], [3, 4]][i][j]);
        assert_eq!(m.char_poly(), IntPolynomial::from_i64(&[-2, -5, 1]));
        assert_eq!(
            super_regime_subshift().char_poly(),
            IntPolynomial::from_i64(&[-1, 2, -3, 1])
        );
    }

    #[test]
    fn radius_of_the_three_state_subshift_is_qc() {
        assert_eq!(
            spectral_radius(&super_regime_subshift()),
            RealAlgebraic::critical_base()
        );
    }

    #[test]
    fn trivial_radii() {
        assert_eq!(
            spectral_radius(&square(3, |i, j| u64::from(i == j))),
            RealAlgebraic::from_int(1)
        );
        assert_eq!(spectral_radius(&square(3, |_, _| 1)), RealAlgebraic::from_int(3));
        assert_eq!(spectral_radius(&square(3, |_, _| 0)), RealAlgebraic::from_int(0));
        assert_eq!(
            spectral_radius(&square(3, |i, j| u64::from(j == i + 1))),
            RealAlgebraic::from_int(0)
        );
    }

    #[test]
    fn silver_subshift_rows_and_radius() {
        let s = silver_subshift();
        assert_eq!(s.row("00"), Some(&[1, 1, 0, 0, 0, 0, 0][..]));
        assert_eq!(s.row("qq"), Some(&[0, 0, 0, 0, 1, 1, 1][..]));
        let rho = spectral_radius(&s);
        // The radius is the real root of x³ − x² − x − 1.
        assert_eq!(
            rho,
            RealAlgebraic::new(&IntPolynomial::from_i64(&[-1, -1, -1, 1]), rat(18, 10), rat(19, 10)).unwrap()
        );
        assert!((rho.to_f64() - 1.839287).abs() < 1e-6);
        let (lo, hi) = s.radius_estimate();
        assert!(lo <= rho.to_f64() + 1e-12 && rho.to_f64() <= hi + 1e-12);
    }

    #[test]
    fn entropies() {
        let h = entropy(&super_regime_subshift()).unwrap();
        assert!((h.approx() - 0.843598).abs() < 1e-6);
        let perm = square(3, |i, j| u64::from(j == (i + 1) % 3));
        assert_eq!(entropy(&perm).unwrap().approx(), 0.0);
        assert!((entropy(&square(3, |_, _| 1)).unwrap().approx() - 3f64.ln()).abs() < 1e-15);
        assert!(matches!(
            entropy(&square(2, |_, _| 0)),
            Err(DimensionError::DegenerateSubshift(_))
        ));
        let silver = entropy(&silver_subshift()).unwrap().approx() / Base::silver().to_f64().ln();
        assert!((silver - 0.6913956).abs() < 1e-7, "{silver}");
        assert!((silver - 0.691404).abs() < 1e-5);
    }

    #[test]
    fn closed_forms_at_three() {
        let three = b("3");
        assert!((dim_univoque(&three, 6).unwrap().approx() - 0.767877).abs() < 1e-6);
        assert!((dim_attractor(&three, 6).approx() - 0.876036).abs() < 1e-6);
        let u = dim_univoque(&three, 6).unwrap();
        for k in 1..=6 {
            assert_eq!(dim_multi(&three, k, 6).unwrap(), u);
        }
        assert_eq!(dim_continuum(&three, 6), dim_attractor(&three, 6));
        assert_eq!(u.to_string(), "log qc / log 3 ~ 0.767877");
    }

    #[test]
    fn closed_forms_below_threshold() {
        let one = ExactValue::Rational(Rational::one());
        for q in ["6/5", "2", "qstar", "silver"] {
            assert_eq!(dim_attractor(&b(q), 6).exact_value(), Some(&one));
        }
        assert_eq!(
            dim_univoque(&b("2"), 6).unwrap().exact_value(),
            Some(&ExactValue::Rational(Rational::zero()))
        );
        assert_eq!(dim_multi(&b("2"), 2, 6), Err(DimensionError::EmptySet { k: 2 }));
        assert_eq!(
            dim_multi(&Base::critical(), 3, 6),
            Err(DimensionError::EmptySet { k: 3 })
        );
        let at_threshold = dim_univoque(&Base::attractor_threshold(), 6).unwrap();
        assert!(at_threshold.is_exact());
        assert!((at_threshold.approx() - 0.876536).abs() < 1e-6);
    }

    #[test]
    fn delta_bounds() {
        let (m, d) = delta_lower_bound(&Base::silver()).unwrap();
        assert_eq!(m, 1);
        assert!((d.approx() - 0.2621).abs() < 5e-5);
        let (m, d) = delta_lower_bound(&Base::attractor_threshold()).unwrap();
        assert_eq!(m, 1);
        assert!((d.approx() - 0.2401).abs() < 5e-5);
        assert!(delta_lower_bound(&b("3")).is_err());
        assert!(delta_lower_bound(&b("2")).is_err());
    }

    #[test]
    fn bounds_at_silver_and_threshold() {
        let s = dim_univoque_bounds(&Base::silver(), 8).unwrap();
        assert!(s.contains(0.691404), "{s}");
        assert!(s.hi() < 1.0);
        let t = dim_univoque_bounds(&Base::attractor_threshold(), 8).unwrap();
        let exact = dim_univoque(&Base::attractor_threshold(), 6).unwrap().approx();
        assert!(t.contains(exact), "{t} vs {exact}");
        assert!(dim_univoque_bounds(&b("3"), 4).is_err());
        assert_eq!(dim_univoque_bounds(&Base::silver(), 0), Err(DimensionError::Depth(0)));
    }

    #[test]
    fn bounds_nest_with_depth() {
        for base in [Base::silver(), b("12/5"), b("5/2")] {
            let mut prev = dim_univoque_bounds(&base, 1).unwrap();
            for m in 2..=8 {
                let cur = dim_univoque_bounds(&base, m).unwrap();
                assert!(
                    prev.lo() <= cur.lo() && cur.hi() <= prev.hi(),
                    "{base:?} m={m}: {prev} then {cur}"
                );
                prev = cur;
            }
        }
    }

    #[test]
    fn walks_from_one_state_grow_like_all_walks() {
        let s = super_regime_subshift();
        let all = s.walk_counts(None, 21);
        let from_one = s.walk_counts(Some(1), 21);
        let g_all = all[20] as f64 / all[19] as f64;
        let g_one = from_one[20] as f64 / from_one[19] as f64;
        assert!((g_all - g_one).abs() < 1e-6, "{g_all} {g_one}");
    }

    #[test]
    fn report_json() {
        let r = dim_attractor(&b("3"), 6);
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["kind"], "exact");
        assert_eq!(v["value"], "0.876036");
        assert_eq!(v["symbolic"], "log qstar / log 3");
        let bnd = DimReport::bounds(0.25, 0.5, 3);
        assert_eq!(serde_json::to_value(&bnd).unwrap()["hi"], "0.500");
    }
}
