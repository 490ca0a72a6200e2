//! Numeric meaning of words in a base `q > 1`: evaluation, greedy and
//! quasi-greedy digit generation, `α(q)`, the switch region and the
//! lexicographic test for unique expansions.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::census::ContinuumCore;
use crate::numeric::{
    parse_rational, rat, sign_of_poly_at, FieldElement, IntPolynomial, NumberField, NumericError, Rational,
    RationalInterval, RealAlgebraic, Sign,
};
use crate::words::{Digit, EPWord, FiniteWord, WordError};

/// Digits of `α(q)` examined before a comparison against it gives up.
pub const ALPHA_DEPTH_CAP: usize = 512;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExpansionError {
    #[error("base must exceed 1")]
    BaseTooSmall,
    #[error("point lies outside [0, q/(q-1)]")]
    OutOfRange,
    #[error("no usable digit at step {step}: the point is not in the attractor")]
    NotInAttractor { step: usize },
    #[error("operation is only defined for q <= (3+sqrt5)/2")]
    UnsupportedRegime,
    #[error("comparison with alpha(q) undecided after {depth} digits")]
    AlphaUndecided { depth: usize },
    #[error(transparent)]
    Numeric(#[from] NumericError),
    #[error(transparent)]
    Word(#[from] WordError),
}

/// Position of `q` relative to `q_c ≈ 2.32472` and `q* = (3+√5)/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    /// `1 < q ≤ q_c`
    SubCritical,
    /// `q_c < q ≤ q*`
    Middle,
    /// `q > q*`
    Super,
}

/// A base `q > 1` together with the field it generates and the derived
/// constants every computation needs. Cheap to clone.
#[derive(Clone)]
pub struct Base {
    inner: Arc<BaseInner>,
}

struct BaseInner {
    real: RealAlgebraic,
    field: Arc<NumberField>,
    digits: [FieldElement; 3],
    m: FieldElement,
    regime: Regime,
    label: String,
    enclosure: RationalInterval,
    alpha: OnceLock<Result<Alpha, ExpansionError>>,
    core: OnceLock<Option<ContinuumCore>>,
    rational: Option<RationalShift>,
}

/// `x ↦ q·x − d` for rational `q = a/b` with small `a`, `b`. Reduced
/// inputs give outputs whose only possible common factors are primes of
/// `a·b`, so cancelling those replaces a full gcd.
struct RationalShift {
    a: BigInt,
    b: BigInt,
    primes: Vec<BigInt>,
}

fn small_primes(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn cancel(mut num: BigInt, mut den: BigInt, primes: &[BigInt]) -> Rational {
    for p in primes {
        while (&num % p).is_zero() && (&den % p).is_zero() {
            num /= p;
            den /= p;
        }
    }
    Rational::new_raw(num, den)
}

impl RationalShift {
    fn new(q: &Rational) -> Option<RationalShift> {
        let a = q.numer().to_u64().filter(|&a| a < 1 << 32)?;
        let b = q.denom().to_u64().filter(|&b| b < 1 << 32)?;
        let mut primes = small_primes(a);
        primes.extend(small_primes(b));
        Some(RationalShift {
            a: a.into(),
            b: b.into(),
            primes: primes.into_iter().map(BigInt::from).collect(),
        })
    }

    fn shift(&self, x: &Rational, d: Digit) -> Rational {
        let (n, den) = (x.numer(), x.denom());
        match d {
            Digit::D0 => cancel(&self.a * n, &self.b * den, &self.primes),
            Digit::D1 => {
                let qx = cancel(&self.a * n, &self.b * den, &self.primes);
                let (n, den) = qx.into_raw();
                Rational::new_raw(n - &den, den)
            }
            Digit::DQ => cancel(&self.a * (n - den), &self.b * den, &self.primes),
        }
    }
}

impl Base {
    pub fn new(q: RealAlgebraic) -> Result<Base, ExpansionError> {
        let label = q.to_string();
        Base::with_label(q, label)
    }

    pub fn with_label(q: RealAlgebraic, label: impl Into<String>) -> Result<Base, ExpansionError> {
        if q.cmp_rational(&rat(1, 1)) != Ordering::Greater {
            return Err(ExpansionError::BaseTooSmall);
        }
        let real = q.without_cyclotomic_factors();
        let rational = real.as_rational().and_then(RationalShift::new);
        let field = NumberField::new(real.clone());
        let qe = FieldElement::generator(&field);
        let one = FieldElement::one(&field);
        let m = qe.checked_div(&(&qe - &one))?;
        let cubic = IntPolynomial::from_i64(&[-1, 2, -3, 1]);
        let quad = IntPolynomial::from_i64(&[1, -3, 1]);
        let regime = if sign_of_poly_at(&cubic, &real) != Sign::Positive {
            Regime::SubCritical
        } else if sign_of_poly_at(&quad, &real) != Sign::Positive {
            Regime::Middle
        } else {
            Regime::Super
        };
        let enclosure = real.refine(&Rational::new(BigInt::one(), BigInt::one() << 64));
        Ok(Base {
            inner: Arc::new(BaseInner {
                digits: [FieldElement::zero(&field), one, qe],
                real,
                field,
                m,
                regime,
                label: label.into(),
                enclosure,
                alpha: OnceLock::new(),
                core: OnceLock::new(),
                rational,
            }),
        })
    }

    pub fn from_rational(q: Rational) -> Result<Base, ExpansionError> {
        Base::new(RealAlgebraic::from_rational(q))
    }

    /// `q_c`, the real root of `x³ − 3x² + 2x − 1`.
    pub fn critical() -> Base {
        Base::with_label(RealAlgebraic::critical_base(), "qc").expect("q_c > 1")
    }

    /// `q* = (3 + √5)/2`.
    pub fn attractor_threshold() -> Base {
        Base::with_label(RealAlgebraic::attractor_threshold(), "qstar").expect("q* > 1")
    }

    /// `1 + √2`.
    pub fn silver() -> Base {
        Base::with_label(RealAlgebraic::silver_ratio(), "silver").expect("1 + sqrt 2 > 1")
    }

    pub fn real(&self) -> &RealAlgebraic {
        &self.inner.real
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.inner.field
    }

    /// `q` as a field element.
    pub fn q(&self) -> &FieldElement {
        &self.inner.digits[2]
    }

    /// `M = q/(q − 1)`, the right end of the attractor.
    pub fn m(&self) -> &FieldElement {
        &self.inner.m
    }

    pub fn regime(&self) -> Regime {
        self.inner.regime
    }

    pub fn label(&self) -> &str {
        &self.inner.label
    }

    pub fn digit_value(&self, d: Digit) -> &FieldElement {
        &self.inner.digits[d as usize]
    }

    /// An interval of width at most `2^-64` around `q`.
    pub fn q_enclosure(&self) -> &RationalInterval {
        &self.inner.enclosure
    }

    pub fn to_f64(&self) -> f64 {
        self.inner.real.to_f64()
    }

    pub fn element(&self, r: Rational) -> FieldElement {
        FieldElement::from_rational(&self.inner.field, r)
    }

    pub fn is_rational(&self) -> bool {
        self.inner.real.is_rational()
    }

    /// Whether `0 ≤ x ≤ M`.
    pub fn in_hull(&self, x: &FieldElement) -> bool {
        !x.is_negative() && x.compare(&self.inner.m).expect("same field") != Ordering::Greater
    }

    /// `q·x − d`.
    pub fn shift(&self, x: &FieldElement, d: Digit) -> FieldElement {
        if let (Some(rs), Some(r)) = (&self.inner.rational, x.as_rational()) {
            return FieldElement::from_rational(&self.inner.field, rs.shift(&r, d));
        }
        let qx = x.mul_generator();
        match d {
            Digit::D0 => qx,
            _ => &qx - self.digit_value(d),
        }
    }

    /// Parses a polynomial in `q` with rational coefficients, such as
    /// `q-1`, `3/2`, `2q^2 - 1/3q + 1`, as an element of `Q(q)`.
    pub fn parse_element(&self, s: &str) -> Result<FieldElement, ExpansionError> {
        let perr = || ExpansionError::Numeric(NumericError::Parse(s.to_string()));
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(perr());
        }
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, c) in t.char_indices() {
            // A sign opens a new term unless it follows an exponent marker.
            if (c == '+' || c == '-') && i > start && !t[..i].ends_with('^') && !t[..i].ends_with('e') {
                terms.push(&t[start..i]);
                start = i;
            }
        }
        terms.push(&t[start..]);
        let mut acc = FieldElement::zero(self.field());
        for term in terms {
            let (sign, body) = match term.strip_prefix('-') {
                Some(b) => (-1, b),
                None => (1, term.strip_prefix('+').unwrap_or(term)),
            };
            let (coef, power) = match body.split_once(['q', 'Q']) {
                Some((c, rest)) => {
                    let c = c.strip_suffix('*').unwrap_or(c);
                    let k = match rest.strip_prefix('^') {
                        Some(e) => e.parse::<u32>().map_err(|_| perr())?,
                        None if rest.is_empty() => 1,
                        None => return Err(perr()),
                    };
                    (
                        if c.is_empty() {
                            Rational::one()
                        } else {
                            parse_rational(c)?
                        },
                        k,
                    )
                }
                None => (parse_rational(body)?, 0),
            };
            let coef = if sign < 0 { -coef } else { coef };
            acc = &acc + &self.q().pow(power).scale(&coef);
        }
        Ok(acc)
    }

    pub(crate) fn core_cell(&self) -> &OnceLock<Option<ContinuumCore>> {
        &self.inner.core
    }

    pub fn same_as(&self, other: &Base) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.real == other.inner.real
    }
}

impl fmt::Debug for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Base({})", self.inner.label)
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.inner.label)
    }
}

/// Parses `rat:<n>/<d>`, `root:<c0,...,cn>:<lo>,<hi>`, `qc`, `qstar`,
/// `silver`, or a plain exact literal such as `5/2` or `2.5`.
impl FromStr for Base {
    type Err = ExpansionError;
    fn from_str(s: &str) -> Result<Base, ExpansionError> {
        let t = s.trim();
        let perr = || ExpansionError::Numeric(NumericError::Parse(s.to_string()));
        match t {
            "qc" => return Ok(Base::critical()),
            "qstar" => return Ok(Base::attractor_threshold()),
            "silver" => return Ok(Base::silver()),
            _ => {}
        }
        if let Some(r) = t.strip_prefix("rat:") {
            let q = parse_rational(r)?;
            return Base::with_label(RealAlgebraic::from_rational(q), t);
        }
        if let Some(rest) = t.strip_prefix("root:") {
            let (cs, iv) = rest.split_once(':').ok_or_else(perr)?;
            let coeffs = cs
                .split(',')
                .map(|c| c.trim().parse::<BigInt>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| perr())?;
            let (lo, hi) = iv.split_once(',').ok_or_else(perr)?;
            let q = RealAlgebraic::new(&IntPolynomial::new(coeffs), parse_rational(lo)?, parse_rational(hi)?)?;
            return Base::with_label(q, t);
        }
        let q = parse_rational(t)?;
        Base::with_label(RealAlgebraic::from_rational(q), t)
    }
}

fn horner(digits: &[Digit], base: &Base) -> FieldElement {
    let mut acc = FieldElement::zero(base.field());
    for &d in digits {
        acc = acc.mul_generator();
        if d != Digit::D0 {
            acc = &acc + base.digit_value(d);
        }
    }
    acc
}

/// The value `Σ d_i q^{-i}` of an eventually periodic word.
pub fn eval(w: &EPWord, base: &Base) -> FieldElement {
    let one = FieldElement::one(base.field());
    let per = horner(w.period(), base);
    let denom = &base.q().pow(w.period().len() as u32) - &one;
    let tail = per
        .checked_div(&denom)
        .expect("q^n - 1 is invertible once cyclotomic factors are removed");
    let body = &horner(w.preperiod(), base) + &tail;
    let scale = base.q().pow(w.preperiod().len() as u32);
    body.checked_div(&scale).expect("q is invertible")
}

/// Value of the finite word `d_1 … d_n` followed by zeros.
pub fn eval_finite(w: &FiniteWord, base: &Base) -> FieldElement {
    horner(w.digits(), base)
        .checked_div(&base.q().pow(w.len() as u32))
        .expect("q is invertible")
}

#[derive(Clone, Debug)]
pub struct GreedyRun {
    pub digits: FiniteWord,
    /// `q^n x − (d_1 … d_n)` read in base `q`.
    pub remainder: FieldElement,
}

/// `n` steps of the greedy algorithm: the largest digit `d` with
/// `0 ≤ q·x − d ≤ M` at every step.
pub fn greedy_digits(x: &FieldElement, base: &Base, n: usize) -> Result<GreedyRun, ExpansionError> {
    if !base.in_hull(x) {
        return Err(ExpansionError::OutOfRange);
    }
    let mut digits = FiniteWord::default();
    let mut cur = x.clone();
    for step in 0..n {
        let next = [Digit::DQ, Digit::D1, Digit::D0]
            .into_iter()
            .map(|d| (d, base.shift(&cur, d)))
            .find(|(_, y)| base.in_hull(y));
        match next {
            Some((d, y)) => {
                digits.push(d);
                cur = y;
            }
            None => return Err(ExpansionError::NotInAttractor { step }),
        }
    }
    Ok(GreedyRun { digits, remainder: cur })
}

fn quasi_greedy_step(cur: &FieldElement, base: &Base) -> (Digit, FieldElement) {
    [Digit::DQ, Digit::D1, Digit::D0]
        .into_iter()
        .map(|d| (d, base.shift(cur, d)))
        .find(|(_, y)| y.is_positive() && base.in_hull(y))
        .expect("for q <= q* some digit keeps the remainder in (0, M]")
}

fn check_quasi_greedy(x: &FieldElement, base: &Base) -> Result<(), ExpansionError> {
    if base.regime() == Regime::Super {
        return Err(ExpansionError::UnsupportedRegime);
    }
    if !x.is_positive() || !base.in_hull(x) {
        return Err(ExpansionError::OutOfRange);
    }
    Ok(())
}

/// `n` digits of the lexicographically largest infinite expansion of `x`:
/// the largest `d` with `0 < q·x − d ≤ M` at every step.
pub fn quasi_greedy_digits(x: &FieldElement, base: &Base, n: usize) -> Result<FiniteWord, ExpansionError> {
    check_quasi_greedy(x, base)?;
    let mut digits = FiniteWord::default();
    let mut cur = x.clone();
    for _ in 0..n {
        let (d, y) = quasi_greedy_step(&cur, base);
        digits.push(d);
        cur = y;
    }
    Ok(digits)
}

/// The quasi-greedy expansion of `q − 1`, as a prefix and, when its
/// remainders were seen to repeat, an exact eventually periodic closure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Alpha {
    pub prefix: FiniteWord,
    pub closure: Option<EPWord>,
}

impl Alpha {
    /// Compares `w` with `α(q)`.
    pub fn cmp_word(&self, w: &EPWord) -> Result<Ordering, ExpansionError> {
        if let Some(c) = &self.closure {
            return Ok(w.lex_compare(c));
        }
        for (i, &a) in self.prefix.digits().iter().enumerate() {
            match w.at(i).cmp(&a) {
                Ordering::Equal => continue,
                o => return Ok(o),
            }
        }
        Err(ExpansionError::AlphaUndecided {
            depth: self.prefix.len(),
        })
    }

    /// Compares `w` with `1 α(q)`.
    pub fn cmp_word_after_one(&self, w: &EPWord) -> Result<Ordering, ExpansionError> {
        match w.at(0).cmp(&Digit::D1) {
            Ordering::Equal => self.cmp_word(&w.tail(1)),
            o => Ok(o),
        }
    }
}

fn alpha_orbit(base: &Base, n: usize) -> Result<Alpha, ExpansionError> {
    let start = base.q() - &FieldElement::one(base.field());
    check_quasi_greedy(&start, base)?;
    let mut seen: HashMap<FieldElement, usize> = HashMap::new();
    let mut digits = Vec::new();
    let mut cur = start.clone();
    let limit = n.max(ALPHA_DEPTH_CAP);
    while digits.len() < limit {
        if let Some(&i) = seen.get(&cur) {
            let w = EPWord::new(&digits[..i], &digits[i..])?;
            return Ok(Alpha {
                prefix: w.prefix(n),
                closure: Some(w),
            });
        }
        seen.insert(cur.clone(), digits.len());
        let (d, y) = quasi_greedy_step(&cur, base);
        digits.push(d);
        cur = y;
    }
    digits.truncate(n);
    Ok(Alpha {
        prefix: FiniteWord::new(digits),
        closure: None,
    })
}

/// `α(q)`: the first `n` digits of the quasi-greedy expansion of `q − 1`,
/// plus its eventually periodic form when one is detected within
/// `max(n, 512)` digits. The closure is checked to evaluate to `q − 1`.
pub fn alpha(base: &Base, n: usize) -> Result<Alpha, ExpansionError> {
    let cached = base
        .inner
        .alpha
        .get_or_init(|| alpha_orbit(base, ALPHA_DEPTH_CAP))
        .clone()?;
    match &cached.closure {
        Some(c) => {
            let prefix = c.prefix(n);
            let closure = Some(c.clone());
            let target = base.q() - &FieldElement::one(base.field());
            if eval(c, base).compare(&target)? != Ordering::Equal {
                return Err(ExpansionError::AlphaUndecided { depth: n });
            }
            Ok(Alpha { prefix, closure })
        }
        None if n <= cached.prefix.len() => Ok(Alpha {
            prefix: FiniteWord::new(cached.prefix.digits()[..n].to_vec()),
            closure: None,
        }),
        None => alpha_orbit(base, n),
    }
}

/// The overlaps `φ_0(E_q) ∩ φ_1(E_q)` and `φ_1(E_q) ∩ φ_q(E_q)` as closed
/// intervals with endpoints in `Q(q)`.
#[derive(Clone, Debug)]
pub struct SwitchRegion {
    pub low: Option<(FieldElement, FieldElement)>,
    pub high: Option<(FieldElement, FieldElement)>,
    /// Set for `q > q*`, where `E_q` is a Cantor set and the intervals are hulls.
    pub hull_only: bool,
    pub disjoint: bool,
}

pub fn switch_region(base: &Base) -> SwitchRegion {
    let one = FieldElement::one(base.field());
    let q = base.q();
    let m = base.m();
    let interval = |lo: FieldElement, hi: FieldElement| {
        (lo.compare(&hi).expect("same field") != Ordering::Greater).then_some((lo, hi))
    };
    let low = interval(one.checked_div(q).expect("q != 0"), m.checked_div(q).expect("q != 0"));
    let high = interval(one.clone(), (&one + m).checked_div(q).expect("q != 0"));
    let disjoint = match (&low, &high) {
        (Some((_, a)), Some((b, _))) => a.compare(b).expect("same field") == Ordering::Less,
        _ => true,
    };
    SwitchRegion {
        low,
        high,
        hull_only: base.regime() == Regime::Super,
        disjoint,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum UniquenessVerdict {
    Unique,
    NotUnique,
    /// The word satisfies the necessary conditions but not the sufficient ones.
    Indeterminate,
}

/// Decides from the digits alone whether the sequence `w` is the only
/// expansion of its value.
pub fn unique_membership_word(w: &EPWord, base: &Base) -> Result<UniquenessVerdict, ExpansionError> {
    use UniquenessVerdict::*;
    let zero_inf = EPWord::constant(Digit::D0);
    let q_inf = EPWord::constant(Digit::DQ);
    match base.regime() {
        Regime::SubCritical => Ok(if *w == zero_inf || *w == q_inf {
            Unique
        } else {
            NotUnique
        }),
        Regime::Super => {
            let q0 = EPWord::finite(&[Digit::DQ]);
            let ones = EPWord::constant(Digit::D1);
            for t in w.distinct_tails() {
                let rest = t.tail(1);
                let ok = match t.at(0) {
                    Digit::D0 => rest < q0,
                    Digit::D1 => rest > ones,
                    Digit::DQ => true,
                };
                if !ok {
                    return Ok(NotUnique);
                }
            }
            Ok(Unique)
        }
        Regime::Middle => {
            let a = alpha(base, ALPHA_DEPTH_CAP)?;
            let ones = EPWord::constant(Digit::D1);
            let zq = EPWord::new(&[Digit::D0], &[Digit::DQ])?;
            let mut strong = true;
            for t in w.distinct_tails() {
                let rest = t.tail(1);
                match t.at(0) {
                    Digit::D0 => {
                        if a.cmp_word_after_one(&rest)? != Ordering::Less {
                            return Ok(NotUnique);
                        }
                    }
                    Digit::D1 => {
                        if rest <= ones || a.cmp_word(&rest)? != Ordering::Less {
                            return Ok(NotUnique);
                        }
                    }
                    Digit::DQ => {
                        if rest <= zq {
                            strong = false;
                        }
                    }
                }
            }
            Ok(if strong { Unique } else { Indeterminate })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> EPWord {
        s.parse().unwrap()
    }

    fn b(s: &str) -> Base {
        s.parse().unwrap()
    }

    #[test]
    fn regimes() {
        assert_eq!(b("2").regime(), Regime::SubCritical);
        assert_eq!(b("23/10").regime(), Regime::SubCritical);
        assert_eq!(Base::critical().regime(), Regime::SubCritical);
        assert_eq!(Base::silver().regime(), Regime::Middle);
        assert_eq!(b("5/2").regime(), Regime::Middle);
        assert_eq!(Base::attractor_threshold().regime(), Regime::Middle);
        assert_eq!(b("3").regime(), Regime::Super);
        assert!(matches!("1".parse::<Base>(), Err(ExpansionError::BaseTooSmall)));
    }

    #[test]
    fn element_grammar() {
        let s = Base::silver();
        let one = FieldElement::one(s.field());
        assert_eq!(s.parse_element("q-1").unwrap(), s.q() - &one);
        assert_eq!(
            s.parse_element(" 2q^2 - 1/3 q + 1").unwrap(),
            s.parse_element("1+2*q^2-1/3*q").unwrap()
        );
        // q² = 2q + 1 at 1 + √2.
        assert_eq!(s.parse_element("q^2").unwrap(), s.parse_element("2q+1").unwrap());
        assert_eq!(b("3").parse_element("1.5").unwrap().as_rational(), Some(rat(3, 2)));
        assert!(s.parse_element("").is_err());
        assert!(s.parse_element("qq").is_err());
        assert!(s.parse_element("2x").is_err());
    }

    #[test]
    fn base_grammar() {
        assert_eq!(b("rat:3/2").q().as_rational(), Some(rat(3, 2)));
        assert_eq!(b("2.5").q().as_rational(), Some(rat(5, 2)));
        assert!(b("root:-1,-2,1:2,3").same_as(&Base::silver()));
        assert!(b("root:-1,2,-3,1:2,3").same_as(&Base::critical()));
        assert!("root:1,-3,1:0,3".parse::<Base>().is_err());
        assert!("bogus".parse::<Base>().is_err());
        assert_eq!(b("rat:3/2").m().as_rational(), Some(rat(3, 1)));
    }

    #[test]
    fn evaluation() {
        for q in ["2", "5/2", "3", "silver", "qc"] {
            let base = b(q);
            assert_eq!(eval(&w("q(0)*"), &base), FieldElement::one(base.field()));
            assert_eq!(&eval(&w("(q)*"), &base), base.m());
        }
        assert_eq!(eval(&w("(100)*"), &b("2")).as_rational(), Some(rat(4, 7)));
        let s = Base::silver();
        assert_eq!(eval(&w("q(0)*"), &s), eval(&w("1qq(0)*"), &s));
    }

    #[test]
    fn greedy_examples() {
        let three = b("3");
        let r = greedy_digits(&FieldElement::one(three.field()), &three, 4).unwrap();
        assert_eq!(r.digits.to_string(), "q000");
        assert!(r.remainder.coeffs().is_empty());
        for q in ["3", "silver", "3/2"] {
            let base = b(q);
            let r = greedy_digits(base.m(), &base, 3).unwrap();
            assert_eq!(r.digits.to_string(), "qqq");
            assert_eq!(&r.remainder, base.m());
        }
        let two = b("2");
        let r = greedy_digits(&two.element(rat(4, 7)), &two, 3).unwrap();
        assert_eq!(r.digits.to_string(), "100");
        assert_eq!(r.remainder.as_rational(), Some(rat(4, 7)));
        assert_eq!(
            greedy_digits(&two.element(rat(3, 1)), &two, 1).unwrap_err(),
            ExpansionError::OutOfRange
        );
        // 9/10 lies in the gap between φ_1(E_3) and φ_q(E_3).
        let err = greedy_digits(&three.element(rat(9, 10)), &three, 3).unwrap_err();
        assert!(matches!(err, ExpansionError::NotInAttractor { .. }));
    }

    #[test]
    fn quasi_greedy_examples() {
        let one = |base: &Base| base.q() - &FieldElement::one(base.field());
        let two = b("2");
        assert_eq!(quasi_greedy_digits(&one(&two), &two, 6).unwrap().to_string(), "111111");
        let s = Base::silver();
        assert_eq!(quasi_greedy_digits(&one(&s), &s, 6).unwrap().to_string(), "q1q1q1");
        let qs = Base::attractor_threshold();
        assert_eq!(quasi_greedy_digits(&one(&qs), &qs, 4).unwrap().to_string(), "qqqq");
        let three = b("3");
        assert_eq!(
            quasi_greedy_digits(&one(&three), &three, 4).unwrap_err(),
            ExpansionError::UnsupportedRegime
        );
    }

    #[test]
    fn alpha_closures() {
        assert_eq!(alpha(&Base::critical(), 8).unwrap().closure, Some(w("q(1)*")));
        assert_eq!(alpha(&Base::silver(), 8).unwrap().closure, Some(w("(q1)*")));
        assert_eq!(alpha(&Base::attractor_threshold(), 8).unwrap().closure, Some(w("(q)*")));
        assert_eq!(alpha(&b("2"), 8).unwrap().closure, Some(w("(1)*")));
        assert_eq!(alpha(&b("3"), 8).unwrap_err(), ExpansionError::UnsupportedRegime);
        let a = alpha(&Base::silver(), 5).unwrap();
        assert_eq!(a.prefix.to_string(), "q1q1q");
    }

    #[test]
    fn switch_regions() {
        let r = switch_region(&b("2"));
        let (l, h) = (r.low.unwrap(), r.high.unwrap());
        assert_eq!(
            (l.0.as_rational(), l.1.as_rational()),
            (Some(rat(1, 2)), Some(rat(1, 1)))
        );
        assert_eq!(
            (h.0.as_rational(), h.1.as_rational()),
            (Some(rat(1, 1)), Some(rat(3, 2)))
        );
        assert!(!r.disjoint);
        let r = switch_region(&b("5/2"));
        let (l, h) = (r.low.unwrap(), r.high.unwrap());
        assert_eq!(
            (l.0.as_rational(), l.1.as_rational()),
            (Some(rat(2, 5)), Some(rat(2, 3)))
        );
        assert_eq!(
            (h.0.as_rational(), h.1.as_rational()),
            (Some(rat(1, 1)), Some(rat(16, 15)))
        );
        assert!(r.disjoint && !r.hull_only);
        let r = switch_region(&b("3"));
        assert!(r.high.is_none() && r.hull_only && r.disjoint);
    }

    #[test]
    fn uniqueness_by_digits() {
        use UniquenessVerdict::*;
        assert_eq!(unique_membership_word(&w("(1q)*"), &b("3")).unwrap(), Unique);
        assert_eq!(unique_membership_word(&w("0q(0)*"), &b("5/2")).unwrap(), NotUnique);
        assert_eq!(unique_membership_word(&w("(q11)*"), &Base::silver()).unwrap(), Unique);
        assert_eq!(unique_membership_word(&w("(0)*"), &b("2")).unwrap(), Unique);
        assert_eq!(unique_membership_word(&w("(1q)*"), &b("2")).unwrap(), NotUnique);
    }
}
