//! Real algebraic numbers in isolating-interval representation.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::{count_roots_with, IntPolynomial, QPoly};
use super::{rat, rational_to_f64, NumericError, Rational, RationalInterval, Sign};

/// Bits of precision every irrational isolating interval is refined to at
/// construction time. Most later sign decisions then need no bisection.
const STORED_PRECISION_BITS: usize = 64;

/// A real algebraic number: a squarefree integer polynomial together with an
/// interval that contains exactly one of its roots.
///
/// Rational values are stored with a linear defining polynomial and a
/// degenerate interval `[r, r]`. Irrational values have a defining polynomial
/// of degree at least two with no rational roots, and an open isolating
/// interval whose endpoints have opposite signs under it.
#[derive(Clone, Debug)]
pub struct RealAlgebraic {
    defining: IntPolynomial,
    lo: Rational,
    hi: Rational,
}

impl RealAlgebraic {
    pub fn from_rational(r: Rational) -> Self {
        let defining = IntPolynomial::new(vec![-r.numer().clone(), r.denom().clone()]).primitive();
        RealAlgebraic {
            defining,
            lo: r.clone(),
            hi: r,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat(n, 1))
    }

    /// The unique root of `poly` in the closed interval `[lo, hi]`.
    pub fn new(poly: &IntPolynomial, lo: Rational, hi: Rational) -> Result<Self, NumericError> {
        if poly.is_zero() {
            return Err(NumericError::ZeroPolynomial);
        }
        if lo > hi {
            return Err(NumericError::EmptyInterval);
        }
        let inside: Vec<RealAlgebraic> = isolate_real_roots(poly)
            .into_iter()
            .filter(|r| r.cmp_rational(&lo) != Ordering::Less && r.cmp_rational(&hi) != Ordering::Greater)
            .collect();
        if inside.len() != 1 {
            return Err(NumericError::NotIsolating {
                lo: lo.to_string(),
                hi: hi.to_string(),
                found: inside.len(),
            });
        }
        Ok(inside.into_iter().next().unwrap())
    }

    /// The real root of `x³ − 3x² + 2x − 1` (≈ 2.32472), the critical base
    /// above which points with exactly `k ≥ 2` expansions exist.
    pub fn critical_base() -> Self {
        Self::new(&IntPolynomial::from_i64(&[-1, 2, -3, 1]), rat(2, 1), rat(3, 1))
            .expect("cubic has a single real root in [2, 3]")
    }

    /// `(3 + √5)/2` (≈ 2.61803), the larger root of `x² − 3x + 1`; the
    /// attractor is an interval exactly for bases up to this value.
    pub fn attractor_threshold() -> Self {
        Self::new(&IntPolynomial::from_i64(&[1, -3, 1]), rat(2, 1), rat(3, 1))
            .expect("quadratic has one root in [2, 3]")
    }

    /// `1 + √2`, the larger root of `x² − 2x − 1`.
    pub fn silver_ratio() -> Self {
        Self::new(&IntPolynomial::from_i64(&[-1, -2, 1]), rat(2, 1), rat(3, 1))
            .expect("quadratic has one root in [2, 3]")
    }

    /// The same number with every cyclotomic factor divided out of its
    /// defining polynomial, so that `x^n - 1` is coprime to it for all `n`.
    pub fn without_cyclotomic_factors(&self) -> RealAlgebraic {
        let d = self.degree();
        if self.is_rational() || d < 2 {
            return self.clone();
        }
        // A cyclotomic factor of degree phi(n) <= d has n <= 2d^2.
        let mut p = QPoly::from(&self.defining);
        for n in 1..=2 * d * d + 2 {
            let mut c = vec![Rational::zero(); n + 1];
            c[0] = -Rational::one();
            c[n] = Rational::one();
            let g = p.gcd(&QPoly::new(c));
            if g.degree().unwrap_or(0) >= 1 {
                p = p.div_rem(&g).0;
            }
        }
        RealAlgebraic {
            defining: p.to_primitive(),
            lo: self.lo.clone(),
            hi: self.hi.clone(),
        }
    }

    pub fn defining(&self) -> &IntPolynomial {
        &self.defining
    }

    pub fn degree(&self) -> usize {
        self.defining.degree().unwrap_or(0)
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        (self.lo == self.hi).then_some(&self.lo)
    }

    pub fn is_rational(&self) -> bool {
        self.lo == self.hi
    }

    /// The stored isolating interval (degenerate for rationals).
    pub fn isolating(&self) -> RationalInterval {
        RationalInterval::new(self.lo.clone(), self.hi.clone()).expect("lo <= hi")
    }

    /// An interval of width at most `width` containing the value.
    pub fn refine(&self, width: &Rational) -> RationalInterval {
        assert!(width.is_positive(), "refinement width must be positive");
        if self.is_rational() {
            return self.isolating();
        }
        let (mut lo, mut hi) = (self.lo.clone(), self.hi.clone());
        let lo_sign = self.defining.sign_at(&lo);
        while &(&hi - &lo) > width {
            bisect(&self.defining, lo_sign, &mut lo, &mut hi);
        }
        RationalInterval::new(lo, hi).expect("bisection keeps lo <= hi")
    }

    pub fn to_f64(&self) -> f64 {
        if let Some(r) = self.as_rational() {
            return rational_to_f64(r);
        }
        let iv = self.refine(&Rational::new(BigInt::one(), BigInt::one() << 60));
        rational_to_f64(&iv.midpoint())
    }

    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        if self.is_rational() {
            return self.lo.cmp(r);
        }
        if r <= &self.lo {
            return Ordering::Greater;
        }
        if r >= &self.hi {
            return Ordering::Less;
        }
        // r is strictly inside and is not a root.
        if self.defining.sign_at(r) == self.defining.sign_at(&self.lo) {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    fn refined_copy(&self, bits: usize) -> Self {
        let width = Rational::new(BigInt::one(), BigInt::one() << bits);
        let iv = self.refine(&width);
        RealAlgebraic {
            defining: self.defining.clone(),
            lo: iv.lo().clone(),
            hi: iv.hi().clone(),
        }
    }

    /// Sign of a rational-coefficient polynomial evaluated at this number.
    pub(crate) fn sign_of_qpoly(&self, p: &QPoly) -> Sign {
        if p.is_zero() {
            return Sign::Zero;
        }
        if let Some(r) = self.as_rational() {
            return Sign::from(p.eval(r).cmp(&Rational::zero()));
        }
        if p.degree() == Some(0) {
            return Sign::from(p.c[0].cmp(&Rational::zero()));
        }
        let iv = self.isolating();
        if let Some(s) = p.eval_interval(&iv).sign() {
            return s;
        }
        // Exact zero test: x is a root of p iff it is a root of gcd(p, defining).
        let g = p.gcd(&QPoly::from(&self.defining));
        if g.degree().unwrap_or(0) >= 1 {
            let sl = g.eval(&self.lo).cmp(&Rational::zero());
            let sh = g.eval(&self.hi).cmp(&Rational::zero());
            if sl != sh {
                return Sign::Zero;
            }
        }
        let (mut lo, mut hi) = (self.lo.clone(), self.hi.clone());
        let lo_sign = self.defining.sign_at(&lo);
        loop {
            bisect(&self.defining, lo_sign, &mut lo, &mut hi);
            let iv = RationalInterval::new(lo.clone(), hi.clone()).expect("ordered");
            if let Some(s) = p.eval_interval(&iv).sign() {
                return s;
            }
        }
    }

    fn same_root(&self, other: &RealAlgebraic) -> bool {
        if self.defining != other.defining {
            return false;
        }
        if self.is_rational() {
            return self.lo == other.lo;
        }
        let a = (&self.lo).max(&other.lo);
        let b = (&self.hi).min(&other.hi);
        if a >= b {
            return false;
        }
        self.defining.sign_at(a) != self.defining.sign_at(b)
    }
}

fn bisect(p: &IntPolynomial, lo_sign: Ordering, lo: &mut Rational, hi: &mut Rational) {
    let mid = (&*lo + &*hi) / rat(2, 1);
    if p.sign_at(&mid) == lo_sign {
        *lo = mid;
    } else {
        *hi = mid;
    }
}

impl PartialEq for RealAlgebraic {
    fn eq(&self, other: &Self) -> bool {
        self.same_root(other)
    }
}

impl Eq for RealAlgebraic {}

impl Hash for RealAlgebraic {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.defining.hash(state);
    }
}

impl PartialOrd for RealAlgebraic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RealAlgebraic {
    fn cmp(&self, other: &Self) -> Ordering {
        if let Some(r) = other.as_rational() {
            return self.cmp_rational(r);
        }
        if let Some(r) = self.as_rational() {
            return other.cmp_rational(r).reverse();
        }
        if self.same_root(other) {
            return Ordering::Equal;
        }
        let mut a = self.clone();
        let mut b = other.clone();
        let mut bits = STORED_PRECISION_BITS;
        loop {
            if a.hi <= b.lo {
                return Ordering::Less;
            }
            if b.hi <= a.lo {
                return Ordering::Greater;
            }
            bits += 16;
            a = a.refined_copy(bits);
            b = b.refined_copy(bits);
        }
    }
}

impl fmt::Display for RealAlgebraic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(r) => write!(f, "{r}"),
            None => write!(f, "root of {} near {:.9}", self.defining, self.to_f64()),
        }
    }
}

/// Isolates every distinct real root of `p`, sorted ascending.
///
/// Rational roots come back as rationals; the remaining roots share the
/// squarefree part of `p` with its rational linear factors divided out as
/// their defining polynomial. The zero polynomial and nonzero constants
/// have no isolated roots.
pub fn isolate_real_roots(p: &IntPolynomial) -> Vec<RealAlgebraic> {
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let sf = p.squarefree_part();
    let seq = sf.sturm_sequence();
    let bound = sf.root_bound();

    let mut rational_roots: Vec<Rational> = Vec::new();
    let mut open: Vec<(Rational, Rational)> = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        let c = count_roots_with(&seq, &lo, &hi);
        if c == 0 {
            continue;
        }
        if c == 1 {
            if sf.sign_at(&hi) == Ordering::Equal {
                rational_roots.push(hi);
                continue;
            }
            if sf.sign_at(&lo) != Ordering::Equal {
                open.push((lo, hi));
                continue;
            }
        }
        let mid = (&lo + &hi) / rat(2, 1);
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }

    // A root inside an open interval may still be rational: a/b with b | lead.
    let divisors = sf.rational_roots_divisors();
    let lead = Rational::from_integer(sf.leading().unwrap().abs());
    let mut irrational = Vec::new();
    for (mut lo, mut hi) in open {
        let lo_sign = sf.sign_at(&lo);
        let mut found = None;
        while found.is_none() && (&hi - &lo) * &lead >= Rational::one() {
            let mid = (&lo + &hi) / rat(2, 1);
            match sf.sign_at(&mid) {
                Ordering::Equal => found = Some(mid),
                s if s == lo_sign => lo = mid,
                _ => hi = mid,
            }
        }
        if let Some(r) = found {
            rational_roots.push(r);
            continue;
        }
        'outer: for b in &divisors {
            let bq = Rational::from_integer(b.clone());
            let start = (&lo * &bq).ceil().to_integer();
            let end = (&hi * &bq).floor().to_integer();
            let mut a = start;
            while a <= end {
                let cand = Rational::new(a.clone(), b.clone());
                if lo < cand && cand < hi && sf.sign_at(&cand) == Ordering::Equal {
                    found = Some(cand);
                    break 'outer;
                }
                a += 1;
            }
        }
        match found {
            Some(r) => rational_roots.push(r),
            None => irrational.push((lo, hi)),
        }
    }

    let mut reduced = QPoly::from(&sf);
    for r in &rational_roots {
        let lin = QPoly::new(vec![-r.clone(), Rational::one()]);
        reduced = reduced.div_rem(&lin).0;
    }
    let defining = reduced.to_primitive();

    let mut roots: Vec<RealAlgebraic> = rational_roots.into_iter().map(RealAlgebraic::from_rational).collect();
    for (lo, hi) in irrational {
        let ra = RealAlgebraic {
            defining: defining.clone(),
            lo,
            hi,
        };
        roots.push(ra.refined_copy(STORED_PRECISION_BITS));
    }
    roots.sort_by(|a, b| a.lo.cmp(&b.lo));
    roots
}

/// Exact sign of `p(x)`.
pub fn sign_of_poly_at(p: &IntPolynomial, x: &RealAlgebraic) -> Sign {
    x.sign_of_qpoly(&QPoly::from(p))
}
