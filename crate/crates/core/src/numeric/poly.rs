//! Univariate polynomials with exact coefficients.
//!
//! [`IntPolynomial`] is the public, content-normalised integer form used for
//! defining polynomials. [`QPoly`] is the rational working form used by the
//! Euclidean algorithms and the number-field arithmetic.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Rational, RationalInterval};

/// Polynomial with arbitrary-precision integer coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        if self.coeffs.last().unwrap().is_negative() {
            g = -g;
        }
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rational::from_integer(c.clone());
        }
        acc
    }

    pub fn sign_at(&self, x: &Rational) -> Ordering {
        self.eval(x).cmp(&Rational::zero())
    }

    /// Interval extension of evaluation; the result encloses `{p(t) : t ∈ x}`.
    pub fn eval_interval(&self, x: &RationalInterval) -> RationalInterval {
        let mut acc = RationalInterval::point(Rational::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add_scalar(&Rational::from_integer(c.clone()));
        }
        acc
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, other: &IntPolynomial) -> IntPolynomial {
        QPoly::from(self).gcd(&QPoly::from(other)).to_primitive()
    }

    /// `self / gcd(self, self')`, primitive.
    pub fn squarefree_part(&self) -> IntPolynomial {
        if self.degree().unwrap_or(0) == 0 {
            return self.primitive();
        }
        let g = QPoly::from(self).gcd(&QPoly::from(&self.derivative()));
        let (quot, _) = QPoly::from(self).div_rem(&g);
        quot.to_primitive()
    }

    /// Sturm chain `p, p', -rem(p, p'), ...`, each term scaled by a positive factor.
    pub fn sturm_sequence(&self) -> Vec<IntPolynomial> {
        let mut seq = vec![self.clone()];
        if self.degree().unwrap_or(0) == 0 {
            return seq;
        }
        seq.push(self.derivative());
        loop {
            let n = seq.len();
            let (_, rem) = QPoly::from(&seq[n - 2]).div_rem(&QPoly::from(&seq[n - 1]));
            if rem.is_zero() {
                break;
            }
            seq.push(rem.neg().to_positive_scaled());
        }
        seq
    }

    /// Number of distinct real roots in the half-open interval `(lo, hi]`.
    pub fn count_roots(&self, lo: &Rational, hi: &Rational) -> usize {
        let seq = self.sturm_sequence();
        count_roots_with(&seq, lo, hi)
    }

    /// Cauchy bound rounded up to a power of two; all real roots lie in `(-B, B)`.
    pub fn root_bound(&self) -> Rational {
        let lead = self.leading().expect("nonzero polynomial").abs();
        let mut max = Rational::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let r = Rational::new(c.abs(), lead.clone());
            if r > max {
                max = r;
            }
        }
        let bound = max + Rational::one();
        let mut pow = Rational::one();
        while pow <= bound {
            pow *= Rational::from_integer(BigInt::from(2));
        }
        pow
    }

    pub(crate) fn rational_roots_divisors(&self) -> Vec<BigInt> {
        let lead = self.leading().expect("nonzero polynomial").abs();
        small_divisors(&lead)
    }
}

pub(crate) fn count_roots_with(seq: &[IntPolynomial], lo: &Rational, hi: &Rational) -> usize {
    let va = sign_variations(seq, lo);
    let vb = sign_variations(seq, hi);
    va.saturating_sub(vb)
}

fn sign_variations(seq: &[IntPolynomial], x: &Rational) -> usize {
    let mut last = Ordering::Equal;
    let mut count = 0;
    for p in seq {
        let s = p.sign_at(x);
        if s == Ordering::Equal {
            continue;
        }
        if last != Ordering::Equal && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn small_divisors(n: &BigInt) -> Vec<BigInt> {
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            out.push(d.clone());
            let other = n / &d;
            if other != d {
                out.push(other);
            }
        }
        d += 1;
    }
    out.sort();
    out
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = !mag.is_one() || i == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Dense polynomial over the rationals, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct QPoly {
    pub(crate) c: Vec<Rational>,
}

impl From<&IntPolynomial> for QPoly {
    fn from(p: &IntPolynomial) -> Self {
        QPoly {
            c: p.coeffs.iter().cloned().map(Rational::from_integer).collect(),
        }
    }
}

impl QPoly {
    pub(crate) fn new(mut c: Vec<Rational>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        QPoly { c }
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub(crate) fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub(crate) fn neg(&self) -> QPoly {
        QPoly {
            c: self.c.iter().map(|x| -x).collect(),
        }
    }

    pub(crate) fn add(&self, o: &QPoly) -> QPoly {
        let n = self.c.len().max(o.c.len());
        let zero = Rational::zero();
        QPoly::new(
            (0..n)
                .map(|i| self.c.get(i).unwrap_or(&zero) + o.c.get(i).unwrap_or(&zero))
                .collect(),
        )
    }

    pub(crate) fn sub(&self, o: &QPoly) -> QPoly {
        self.add(&o.neg())
    }

    pub(crate) fn mul(&self, o: &QPoly) -> QPoly {
        if self.is_zero() || o.is_zero() {
            return QPoly { c: Vec::new() };
        }
        let mut out = vec![Rational::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(out)
    }

    pub(crate) fn scale(&self, k: &Rational) -> QPoly {
        QPoly::new(self.c.iter().map(|x| x * k).collect())
    }

    /// Euclidean division; panics on a zero divisor.
    pub(crate) fn div_rem(&self, d: &QPoly) -> (QPoly, QPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = d.c[dd].clone();
        let mut rem = self.c.clone();
        if rem.len() <= dd {
            return (QPoly { c: Vec::new() }, self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let coef = &rem[k + dd] / &lead;
            if !coef.is_zero() {
                for (j, dc) in d.c.iter().enumerate() {
                    rem[k + j] -= &coef * dc;
                }
            }
            quot[k] = coef;
        }
        rem.truncate(dd);
        (QPoly::new(quot), QPoly::new(rem))
    }

    pub(crate) fn monic(&self) -> QPoly {
        match self.c.last() {
            Some(l) => {
                let inv = l.recip();
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    /// Monic gcd (zero if both are zero).
    pub(crate) fn gcd(&self, o: &QPoly) -> QPoly {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s)` with `g = gcd(self, m)` monic and `s·self ≡ g (mod m)`.
    pub(crate) fn gcd_inverse(&self, m: &QPoly) -> (QPoly, QPoly) {
        let (mut r0, mut r1) = (m.clone(), self.clone());
        let (mut s0, mut s1) = (
            QPoly { c: Vec::new() },
            QPoly {
                c: vec![Rational::one()],
            },
        );
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        let lead = r0.c.last().cloned().unwrap_or_else(Rational::one);
        let inv = lead.recip();
        (r0.scale(&inv), s0.scale(&inv))
    }

    pub(crate) fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.c.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub(crate) fn eval_interval(&self, x: &RationalInterval) -> RationalInterval {
        let mut acc = RationalInterval::point(Rational::zero());
        for c in self.c.iter().rev() {
            acc = acc.mul(x).add_scalar(c);
        }
        acc
    }

    /// Scales by a positive rational to an integer polynomial with unit content.
    pub(crate) fn to_positive_scaled(&self) -> IntPolynomial {
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let mut den = BigInt::one();
        for c in &self.c {
            den = den.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self.c.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        let mut g = BigInt::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        IntPolynomial::new(ints.into_iter().map(|c| c / &g).collect())
    }

    pub(crate) fn to_primitive(&self) -> IntPolynomial {
        self.to_positive_scaled().primitive()
    }
}
