//! Exact arithmetic: rationals, integer polynomials, real algebraic numbers
//! and elements of the number field generated by a single real algebraic
//! base. Every comparison made elsewhere in the crate bottoms out here.

mod algebraic;
mod field;
mod poly;

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

pub use algebraic::{isolate_real_roots, sign_of_poly_at, RealAlgebraic};
pub use field::{field_arith, FieldElement, FieldOp, NumberField};
pub use poly::IntPolynomial;

/// Arbitrary-precision rational, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NumericError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different number fields")]
    BaseMismatch,
    #[error("element is not invertible modulo the reducible defining polynomial")]
    NonInvertible,
    #[error("interval [{lo}, {hi}] does not isolate exactly one real root (found {found})")]
    NotIsolating { lo: String, hi: String, found: usize },
    #[error("the zero polynomial has no roots to isolate")]
    ZeroPolynomial,
    #[error("empty interval: lower end exceeds upper end")]
    EmptyInterval,
    #[error("cannot parse `{0}`")]
    Parse(String),
}

/// Sign of an exactly determined quantity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl From<Ordering> for Sign {
    fn from(o: Ordering) -> Self {
        match o {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    // Scale down huge numerators/denominators before converting.
    match (r.numer().to_f64(), r.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() && d != 0.0 => n / d,
        _ => {
            let bits = r.denom().bits().max(r.numer().bits()) as i64 - 900;
            let shift = bits.max(0) as usize;
            let n = (r.numer() >> shift).to_f64().unwrap_or(f64::NAN);
            let d = (r.denom() >> shift).to_f64().unwrap_or(f64::NAN);
            n / d
        }
    }
}

/// Parses `7/2`, `-3`, `2.5` or `1e-3` style literals into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational, NumericError> {
    let s = s.trim();
    let err = || NumericError::Parse(s.to_string());
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| err())?;
        let d: BigInt = d.trim().parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        return Ok(Rational::new(n, d));
    }
    let (mantissa, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().map_err(|_| err())?),
        None => (s, 0),
    };
    let (neg, mantissa) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(err());
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return Err(err());
    }
    let digits: BigInt = format!("{int_part}{frac_part}0").parse().map_err(|_| err())?;
    let scale = frac_part.len() as i32 + 1 - exp;
    let ten = BigInt::from(10);
    let mut value = if scale >= 0 {
        Rational::new(digits, num_traits::pow(ten, scale as usize))
    } else {
        Rational::from_integer(digits * num_traits::pow(ten, (-scale) as usize))
    };
    if neg {
        value = -value;
    }
    Ok(value)
}

/// Closed interval with rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalInterval {
    lo: Rational,
    hi: Rational,
}

impl RationalInterval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self, NumericError> {
        if lo > hi {
            return Err(NumericError::EmptyInterval);
        }
        Ok(RationalInterval { lo, hi })
    }

    pub fn point(x: Rational) -> Self {
        RationalInterval { lo: x.clone(), hi: x }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / rat(2, 1)
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn intersects(&self, other: &RationalInterval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// `Some(sign)` when every point of the interval has that sign.
    pub fn sign(&self) -> Option<Sign> {
        if self.lo.is_positive() {
            Some(Sign::Positive)
        } else if self.hi.is_negative() {
            Some(Sign::Negative)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(Sign::Zero)
        } else {
            None
        }
    }

    pub fn add(&self, o: &RationalInterval) -> RationalInterval {
        RationalInterval {
            lo: &self.lo + &o.lo,
            hi: &self.hi + &o.hi,
        }
    }

    pub fn sub(&self, o: &RationalInterval) -> RationalInterval {
        RationalInterval {
            lo: &self.lo - &o.hi,
            hi: &self.hi - &o.lo,
        }
    }

    pub fn add_scalar(&self, c: &Rational) -> RationalInterval {
        RationalInterval {
            lo: &self.lo + c,
            hi: &self.hi + c,
        }
    }

    pub fn mul(&self, o: &RationalInterval) -> RationalInterval {
        let ps = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = ps.iter().min().unwrap().clone();
        let hi = ps.iter().max().unwrap().clone();
        RationalInterval { lo, hi }
    }

    pub fn scale(&self, c: &Rational) -> RationalInterval {
        let a = &self.lo * c;
        let b = &self.hi * c;
        if a <= b {
            RationalInterval { lo: a, hi: b }
        } else {
            RationalInterval { lo: b, hi: a }
        }
    }

    /// Interval quotient; `None` if the divisor straddles zero.
    pub fn div(&self, o: &RationalInterval) -> Option<RationalInterval> {
        if !o.lo.is_positive() && !o.hi.is_negative() {
            return None;
        }
        let inv = RationalInterval {
            lo: o.hi.recip(),
            hi: o.lo.recip(),
        };
        Some(self.mul(&inv))
    }

    pub fn to_f64_bounds(&self) -> (f64, f64) {
        (rational_to_f64(&self.lo), rational_to_f64(&self.hi))
    }
}

impl fmt::Display for RationalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_literals_are_exact() {
        assert_eq!(parse_rational("2.5").unwrap(), rat(5, 2));
        assert_eq!(parse_rational("-0.125").unwrap(), rat(-1, 8));
        assert_eq!(parse_rational("7/2").unwrap(), rat(7, 2));
        assert_eq!(parse_rational("3").unwrap(), rat(3, 1));
        assert_eq!(parse_rational("1e-3").unwrap(), rat(1, 1000));
        assert_eq!(parse_rational("2.32e1").unwrap(), rat(232, 10));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational(".").is_err());
    }

    #[test]
    fn interval_division_rejects_zero_straddle() {
        let a = RationalInterval::new(rat(1, 1), rat(2, 1)).unwrap();
        let b = RationalInterval::new(rat(-1, 1), rat(1, 1)).unwrap();
        assert!(a.div(&b).is_none());
        let c = RationalInterval::new(rat(2, 1), rat(4, 1)).unwrap();
        let q = a.div(&c).unwrap();
        assert_eq!(q, RationalInterval::new(rat(1, 4), rat(1, 1)).unwrap());
    }

    #[test]
    fn huge_rationals_convert_to_f64() {
        let big = num_traits::pow(BigInt::from(10), 400);
        let r = Rational::new(big.clone() * 3, big);
        assert!((rational_to_f64(&r) - 3.0).abs() < 1e-12);
    }
}
