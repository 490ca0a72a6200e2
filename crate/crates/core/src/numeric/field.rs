//! Arithmetic in `Q(q)` for a fixed real algebraic `q`.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::QPoly;
use super::{rat, rational_to_f64, NumericError, Rational, RationalInterval, RealAlgebraic, Sign};

/// The field `Q(q)` presented as `Q[x] / (m(x))`, where `m` is the monic
/// version of the defining polynomial of `q`.
#[derive(Debug)]
pub struct NumberField {
    generator: RealAlgebraic,
    modulus: QPoly,
}

impl NumberField {
    pub fn new(generator: RealAlgebraic) -> Arc<NumberField> {
        let modulus = QPoly::from(generator.defining()).monic();
        Arc::new(NumberField { generator, modulus })
    }

    pub fn generator(&self) -> &RealAlgebraic {
        &self.generator
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap_or(1).max(1)
    }

    fn reduce(&self, p: QPoly) -> Vec<Rational> {
        let p = if p.degree().unwrap_or(0) >= self.degree() {
            p.div_rem(&self.modulus).1
        } else {
            p
        };
        p.c
    }
}

fn same_field(a: &Arc<NumberField>, b: &Arc<NumberField>) -> bool {
    Arc::ptr_eq(a, b) || a.generator == b.generator
}

/// An element of `Q(q)`, stored as the coefficient vector (constant term
/// first, trailing zeros removed) of its reduced polynomial in `q`.
///
/// Equality and hashing compare coefficient vectors. When the defining
/// polynomial of `q` is its minimal polynomial, which holds for every
/// named base, this coincides with equality of values.
#[derive(Clone)]
pub struct FieldElement {
    field: Arc<NumberField>,
    coeffs: Vec<Rational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// `a op b`, checking that both operands share a field.
pub fn field_arith(a: &FieldElement, b: &FieldElement, op: FieldOp) -> Result<FieldElement, NumericError> {
    match op {
        FieldOp::Add => a.checked_add(b),
        FieldOp::Sub => a.checked_sub(b),
        FieldOp::Mul => a.checked_mul(b),
        FieldOp::Div => a.checked_div(b),
    }
}

impl FieldElement {
    pub fn from_rational(field: &Arc<NumberField>, r: Rational) -> Self {
        let coeffs = if r.is_zero() { Vec::new() } else { vec![r] };
        FieldElement {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn from_int(field: &Arc<NumberField>, n: i64) -> Self {
        Self::from_rational(field, rat(n, 1))
    }

    pub fn zero(field: &Arc<NumberField>) -> Self {
        FieldElement {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: &Arc<NumberField>) -> Self {
        Self::from_int(field, 1)
    }

    /// The element `q` itself.
    pub fn generator(field: &Arc<NumberField>) -> Self {
        let p = QPoly::new(vec![Rational::zero(), Rational::one()]);
        FieldElement {
            field: field.clone(),
            coeffs: field.reduce(p),
        }
    }

    /// Builds `Σ c_i q^i` and reduces it.
    pub fn from_coeffs(field: &Arc<NumberField>, coeffs: Vec<Rational>) -> Self {
        FieldElement {
            field: field.clone(),
            coeffs: field.reduce(QPoly::new(coeffs)),
        }
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    fn poly(&self) -> QPoly {
        QPoly { c: self.coeffs.clone() }
    }

    fn with(&self, p: QPoly) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            coeffs: self.field.reduce(p),
        }
    }

    fn check(&self, o: &FieldElement) -> Result<(), NumericError> {
        if same_field(&self.field, &o.field) {
            Ok(())
        } else {
            Err(NumericError::BaseMismatch)
        }
    }

    pub fn checked_add(&self, o: &FieldElement) -> Result<FieldElement, NumericError> {
        self.check(o)?;
        Ok(self.with(self.poly().add(&o.poly())))
    }

    pub fn checked_sub(&self, o: &FieldElement) -> Result<FieldElement, NumericError> {
        self.check(o)?;
        Ok(self.with(self.poly().sub(&o.poly())))
    }

    pub fn checked_mul(&self, o: &FieldElement) -> Result<FieldElement, NumericError> {
        self.check(o)?;
        Ok(self.with(self.poly().mul(&o.poly())))
    }

    pub fn checked_div(&self, o: &FieldElement) -> Result<FieldElement, NumericError> {
        self.check(o)?;
        let inv = o.inverse()?;
        Ok(self.with(self.poly().mul(&inv.poly())))
    }

    pub fn inverse(&self) -> Result<FieldElement, NumericError> {
        if self.coeffs.is_empty() {
            return Err(NumericError::DivisionByZero);
        }
        let (g, s) = self.poly().gcd_inverse(&self.field.modulus);
        if g.degree() == Some(0) {
            return Ok(self.with(s));
        }
        if self.is_zero() {
            Err(NumericError::DivisionByZero)
        } else {
            Err(NumericError::NonInvertible)
        }
    }

    pub fn neg(&self) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add_rational(&self, r: &Rational) -> FieldElement {
        let mut c = self.coeffs.clone();
        if c.is_empty() {
            c.push(Rational::zero());
        }
        c[0] += r;
        self.with(QPoly::new(c))
    }

    pub fn scale(&self, r: &Rational) -> FieldElement {
        self.with(self.poly().scale(r))
    }

    /// `q · self`.
    pub fn mul_generator(&self) -> FieldElement {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        if let Some(q) = self.field.generator.as_rational() {
            return FieldElement {
                field: self.field.clone(),
                coeffs: vec![&self.coeffs[0] * q],
            };
        }
        let mut c = Vec::with_capacity(self.coeffs.len() + 1);
        c.push(Rational::zero());
        c.extend(self.coeffs.iter().cloned());
        self.with(QPoly::new(c))
    }

    pub fn pow(&self, e: u32) -> FieldElement {
        let mut acc = FieldElement::one(&self.field);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact sign of the value at the real embedding fixed by the generator.
    pub fn sign(&self) -> Sign {
        match self.coeffs.len() {
            0 => Sign::Zero,
            1 => Sign::from(self.coeffs[0].cmp(&Rational::zero())),
            _ => self.field.generator.sign_of_qpoly(&self.poly()),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.sign() == Sign::Zero
    }

    pub fn is_positive(&self) -> bool {
        self.sign() == Sign::Positive
    }

    pub fn is_negative(&self) -> bool {
        self.sign() == Sign::Negative
    }

    pub fn compare(&self, o: &FieldElement) -> Result<Ordering, NumericError> {
        if let (Some(a), Some(b)) = (self.as_rational(), o.as_rational()) {
            self.check(o)?;
            return Ok(a.cmp(&b));
        }
        Ok(match self.checked_sub(o)?.sign() {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        })
    }

    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        if let Some(a) = self.as_rational() {
            return a.cmp(r);
        }
        match self.add_rational(&-r).sign() {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }

    /// An interval enclosing the value, obtained from the generator's
    /// isolating interval refined to width `2^-bits`.
    pub fn enclosure(&self, bits: usize) -> RationalInterval {
        if let Some(r) = self.as_rational() {
            return RationalInterval::point(r);
        }
        let iv = self
            .field
            .generator
            .refine(&Rational::new(BigInt::one(), BigInt::one() << bits));
        self.poly().eval_interval(&iv)
    }

    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.enclosure(64).midpoint())
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && same_field(&self.field, &other.field)
    }
}

impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        // Coefficients are kept in lowest terms, so the raw parts identify
        // them; the library hash of a ratio walks its continued fraction.
        state.write_usize(self.coeffs.len());
        for c in &self.coeffs {
            c.numer().hash(state);
            c.denom().hash(state);
        }
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElement({self})")
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let mono = match i {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{i}"),
            };
            if i == 0 {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{mono}")?;
            } else if a.is_integer() {
                write!(f, "{a}{mono}")?;
            } else {
                write!(f, "({a}){mono}")?;
            }
        }
        Ok(())
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl std::ops::$tr<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            /// Panics if the operands belong to different fields.
            fn $m(self, o: &FieldElement) -> FieldElement {
                self.$checked(o)
                    .expect("field element operands from different fields")
            }
        }
        impl std::ops::$tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, o: FieldElement) -> FieldElement {
                (&self).$m(&o)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl std::ops::Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::neg(self)
    }
}
