//! Rational functions in `z` over a finite field, kept in canonical form.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::display::as_factor;
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldRef};
use crate::poly::Poly;

/// Element of `F_q(z)`.
///
/// Canonical form: `gcd(num, den) = 1`, `den` monic, zero is `0/1`. Every
/// constructor and operation returns canonical values, so structural
/// equality is equality in the field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFn {
    num: Poly,
    den: Poly,
}

impl RatFn {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if num.field() != den.field() {
            return Err(Error::MixedFields);
        }
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let f = num.field();
        if num.is_zero() {
            return Ok(RatFn { num, den: Poly::one(f) });
        }
        let g = num.gcd(&den)?;
        let (num, den) = if g.is_one() { (num, den) } else { (num.div_exact(&g)?, den.div_exact(&g)?) };
        let c = den.lead().inv()?;
        Ok(RatFn { num: num.scale(c), den: den.scale(c) })
    }

    pub fn zero(field: FieldRef) -> Self {
        RatFn { num: Poly::zero(field), den: Poly::one(field) }
    }

    pub fn one(field: FieldRef) -> Self {
        RatFn { num: Poly::one(field), den: Poly::one(field) }
    }

    pub fn constant(c: FieldElement) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn from_poly(p: Poly) -> Self {
        let f = p.field();
        RatFn { num: p, den: Poly::one(f) }
    }

    pub fn field(&self) -> FieldRef {
        self.num.field()
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    /// The polynomial value, if the denominator is 1.
    pub fn as_poly(&self) -> Option<&Poly> {
        self.is_poly().then_some(&self.num)
    }

    pub fn checked_add(&self, other: &RatFn) -> Result<RatFn> {
        if self.den == other.den {
            return RatFn::new(self.num.checked_add(&other.num)?, self.den.clone());
        }
        let num = self.num.checked_mul(&other.den)?.checked_add(&other.num.checked_mul(&self.den)?)?;
        RatFn::new(num, self.den.checked_mul(&other.den)?)
    }

    pub fn checked_sub(&self, other: &RatFn) -> Result<RatFn> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &RatFn) -> Result<RatFn> {
        if self.field() != other.field() {
            return Err(Error::MixedFields);
        }
        if self.is_poly() && other.is_poly() {
            return Ok(RatFn::from_poly(self.num.checked_mul(&other.num)?));
        }
        RatFn::new(self.num.checked_mul(&other.num)?, self.den.checked_mul(&other.den)?)
    }

    pub fn inv(&self) -> Result<RatFn> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RatFn::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, other: &RatFn) -> Result<RatFn> {
        self.checked_mul(&other.inv()?)
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, e: i64) -> Result<RatFn> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs();
        Ok(RatFn { num: base.num.pow(k), den: base.den.pow(k) })
    }

    pub fn scale(&self, c: FieldElement) -> RatFn {
        if c.is_zero() {
            return RatFn::zero(self.field());
        }
        RatFn { num: self.num.scale(c), den: self.den.clone() }
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_poly() {
            return write!(f, "{}", self.num);
        }
        write!(f, "{}/{}", as_factor(&self.num.to_string()), as_factor(&self.den.to_string()))
    }
}

impl fmt::Debug for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFn({self} over {})", self.field().spec())
    }
}

impl Add for &RatFn {
    type Output = RatFn;
    fn add(self, rhs: &RatFn) -> RatFn {
        self.checked_add(rhs).expect("mixed fields")
    }
}

impl Sub for &RatFn {
    type Output = RatFn;
    fn sub(self, rhs: &RatFn) -> RatFn {
        self.checked_sub(rhs).expect("mixed fields")
    }
}

impl Mul for &RatFn {
    type Output = RatFn;
    fn mul(self, rhs: &RatFn) -> RatFn {
        self.checked_mul(rhs).expect("mixed fields")
    }
}

impl Neg for &RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        RatFn { num: -&self.num, den: self.den.clone() }
    }
}

impl From<Poly> for RatFn {
    fn from(p: Poly) -> Self {
        RatFn::from_poly(p)
    }
}
