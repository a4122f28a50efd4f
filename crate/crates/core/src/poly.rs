//! Dense univariate polynomials over a finite field, in the variable `z`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::display::superscript;
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldRef};

/// Polynomial over `F_q`, coefficients ascending by power of `z`.
///
/// The coefficient list never has a trailing zero; the zero polynomial has an
/// empty list and no degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: FieldRef,
    coeffs: Vec<u32>,
}

impl Poly {
    pub fn zero(field: FieldRef) -> Self {
        Poly { field, coeffs: Vec::new() }
    }

    pub fn one(field: FieldRef) -> Self {
        Poly { field, coeffs: vec![1] }
    }

    /// The indeterminate `z`.
    pub fn z(field: FieldRef) -> Self {
        Poly { field, coeffs: vec![0, 1] }
    }

    pub fn constant(c: FieldElement) -> Self {
        Self::from_raw(c.field(), vec![c.value()])
    }

    pub fn monomial(c: FieldElement, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c.value();
        Self::from_raw(c.field(), coeffs)
    }

    /// Builds a polynomial from field elements, ascending by power.
    pub fn new(field: FieldRef, coeffs: &[FieldElement]) -> Result<Self> {
        if coeffs.iter().any(|c| c.field() != field) {
            return Err(Error::MixedFields);
        }
        Ok(Self::from_raw(field, coeffs.iter().map(|c| c.value()).collect()))
    }

    /// Builds a polynomial from encoded coefficient values. Values must be
    /// below the field order.
    pub fn from_raw(field: FieldRef, mut coeffs: Vec<u32>) -> Self {
        debug_assert!(coeffs.iter().all(|&c| c < field.order()));
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    /// Builds a polynomial with prime-subfield coefficients given as integers.
    pub fn from_ints(field: FieldRef, coeffs: &[i64]) -> Self {
        Self::from_raw(field, coeffs.iter().map(|&c| field.from_int_raw(c)).collect())
    }

    pub fn field(&self) -> FieldRef {
        self.field
    }

    pub fn raw(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        let v = self.coeffs.get(i).copied().unwrap_or(0);
        self.field.from_raw(v).expect("stored coefficient in range")
    }

    pub fn lead(&self) -> FieldElement {
        self.coeff(self.coeffs.len().saturating_sub(1))
    }

    /// Largest `k` with `z^k` dividing `self`; `None` for zero.
    pub fn z_valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|&c| c != 0)
    }

    fn check(&self, other: &Poly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let f = self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                f.add_raw(a, b)
            })
            .collect();
        Ok(Poly::from_raw(f, coeffs))
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let f = self.field;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(f));
        }
        let mut out = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add_raw(out[i + j], f.mul_raw(a, b));
            }
        }
        Ok(Poly::from_raw(f, out))
    }

    pub fn scale(&self, c: FieldElement) -> Poly {
        assert_eq!(c.field(), self.field, "mixed fields");
        let f = self.field;
        Poly::from_raw(f, self.coeffs.iter().map(|&a| f.mul_raw(a, c.value())).collect())
    }

    /// Multiplies by `z^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        Poly { field: self.field, coeffs }
    }

    pub fn pow(&self, mut e: u64) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Scales to leading coefficient 1; zero stays zero.
    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(self.lead().inv().expect("nonzero leading coefficient"))
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    /// Euclidean division: `self = q·b + r` with `deg r < deg b`.
    pub fn divrem(&self, b: &Poly) -> Result<(Poly, Poly)> {
        self.check(b)?;
        let f = self.field;
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = f.inv_raw(*b.coeffs.last().unwrap()).unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= db {
            return Ok((Poly::zero(f), self.clone()));
        }
        let mut quot = vec![0u32; rem.len() - db];
        for shift in (0..quot.len()).rev() {
            let c = f.mul_raw(rem[shift + db], lead_inv);
            quot[shift] = c;
            if c == 0 {
                continue;
            }
            for (i, &bc) in b.coeffs.iter().enumerate() {
                rem[shift + i] = f.sub_raw(rem[shift + i], f.mul_raw(c, bc));
            }
        }
        rem.truncate(db);
        Ok((Poly::from_raw(f, quot), Poly::from_raw(f, rem)))
    }

    /// Exact quotient; fails unless `b` divides `self`.
    pub fn div_exact(&self, b: &Poly) -> Result<Poly> {
        let (q, r) = self.divrem(b)?;
        if !r.is_zero() {
            return Err(Error::InvalidElement("inexact polynomial division".into()));
        }
        Ok(q)
    }

    pub fn divides(&self, other: &Poly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.divrem(self).map(|(_, r)| r.is_zero()).unwrap_or(false)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Extended Euclid: returns `(g, s, t)` with `s·self + t·other = g`, `g` monic.
    pub fn xgcd(&self, other: &Poly) -> Result<(Poly, Poly, Poly)> {
        self.check(other)?;
        let f = self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(f), Poly::zero(f));
        let (mut t0, mut t1) = (Poly::zero(f), Poly::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1)?;
            r0 = std::mem::replace(&mut r1, r);
            let s = &s0 - &(&q * &s1);
            s0 = std::mem::replace(&mut s1, s);
            let t = &t0 - &(&q * &t1);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return Ok((r0, s0, t0));
        }
        let c = r0.lead().inv()?;
        Ok((r0.scale(c), s0.scale(c), t0.scale(c)))
    }

    pub fn lcm(&self, other: &Poly) -> Result<Poly> {
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(self.field));
        }
        let g = self.gcd(other)?;
        Ok(self.checked_mul(&other.div_exact(&g)?)?.monic())
    }

    pub fn eval(&self, x: FieldElement) -> Result<FieldElement> {
        if x.field() != self.field {
            return Err(Error::MixedFields);
        }
        let f = self.field;
        let v = self.coeffs.iter().rev().fold(0, |acc, &c| f.add_raw(f.mul_raw(acc, x.value()), c));
        f.from_raw(v)
    }

    /// Number of nonzero coefficients: the Hamming weight of the coefficient sequence.
    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let field = self.field;
        let mut terms = Vec::new();
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z{}", superscript(k as u64)),
            };
            let cs = field.format_raw(c);
            terms.push(if k == 0 {
                cs
            } else if c == 1 {
                mono
            } else if cs.contains('+') {
                format!("({cs}){mono}")
            } else {
                format!("{cs}{mono}")
            });
        }
        f.write_str(&terms.join("+"))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self} over {})", self.field.spec())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.checked_add(rhs).expect("mixed fields")
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.checked_sub(rhs).expect("mixed fields")
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.checked_mul(rhs).expect("mixed fields")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let f = self.field;
        Poly { field: f, coeffs: self.coeffs.iter().map(|&c| f.neg_raw(c)).collect() }
    }
}
