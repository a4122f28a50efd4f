//! Exact arithmetic in prime fields `F_p` and extensions `F_{p^m}`.
//!
//! An extension field is fixed by an explicit monic irreducible modulus; its
//! elements live in the monomial basis `1, α, …, α^{m-1}` of that modulus.
//! Every element is encoded as the integer `Σ c_i p^i` of its coefficient
//! vector, which gives the lexicographic enumeration order `0, 1, α, α+1, …`.
//!
//! Fields are interned: constructing the same `(p, m, modulus)` twice yields
//! the same [`FieldRef`], so field identity is a pointer comparison and
//! elements stay `Copy`.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Deref, Div, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::display::superscript;
use crate::error::{Error, Result};

const MAX_ORDER: u64 = 1 << 16;
const ADD_TABLE_LIMIT: u32 = 256;

/// Parameters of a finite field: characteristic, degree and (for `m > 1`)
/// the coefficient list of the modulus, constant term first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    pub m: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
}

impl FieldSpec {
    pub fn prime(p: u32) -> Self {
        FieldSpec { p, m: 1, modulus: None }
    }

    pub fn extension(p: u32, m: u32, modulus: Vec<u32>) -> Self {
        FieldSpec { p, m, modulus: Some(modulus) }
    }

    pub fn order(&self) -> u64 {
        (self.p as u64).saturating_pow(self.m)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.order())
    }
}

/// A validated finite field with precomputed arithmetic tables.
pub struct Field {
    spec: FieldSpec,
    q: u32,
    add: Vec<u32>,
    neg: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    alpha_primitive: bool,
}

/// Interned handle to a [`Field`]. Equality is identity.
#[derive(Clone, Copy)]
pub struct FieldRef(&'static Field);

impl PartialEq for FieldRef {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.0, other.0)
    }
}

impl Eq for FieldRef {}

impl Hash for FieldRef {
    fn hash<H: Hasher>(&self, state: &mut H) {
        std::ptr::hash(self.0, state)
    }
}

impl Deref for FieldRef {
    type Target = Field;
    fn deref(&self) -> &Field {
        self.0
    }
}

impl fmt::Debug for FieldRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.spec)
    }
}

fn registry() -> &'static Mutex<Vec<&'static Field>> {
    static FIELDS: OnceLock<Mutex<Vec<&'static Field>>> = OnceLock::new();
    FIELDS.get_or_init(|| Mutex::new(Vec::new()))
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Remainder of `a` modulo the monic polynomial `b` over `Z_p`, dense
/// coefficient lists with constant term first.
fn zp_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u32> = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().unwrap();
        if lead != 0 {
            let shift = r.len() - 1 - db;
            for (i, &c) in b.iter().enumerate() {
                let sub = (lead as u64 * c as u64 % p as u64) as u32;
                r[shift + i] = (r[shift + i] + p - sub) % p;
            }
        }
        r.pop();
    }
    r
}

fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let m = modulus.len() - 1;
    for d in 1..=m / 2 {
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let mut g = Vec::with_capacity(d + 1);
            let mut x = idx;
            for _ in 0..d {
                g.push((x % p as u64) as u32);
                x /= p as u64;
            }
            g.push(1);
            if zp_rem(modulus, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl Field {
    /// Validates `spec` and returns the interned field for it.
    pub fn get(spec: &FieldSpec) -> Result<FieldRef> {
        let spec = Self::validate(spec)?;
        let mut fields = registry().lock().unwrap_or_else(|e| e.into_inner());
        if let Some(f) = fields.iter().find(|f| f.spec == spec) {
            return Ok(FieldRef(f));
        }
        let field: &'static Field = Box::leak(Box::new(Field::build(spec)));
        fields.push(field);
        Ok(FieldRef(field))
    }

    /// `F_p` for prime `p`.
    pub fn prime(p: u32) -> Result<FieldRef> {
        Self::get(&FieldSpec::prime(p))
    }

    fn validate(spec: &FieldSpec) -> Result<FieldSpec> {
        if !is_prime(spec.p) {
            return Err(Error::NonPrimeCharacteristic(spec.p));
        }
        if spec.m == 0 {
            return Err(Error::InvalidModulus("extension degree must be at least 1".into()));
        }
        if spec.order() > MAX_ORDER {
            return Err(Error::FieldTooLarge(spec.order()));
        }
        if spec.m == 1 {
            if let Some(modulus) = &spec.modulus {
                // A degree-1 modulus carries no information; accept only monic linear ones.
                if modulus.len() != 2 || modulus[1] != 1 || modulus[0] >= spec.p {
                    return Err(Error::InvalidModulus(format!("{modulus:?} is not monic of degree 1")));
                }
            }
            return Ok(FieldSpec::prime(spec.p));
        }
        let modulus = spec.modulus.as_ref().ok_or(Error::MissingModulus(spec.m))?;
        if modulus.len() != spec.m as usize + 1 {
            return Err(Error::InvalidModulus(format!("expected {} coefficients, got {}", spec.m + 1, modulus.len())));
        }
        if let Some(&c) = modulus.iter().find(|&&c| c >= spec.p) {
            return Err(Error::InvalidModulus(format!("coefficient {c} not reduced mod {}", spec.p)));
        }
        if modulus[spec.m as usize] != 1 {
            return Err(Error::InvalidModulus("modulus must be monic".into()));
        }
        if !is_irreducible(modulus, spec.p) {
            return Err(Error::ReducibleModulus(modulus.clone(), spec.p));
        }
        Ok(spec.clone())
    }

    fn build(spec: FieldSpec) -> Field {
        let p = spec.p;
        let m = spec.m as usize;
        let q = p.pow(spec.m);
        let digits = |v: u32| -> Vec<u32> {
            let mut out = vec![0; m];
            let mut x = v;
            for d in out.iter_mut() {
                *d = x % p;
                x /= p;
            }
            out
        };
        let undigits = |d: &[u32]| -> u32 { d.iter().rev().fold(0, |acc, &c| acc * p + c) };
        let slow_add = |a: u32, b: u32| -> u32 {
            let (da, db) = (digits(a), digits(b));
            let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
            undigits(&s)
        };
        let slow_mul = |a: u32, b: u32| -> u32 {
            let (da, db) = (digits(a), digits(b));
            let mut prod = vec![0u32; 2 * m - 1];
            for (i, &x) in da.iter().enumerate() {
                for (j, &y) in db.iter().enumerate() {
                    prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % p as u64) as u32;
                }
            }
            let reduced = match &spec.modulus {
                Some(modulus) if m > 1 => zp_rem(&prod, modulus, p),
                _ => prod,
            };
            let mut d = reduced;
            d.resize(m, 0);
            undigits(&d)
        };

        let neg: Vec<u32> =
            (0..q).map(|v| undigits(&digits(v).iter().map(|&c| (p - c) % p).collect::<Vec<_>>())).collect();
        let add = if q <= ADD_TABLE_LIMIT {
            (0..q).flat_map(|a| (0..q).map(move |b| (a, b))).map(|(a, b)| slow_add(a, b)).collect()
        } else {
            Vec::new()
        };

        // Prefer α itself (encoded as p) as the generator so extension
        // elements can be displayed as powers of α.
        let order = |g: u32| -> u32 {
            let mut x = g;
            let mut k = 1;
            while x != 1 {
                x = slow_mul(x, g);
                k += 1;
            }
            k
        };
        let (generator, alpha_primitive) = if q == 2 {
            (1, false)
        } else if m > 1 && order(p) == q - 1 {
            (p, true)
        } else {
            ((2..q).find(|&g| order(g) == q - 1).expect("multiplicative group is cyclic"), false)
        };
        let mut exp = Vec::with_capacity(q as usize - 1);
        let mut log = vec![0u32; q as usize];
        let mut x = 1u32;
        for k in 0..q - 1 {
            exp.push(x);
            log[x as usize] = k;
            x = slow_mul(x, generator);
        }

        Field { spec, q, add, neg, exp, log, alpha_primitive }
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn characteristic(&self) -> u32 {
        self.spec.p
    }

    pub fn degree(&self) -> u32 {
        self.spec.m
    }

    /// Number of elements `q = p^m`.
    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn digits(&self, v: u32) -> Vec<u32> {
        let p = self.spec.p;
        let mut out = vec![0; self.spec.m as usize];
        let mut x = v;
        for d in out.iter_mut() {
            *d = x % p;
            x /= p;
        }
        out
    }

    fn digits_to_raw(&self, d: &[u32]) -> u32 {
        d.iter().rev().fold(0, |acc, &c| acc * self.spec.p + c)
    }

    // Raw arithmetic on encoded values. Callers guarantee `v < q`.

    #[inline]
    pub fn add_raw(&self, a: u32, b: u32) -> u32 {
        if self.spec.m == 1 {
            let s = a + b;
            return if s >= self.q { s - self.q } else { s };
        }
        if !self.add.is_empty() {
            return self.add[(a * self.q + b) as usize];
        }
        let p = self.spec.p;
        let (mut a, mut b) = (a, b);
        let (mut out, mut place) = (0, 1);
        while a > 0 || b > 0 {
            out += ((a % p + b % p) % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out
    }

    #[inline]
    pub fn neg_raw(&self, a: u32) -> u32 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub_raw(&self, a: u32, b: u32) -> u32 {
        self.add_raw(a, self.neg_raw(b))
    }

    #[inline]
    pub fn mul_raw(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let n = self.q - 1;
        let e = self.log[a as usize] + self.log[b as usize];
        self.exp[(if e >= n { e - n } else { e }) as usize]
    }

    #[inline]
    pub fn inv_raw(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let n = self.q - 1;
        let l = self.log[a as usize];
        Some(self.exp[((n - l) % n) as usize])
    }

    pub fn pow_raw(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let n = (self.q - 1) as u64;
        let l = self.log[a as usize] as u64;
        self.exp[((l * (e % n)) % n) as usize]
    }

    /// Maps an integer into the prime subfield.
    pub fn from_int_raw(&self, c: i64) -> u32 {
        c.rem_euclid(self.spec.p as i64) as u32
    }

    pub fn format_raw(&self, v: u32) -> String {
        if self.spec.m == 1 {
            return v.to_string();
        }
        if self.alpha_primitive {
            return match v {
                0 => "0".into(),
                _ => match self.log[v as usize] {
                    0 => "1".into(),
                    1 => "α".into(),
                    k => format!("α{}", superscript(k as u64)),
                },
            };
        }
        let d = self.digits(v);
        let mut terms = Vec::new();
        for (i, &c) in d.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "α".to_string(),
                _ => format!("α{}", superscript(i as u64)),
            };
            terms.push(match (c, i) {
                (_, 0) => c.to_string(),
                (1, _) => mono,
                _ => format!("{c}{mono}"),
            });
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
}

impl FieldRef {
    pub fn zero(self) -> FieldElement {
        FieldElement { field: self, value: 0 }
    }

    pub fn one(self) -> FieldElement {
        FieldElement { field: self, value: 1 }
    }

    /// The class of `α` (the root of the modulus); `None` for prime fields.
    pub fn generator(self) -> Option<FieldElement> {
        (self.degree() > 1).then(|| FieldElement { field: self, value: self.characteristic() })
    }

    pub fn from_int(self, c: i64) -> FieldElement {
        FieldElement { field: self, value: self.from_int_raw(c) }
    }

    /// Builds an element from its coefficients in `1, α, …, α^{m-1}`.
    pub fn element(self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() != self.degree() as usize {
            return Err(Error::InvalidElement(format!(
                "expected {} coefficients, got {}",
                self.degree(),
                coeffs.len()
            )));
        }
        if let Some(&c) = coeffs.iter().find(|&&c| c >= self.characteristic()) {
            return Err(Error::InvalidElement(format!("coefficient {c} not reduced mod {}", self.characteristic())));
        }
        Ok(FieldElement { field: self, value: self.digits_to_raw(coeffs) })
    }

    pub fn from_raw(self, value: u32) -> Result<FieldElement> {
        if value >= self.order() {
            return Err(Error::InvalidElement(format!("encoded value {value} out of range")));
        }
        Ok(FieldElement { field: self, value })
    }

    /// All `q` elements in lexicographic coefficient order.
    pub fn elements(self) -> impl Iterator<Item = FieldElement> {
        (0..self.order()).map(move |value| FieldElement { field: self, value })
    }
}

/// An element of a finite field, tied to its field.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    field: FieldRef,
    value: u32,
}

impl FieldElement {
    pub fn field(&self) -> FieldRef {
        self.field
    }

    /// Integer encoding `Σ c_i p^i`.
    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn coeffs(&self) -> Vec<u32> {
        self.field.digits(self.value)
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn is_one(&self) -> bool {
        self.value == 1
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    pub fn checked_add(self, other: Self) -> Result<Self> {
        self.same_field(&other)?;
        Ok(FieldElement { field: self.field, value: self.field.add_raw(self.value, other.value) })
    }

    pub fn checked_sub(self, other: Self) -> Result<Self> {
        self.same_field(&other)?;
        Ok(FieldElement { field: self.field, value: self.field.sub_raw(self.value, other.value) })
    }

    pub fn checked_mul(self, other: Self) -> Result<Self> {
        self.same_field(&other)?;
        Ok(FieldElement { field: self.field, value: self.field.mul_raw(self.value, other.value) })
    }

    pub fn inv(self) -> Result<Self> {
        let value = self.field.inv_raw(self.value).ok_or(Error::DivisionByZero)?;
        Ok(FieldElement { field: self.field, value })
    }

    pub fn checked_div(self, other: Self) -> Result<Self> {
        self.same_field(&other)?;
        self.checked_mul(other.inv()?)
    }

    pub fn pow(self, e: u64) -> Self {
        FieldElement { field: self.field, value: self.field.pow_raw(self.value, e) }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.format_raw(self.value))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.field.format_raw(self.value), self.field.spec())
    }
}

impl Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(rhs).expect("mixed fields")
    }
}

impl Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(rhs).expect("mixed fields")
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(rhs).expect("mixed fields")
    }
}

impl Div for FieldElement {
    type Output = FieldElement;
    fn div(self, rhs: Self) -> Self {
        self.checked_div(rhs).expect("division by zero or mixed fields")
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> Self {
        FieldElement { field: self.field, value: self.field.neg_raw(self.value) }
    }
}
