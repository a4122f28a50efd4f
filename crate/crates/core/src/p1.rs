//! Convolutional Goppa codes on the projective line over `F_q(z)`.
//!
//! The evaluation divisor is `D = p_1 + … + p_n`, the twisting divisor is
//! `G = r·p_∞ − s·p_0`. With the basis `t^s, …, t^r` of `L(G)` the code has
//! generator rows `(α_1^m, …, α_n^m)` for `m = s..=r`. The dual code is spanned
//! by residues of `t^m dt / (t^s Π(t − α_i))`, which at `p_j` equal
//! `h_j α_j^m` with `h_j = 1 / (α_j^s Π_{i≠j}(α_j − α_i))`.

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldRef};
use crate::matrix::RatMatrix;
use crate::poly::Poly;
use crate::ratfn::RatFn;

/// Divisor data for a code on `P¹`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct P1Spec {
    field: FieldRef,
    alphas: Vec<RatFn>,
    r: usize,
    s: usize,
}

impl P1Spec {
    /// Validates `0 ≤ s ≤ r < n` and that the points are distinct and avoid `p_0`.
    pub fn new(field: FieldRef, alphas: Vec<RatFn>, r: usize, s: usize) -> Result<Self> {
        let n = alphas.len();
        if alphas.iter().any(|a| a.field() != field) {
            return Err(Error::MixedFields);
        }
        if s > r {
            return Err(Error::InvalidDivisor(format!("s = {s} exceeds r = {r}")));
        }
        if r >= n {
            return Err(Error::InvalidDivisor(format!("r = {r} must be below n = {n}")));
        }
        if let Some(i) = alphas.iter().position(RatFn::is_zero) {
            return Err(Error::DegeneratePoints(format!("point {} is the origin p_0", i + 1)));
        }
        for i in 0..n {
            for j in i + 1..n {
                if alphas[i] == alphas[j] {
                    return Err(Error::DuplicatePoints(format!(
                        "points {} and {} coincide: {}",
                        i + 1,
                        j + 1,
                        alphas[i]
                    )));
                }
            }
        }
        Ok(P1Spec { field, alphas, r, s })
    }

    pub fn field(&self) -> FieldRef {
        self.field
    }

    pub fn alphas(&self) -> &[RatFn] {
        &self.alphas
    }

    pub fn n(&self) -> usize {
        self.alphas.len()
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn s(&self) -> usize {
        self.s
    }

    /// Code dimension `r − s + 1`.
    pub fn k(&self) -> usize {
        self.r - self.s + 1
    }

    /// Dual dimension `n − r + s − 1`.
    pub fn dual_dim(&self) -> usize {
        self.n() - self.k()
    }

    /// Generator matrix with rows `α^s, α^{s+1}, …, α^r`.
    pub fn generator(&self) -> RatMatrix {
        let rows = (self.s..=self.r)
            .map(|e| self.alphas.iter().map(|a| a.pow(e as i64).expect("nonnegative power")).collect())
            .collect();
        RatMatrix::from_rows(self.field, self.n(), rows).expect("rows are well formed")
    }

    /// `h_j = 1 / (α_j^s Π_{i≠j}(α_j − α_i))` for each point.
    pub fn residue_weights(&self) -> Vec<RatFn> {
        (0..self.n())
            .map(|j| {
                let aj = &self.alphas[j];
                let mut den = aj.pow(self.s as i64).expect("nonnegative power");
                for (i, ai) in self.alphas.iter().enumerate() {
                    if i != j {
                        den = &den * &(aj - ai);
                    }
                }
                den.inv().expect("points are distinct and nonzero")
            })
            .collect()
    }

    /// Generator matrix of the dual code: rows `(h_j α_j^m)_j` for
    /// `m = 0..n−r+s−2`.
    pub fn dual(&self) -> Result<RatMatrix> {
        let rows = self.dual_dim();
        if rows == 0 {
            return Err(Error::EmptyDual);
        }
        let h = self.residue_weights();
        let out = (0..rows)
            .map(|m| {
                self.alphas.iter().zip(&h).map(|(a, hj)| hj * &a.pow(m as i64).expect("nonnegative power")).collect()
            })
            .collect();
        RatMatrix::from_rows(self.field, self.n(), out)
    }
}

/// Points `α_i = a^{i−1} z + b^{i−1}` for `i = 1..=n`.
pub fn standard_points(a: FieldElement, b: FieldElement, n: usize) -> Result<Vec<RatFn>> {
    if a.field() != b.field() {
        return Err(Error::MixedFields);
    }
    let field = a.field();
    if a.is_zero() || b.is_zero() {
        return Err(Error::DegeneratePoints("a and b must be nonzero".into()));
    }
    if a == b {
        return Err(Error::DegeneratePoints(format!("a and b must differ, both are {a}")));
    }
    if n as u64 >= field.order() as u64 {
        return Err(Error::DegeneratePoints(format!("n = {n} must be below q = {}", field.order())));
    }
    Ok((0..n)
        .map(|i| {
            let e = i as u64;
            RatFn::from_poly(Poly::new(field, &[b.pow(e), a.pow(e)]).expect("same field"))
        })
        .collect())
}
