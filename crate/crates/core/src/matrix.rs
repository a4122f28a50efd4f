//! Dense matrices over `F_q`, `F_q[z]` and `F_q(z)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldRef};
use crate::poly::Poly;
use crate::ratfn::RatFn;

fn shape_err(what: &str, a: (usize, usize), b: (usize, usize)) -> Error {
    Error::ShapeMismatch(format!("{what}: {}x{} vs {}x{}", a.0, a.1, b.0, b.1))
}

/// Matrix over `F_q(z)`, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    field: FieldRef,
    rows: usize,
    cols: usize,
    entries: Vec<RatFn>,
}

impl RatMatrix {
    pub fn zeros(field: FieldRef, rows: usize, cols: usize) -> Self {
        RatMatrix { field, rows, cols, entries: vec![RatFn::zero(field); rows * cols] }
    }

    pub fn identity(field: FieldRef, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, RatFn::one(field));
        }
        m
    }

    /// Builds a matrix from rows; all rows must have `cols` entries over `field`.
    pub fn from_rows(field: FieldRef, cols: usize, rows: Vec<Vec<RatFn>>) -> Result<Self> {
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::ShapeMismatch(format!("row {i} has {} entries, expected {cols}", row.len())));
            }
            if row.iter().any(|e| e.field() != field) {
                return Err(Error::MixedFields);
            }
            entries.extend(row);
        }
        Ok(RatMatrix { field, rows: nrows, cols, entries })
    }

    pub fn field(&self) -> FieldRef {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &RatFn {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RatFn) {
        debug_assert_eq!(v.field(), self.field);
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[RatFn] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<RatFn>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut t = RatMatrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.field != other.field {
            return Err(Error::MixedFields);
        }
        if self.cols != other.rows {
            return Err(shape_err("product", self.shape(), other.shape()));
        }
        let mut out = RatMatrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = RatFn::zero(self.field);
                for t in 0..self.cols {
                    let a = self.get(i, t);
                    if a.is_zero() {
                        continue;
                    }
                    acc = &acc + &(a * other.get(t, j));
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.field != other.field {
            return Err(Error::MixedFields);
        }
        if self.cols != other.cols {
            return Err(shape_err("vertical stack", self.shape(), other.shape()));
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(RatMatrix { field: self.field, rows: self.rows + other.rows, cols: self.cols, entries })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RatFn::is_zero)
    }

    /// Row echelon form by exact Gaussian elimination; returns the reduced
    /// rows and the rank.
    fn echelon(&self) -> (Vec<Vec<RatFn>>, usize) {
        let mut m = self.row_vecs();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(rank, p);
            let inv = m[rank][col].inv().expect("pivot is nonzero");
            for r in rank + 1..self.rows {
                if m[r][col].is_zero() {
                    continue;
                }
                let factor = &m[r][col] * &inv;
                let pivot = m[rank].clone();
                for (x, p) in m[r][col..].iter_mut().zip(&pivot[col..]) {
                    *x = &*x - &(&factor * p);
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        (m, rank)
    }

    pub fn rank(&self) -> usize {
        self.echelon().1
    }

    pub fn det(&self) -> Result<RatFn> {
        if self.rows != self.cols {
            return Err(shape_err("determinant", self.shape(), self.shape()));
        }
        let mut m = self.row_vecs();
        let n = self.rows;
        let mut det = RatFn::one(self.field);
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
                return Ok(RatFn::zero(self.field));
            };
            if p != col {
                m.swap(col, p);
                det = -&det;
            }
            det = &det * &m[col][col];
            let inv = m[col][col].inv()?;
            for r in col + 1..n {
                if m[r][col].is_zero() {
                    continue;
                }
                let factor = &m[r][col] * &inv;
                let pivot = m[col].clone();
                for (x, p) in m[r][col..].iter_mut().zip(&pivot[col..]) {
                    *x = &*x - &(&factor * p);
                }
            }
        }
        Ok(det)
    }

    /// Whether `v` lies in the `F_q(z)`-row space.
    pub fn row_space_contains(&self, v: &[RatFn]) -> Result<bool> {
        let extra = RatMatrix::from_rows(self.field, self.cols, vec![v.to_vec()])?;
        Ok(self.vstack(&extra)?.rank() == self.rank())
    }

    pub fn same_row_space(&self, other: &RatMatrix) -> Result<bool> {
        let r = self.rank();
        Ok(r == other.rank() && self.vstack(other)?.rank() == r)
    }

    /// Solves `x · self = v` for a row vector `x`; `None` when `v` is outside
    /// the row space. Requires full row rank.
    pub fn solve_left(&self, v: &[RatFn]) -> Result<Option<Vec<RatFn>>> {
        if v.len() != self.cols {
            return Err(shape_err("left solve", (1, v.len()), self.shape()));
        }
        // Work on the transposed system selfᵀ · xᵀ = vᵀ with an augmented column.
        let t = self.transpose();
        let k = self.rows;
        let mut aug: Vec<Vec<RatFn>> = (0..self.cols)
            .map(|i| {
                let mut r = t.row(i).to_vec();
                r.push(v[i].clone());
                r
            })
            .collect();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..k {
            let Some(p) = (row..aug.len()).find(|&r| !aug[r][col].is_zero()) else {
                continue;
            };
            aug.swap(row, p);
            let inv = aug[row][col].inv()?;
            for x in &mut aug[row][col..=k] {
                *x = &*x * &inv;
            }
            for r in 0..aug.len() {
                if r == row || aug[r][col].is_zero() {
                    continue;
                }
                let factor = aug[r][col].clone();
                let pivot = aug[row].clone();
                for (x, p) in aug[r][col..=k].iter_mut().zip(&pivot[col..=k]) {
                    *x = &*x - &(&factor * p);
                }
            }
            pivots.push(col);
            row += 1;
        }
        if pivots.len() < k {
            return Err(Error::RankDeficient { rank: pivots.len(), rows: k });
        }
        if aug[row..].iter().any(|r| !r[k].is_zero()) {
            return Ok(None);
        }
        Ok(Some((0..k).map(|i| aug[i][k].clone()).collect()))
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} over {}", self.rows, self.cols, self.field.spec())?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Matrix over `F_q[z]`, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    field: FieldRef,
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn zeros(field: FieldRef, rows: usize, cols: usize) -> Self {
        PolyMatrix { field, rows, cols, entries: vec![Poly::zero(field); rows * cols] }
    }

    pub fn identity(field: FieldRef, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Poly::one(field));
        }
        m
    }

    pub fn from_rows(field: FieldRef, cols: usize, rows: Vec<Vec<Poly>>) -> Result<Self> {
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::ShapeMismatch(format!("row {i} has {} entries, expected {cols}", row.len())));
            }
            if row.iter().any(|e| e.field() != field) {
                return Err(Error::MixedFields);
            }
            entries.extend(row);
        }
        Ok(PolyMatrix { field, rows: nrows, cols, entries })
    }

    /// Polynomial entries of `m`, if every denominator is 1.
    pub fn from_rat(m: &RatMatrix) -> Option<Self> {
        let rows = m
            .row_vecs()
            .into_iter()
            .map(|r| r.iter().map(|e| e.as_poly().cloned()).collect::<Option<Vec<_>>>())
            .collect::<Option<Vec<_>>>()?;
        PolyMatrix::from_rows(m.field(), m.cols(), rows).ok()
    }

    pub fn field(&self) -> FieldRef {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Poly) {
        debug_assert_eq!(v.field(), self.field);
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Poly] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Poly>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn to_rat(&self) -> RatMatrix {
        RatMatrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().cloned().map(RatFn::from_poly).collect(),
        }
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut t = PolyMatrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.field != other.field {
            return Err(Error::MixedFields);
        }
        if self.cols != other.rows {
            return Err(shape_err("product", self.shape(), other.shape()));
        }
        let mut out = PolyMatrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Poly::zero(self.field);
                for t in 0..self.cols {
                    acc = &acc + &(self.get(i, t) * other.get(t, j));
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// Row vector times matrix: `u · self`.
    pub fn left_mul(&self, u: &[Poly]) -> Result<Vec<Poly>> {
        if u.len() != self.rows {
            return Err(shape_err("vector product", (1, u.len()), self.shape()));
        }
        Ok((0..self.cols)
            .map(|j| u.iter().enumerate().fold(Poly::zero(self.field), |acc, (i, ui)| &acc + &(ui * self.get(i, j))))
            .collect())
    }

    /// Degree of each row (max entry degree); `None` for a zero row.
    pub fn row_degrees(&self) -> Vec<Option<usize>> {
        (0..self.rows).map(|i| self.row(i).iter().filter_map(Poly::degree).max()).collect()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.entries.iter().filter_map(Poly::degree).max()
    }

    /// Scalar coefficient matrix of `z^t`.
    pub fn coefficient(&self, t: usize) -> FqMatrix {
        let data = self.entries.iter().map(|p| p.raw().get(t).copied().unwrap_or(0)).collect();
        FqMatrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    /// Leading row coefficient matrix: row `i` holds the `z^{ν_i}` coefficients.
    pub fn leading_row_coefficients(&self) -> FqMatrix {
        let degs = self.row_degrees();
        let mut data = Vec::with_capacity(self.rows * self.cols);
        for (i, d) in degs.iter().enumerate() {
            for j in 0..self.cols {
                data.push(match d {
                    Some(d) => self.get(i, j).raw().get(*d).copied().unwrap_or(0),
                    None => 0,
                });
            }
        }
        FqMatrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn det(&self) -> Result<Poly> {
        let d = self.to_rat().det()?;
        Ok(d.as_poly().cloned().expect("determinant of a polynomial matrix is polynomial"))
    }

    /// Monic gcd of all maximal (`rows × rows`) minors. Zero if rank-deficient.
    pub fn maximal_minors_gcd(&self) -> Result<Poly> {
        let k = self.rows;
        if k > self.cols {
            return Err(shape_err("maximal minors", self.shape(), self.shape()));
        }
        let mut g = Poly::zero(self.field);
        for cols in combinations(self.cols, k) {
            let sub = PolyMatrix::from_rows(
                self.field,
                k,
                (0..k).map(|i| cols.iter().map(|&j| self.get(i, j).clone()).collect()).collect(),
            )?;
            g = g.gcd(&sub.det()?)?;
            if g.is_one() {
                break;
            }
        }
        Ok(g)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[dst] += factor · row[src]`
    pub fn add_row_multiple(&mut self, dst: usize, src: usize, factor: &Poly) {
        for j in 0..self.cols {
            let add = factor * self.get(src, j);
            let v = self.get(dst, j) + &add;
            self.set(dst, j, v);
        }
    }

    /// `col[dst] += factor · col[src]`
    pub fn add_col_multiple(&mut self, dst: usize, src: usize, factor: &Poly) {
        for i in 0..self.rows {
            let add = self.get(i, src) * factor;
            let v = self.get(i, dst) + &add;
            self.set(i, dst, v);
        }
    }

    pub fn scale_row(&mut self, i: usize, c: FieldElement) {
        for j in 0..self.cols {
            let v = self.get(i, j).scale(c);
            self.set(i, j, v);
        }
    }

    pub fn scale_col(&mut self, j: usize, c: FieldElement) {
        for i in 0..self.rows {
            let v = self.get(i, j).scale(c);
            self.set(i, j, v);
        }
    }

    /// Keeps only the first `k` rows.
    pub fn truncate_rows(&self, k: usize) -> PolyMatrix {
        let mut out = self.clone();
        out.entries.truncate(k * self.cols);
        out.rows = k.min(self.rows);
        out
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PolyMatrix {}x{} over {}", self.rows, self.cols, self.field.spec())?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// Matrix over `F_q` holding encoded element values.
#[derive(Clone, PartialEq, Eq)]
pub struct FqMatrix {
    field: FieldRef,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl FqMatrix {
    pub fn zeros(field: FieldRef, rows: usize, cols: usize) -> Self {
        FqMatrix { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: FieldRef, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_elements(field: FieldRef, rows: Vec<Vec<FieldElement>>) -> Result<Self> {
        let nrows = rows.len();
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_rows(field, nrows, cols, rows)
    }

    /// Explicit-shape variant, needed for empty matrices (`0×n` or `n×0`).
    pub fn from_rows(field: FieldRef, nrows: usize, cols: usize, rows: Vec<Vec<FieldElement>>) -> Result<Self> {
        if rows.len() != nrows {
            return Err(Error::ShapeMismatch(format!("expected {nrows} rows, got {}", rows.len())));
        }
        let mut data = Vec::with_capacity(nrows * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::ShapeMismatch(format!("row {i} has {} entries, expected {cols}", row.len())));
            }
            for e in row {
                if e.field() != field {
                    return Err(Error::MixedFields);
                }
                data.push(e.value());
            }
        }
        Ok(FqMatrix { field, rows: nrows, cols, data })
    }

    /// Prime-subfield matrix from integers.
    pub fn from_ints(field: FieldRef, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows.iter().flat_map(|r| r.iter().map(|&c| field.from_int_raw(c))).collect();
        FqMatrix { field, rows: rows.len(), cols, data }
    }

    pub fn field(&self) -> FieldRef {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    pub fn raw(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    pub fn set_raw(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v;
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        self.field.from_raw(self.raw(i, j)).expect("stored value in range")
    }

    pub fn row_raw(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_elements(&self, i: usize) -> Vec<FieldElement> {
        (0..self.cols).map(|j| self.get(i, j)).collect()
    }

    /// Row vector (encoded values) times matrix.
    pub fn left_mul_raw(&self, v: &[u32]) -> Vec<u32> {
        debug_assert_eq!(v.len(), self.rows);
        let f = self.field;
        let mut out = vec![0u32; self.cols];
        for (i, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (o, &b) in out.iter_mut().zip(self.row_raw(i)) {
                *o = f.add_raw(*o, f.mul_raw(a, b));
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        let f = self.field;
        let mut m = self.data.clone();
        let c = self.cols;
        let mut rank = 0;
        for col in 0..c {
            let Some(p) = (rank..self.rows).find(|&r| m[r * c + col] != 0) else {
                continue;
            };
            for j in 0..c {
                m.swap(rank * c + j, p * c + j);
            }
            let inv = f.inv_raw(m[rank * c + col]).unwrap();
            for r in rank + 1..self.rows {
                let factor = f.mul_raw(m[r * c + col], inv);
                if factor == 0 {
                    continue;
                }
                for j in col..c {
                    m[r * c + j] = f.sub_raw(m[r * c + j], f.mul_raw(factor, m[rank * c + j]));
                }
            }
            rank += 1;
        }
        rank
    }

    /// A nonzero `x` with `x · self = 0`, if the rows are dependent.
    pub fn left_kernel_vector(&self) -> Option<Vec<u32>> {
        let f = self.field;
        let (k, n) = (self.rows, self.cols);
        // Eliminate on [self | I]; a zero left block exposes the combination.
        let w = n + k;
        let mut m = vec![0u32; k * w];
        for i in 0..k {
            m[i * w..i * w + n].copy_from_slice(self.row_raw(i));
            m[i * w + n + i] = 1;
        }
        let mut row = 0;
        for col in 0..n {
            let Some(p) = (row..k).find(|&r| m[r * w + col] != 0) else {
                continue;
            };
            for j in 0..w {
                m.swap(row * w + j, p * w + j);
            }
            let inv = f.inv_raw(m[row * w + col]).unwrap();
            for r in row + 1..k {
                let factor = f.mul_raw(m[r * w + col], inv);
                if factor == 0 {
                    continue;
                }
                for j in 0..w {
                    m[r * w + j] = f.sub_raw(m[r * w + j], f.mul_raw(factor, m[row * w + j]));
                }
            }
            row += 1;
        }
        (row < k).then(|| m[row * w + n..row * w + w].to_vec())
    }
}

impl fmt::Debug for FqMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FqMatrix {}x{} over {}", self.rows, self.cols, self.field.spec())?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.field.format_raw(self.raw(i, j))).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Field, FieldSpec};

    fn lin(f: FieldRef, c0: FieldElement, c1: FieldElement) -> RatFn {
        RatFn::from_poly(Poly::new(f, &[c0, c1]).unwrap())
    }

    #[test]
    fn rank_of_small_generators() {
        let f3 = Field::prime(3).unwrap();
        let g = RatMatrix::from_rows(
            f3,
            2,
            vec![vec![RatFn::from_poly(Poly::from_ints(f3, &[1, 1])), RatFn::from_poly(Poly::from_ints(f3, &[2, 1]))]],
        )
        .unwrap();
        assert_eq!(g.rank(), 1);

        let f4 = Field::get(&FieldSpec::extension(2, 2, vec![1, 1, 1])).unwrap();
        let (one, a) = (f4.one(), f4.generator().unwrap());
        let a2 = a * a;
        let g = RatMatrix::from_rows(
            f4,
            3,
            vec![
                vec![RatFn::one(f4), RatFn::one(f4), RatFn::one(f4)],
                vec![lin(f4, one, one), lin(f4, a2, a), lin(f4, a, a2)],
            ],
        )
        .unwrap();
        assert_eq!(g.rank(), 2);
    }

    #[test]
    fn identity_product() {
        let f5 = Field::prime(5).unwrap();
        let i1 = RatMatrix::identity(f5, 1);
        assert_eq!(i1.mul(&i1).unwrap(), i1);
        let i2 = RatMatrix::identity(f5, 2);
        assert!(matches!(i1.mul(&i2), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn left_solve_and_row_space() {
        let f2 = Field::prime(2).unwrap();
        let p = |c: &[i64]| RatFn::from_poly(Poly::from_ints(f2, c));
        let g =
            RatMatrix::from_rows(f2, 3, vec![vec![p(&[1]), p(&[1]), p(&[1])], vec![p(&[0, 1, 1]), p(&[]), p(&[0, 1])]])
                .unwrap();
        let target = vec![p(&[0, 0, 1]), p(&[0, 1]), p(&[])];
        let x = g.solve_left(&target).unwrap().unwrap();
        let back: Vec<RatFn> = (0..3).map(|j| &(&x[0] * g.get(0, j)) + &(&x[1] * g.get(1, j))).collect();
        assert_eq!(back, target);
        assert!(g.row_space_contains(&target).unwrap());
        assert_eq!(g.solve_left(&[p(&[1]), p(&[]), p(&[])]).unwrap(), None);
    }

    #[test]
    fn determinant_and_minors() {
        let f2 = Field::prime(2).unwrap();
        let p = |c: &[i64]| Poly::from_ints(f2, c);
        let m = PolyMatrix::from_rows(
            f2,
            3,
            vec![vec![p(&[1]), p(&[1]), p(&[1])], vec![p(&[0, 1, 1]), p(&[]), p(&[0, 1])]],
        )
        .unwrap();
        assert_eq!(m.maximal_minors_gcd().unwrap(), p(&[0, 1]));
        let sq = PolyMatrix::from_rows(f2, 2, vec![vec![p(&[0, 1]), p(&[])], vec![p(&[]), p(&[0, 0, 1])]]).unwrap();
        assert_eq!(sq.det().unwrap(), p(&[0, 0, 0, 1]));
    }

    #[test]
    fn scalar_kernel() {
        let f3 = Field::prime(3).unwrap();
        let m = FqMatrix::from_ints(f3, &[&[1, 2, 0], &[2, 1, 0]]);
        assert_eq!(m.rank(), 1);
        let x = m.left_kernel_vector().unwrap();
        assert!(m.left_mul_raw(&x).iter().all(|&v| v == 0));
        assert!(x.iter().any(|&v| v != 0));
        assert!(FqMatrix::identity(f3, 2).left_kernel_vector().is_none());
    }

    #[test]
    fn combinations_enumerate() {
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
    }
}
