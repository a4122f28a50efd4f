//! State-space realizations `(A, B, C, D)` of polynomial encoders.
//!
//! Row-vector convention: `s_{t+1} = s_t·A + u_t·B` and `y_t = s_t·C + u_t·D`,
//! with `s_0 = 0`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldRef};
use crate::matrix::{FqMatrix, PolyMatrix};
use crate::poly::Poly;

const EXHAUSTIVE_LIMIT: u64 = 1 << 16;
const EXHAUSTIVE_HARD_LIMIT: u64 = 1 << 22;
const SAMPLE_COUNT: usize = 256;
const SAMPLE_SEED: u64 = 0x5eed_c0de;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realization {
    pub a: FqMatrix,
    pub b: FqMatrix,
    pub c: FqMatrix,
    pub d: FqMatrix,
}

impl Realization {
    /// Checks the shapes `A: δ×δ`, `B: k×δ`, `C: δ×n`, `D: k×n`.
    pub fn new(a: FqMatrix, b: FqMatrix, c: FqMatrix, d: FqMatrix) -> Result<Self> {
        let f = d.field();
        if [&a, &b, &c].iter().any(|m| m.field() != f) {
            return Err(Error::MixedFields);
        }
        let delta = a.rows();
        let (k, n) = d.shape();
        if a.cols() != delta || b.shape() != (k, delta) || c.shape() != (delta, n) {
            return Err(Error::ShapeMismatch(format!(
                "A {:?}, B {:?}, C {:?}, D {:?} are not consistent",
                a.shape(),
                b.shape(),
                c.shape(),
                d.shape()
            )));
        }
        Ok(Realization { a, b, c, d })
    }

    pub fn field(&self) -> FieldRef {
        self.d.field()
    }

    pub fn k(&self) -> usize {
        self.d.rows()
    }

    pub fn n(&self) -> usize {
        self.d.cols()
    }

    pub fn delta(&self) -> usize {
        self.a.rows()
    }

    /// One step of the recurrence on encoded values: returns `(s_{t+1}, y_t)`.
    pub fn step_raw(&self, state: &[u32], input: &[u32]) -> (Vec<u32>, Vec<u32>) {
        let f = self.field();
        let add = |x: Vec<u32>, y: Vec<u32>| -> Vec<u32> { x.iter().zip(&y).map(|(&a, &b)| f.add_raw(a, b)).collect() };
        let next = add(self.a.left_mul_raw(state), self.b.left_mul_raw(input));
        let out = add(self.c.left_mul_raw(state), self.d.left_mul_raw(input));
        (next, out)
    }

    /// Runs `steps` steps from the zero state; inputs past the end of `u` are zero.
    pub fn encode(&self, u: &[Vec<FieldElement>], steps: usize) -> Result<Vec<Vec<FieldElement>>> {
        let f = self.field();
        let needed = u.len() + self.delta();
        if steps < needed {
            return Err(Error::TooFewSteps { needed, given: steps });
        }
        let mut raw_inputs = Vec::with_capacity(u.len());
        for (t, ut) in u.iter().enumerate() {
            if ut.len() != self.k() {
                return Err(Error::ShapeMismatch(format!(
                    "input at step {t} has {} symbols, expected {}",
                    ut.len(),
                    self.k()
                )));
            }
            if ut.iter().any(|e| e.field() != f) {
                return Err(Error::MixedFields);
            }
            raw_inputs.push(ut.iter().map(|e| e.value()).collect::<Vec<_>>());
        }
        let out = self.encode_raw(&raw_inputs, steps);
        Ok(out.into_iter().map(|y| y.into_iter().map(|v| f.from_raw(v).expect("in range")).collect()).collect())
    }

    fn encode_raw(&self, u: &[Vec<u32>], steps: usize) -> Vec<Vec<u32>> {
        let zero = vec![0u32; self.k()];
        let mut state = vec![0u32; self.delta()];
        let mut out = Vec::with_capacity(steps);
        for t in 0..steps {
            let (next, y) = self.step_raw(&state, u.get(t).unwrap_or(&zero));
            out.push(y);
            state = next;
        }
        out
    }
}

/// Controller-canonical realization: one shift register of length `ν_i` per
/// input, most recent symbol first, registers concatenated in row order.
pub fn realize(m: &PolyMatrix) -> Realization {
    let f = m.field();
    let (k, n) = m.shape();
    let degs: Vec<usize> = m.row_degrees().into_iter().map(|d| d.unwrap_or(0)).collect();
    let delta: usize = degs.iter().sum();
    let mut a = FqMatrix::zeros(f, delta, delta);
    let mut b = FqMatrix::zeros(f, k, delta);
    let mut c = FqMatrix::zeros(f, delta, n);
    let mut d = FqMatrix::zeros(f, k, n);
    let mut offset = 0;
    for (i, &nu) in degs.iter().enumerate() {
        for j in 0..n {
            d.set_raw(i, j, m.get(i, j).raw().first().copied().unwrap_or(0));
        }
        if nu == 0 {
            continue;
        }
        b.set_raw(i, offset, 1);
        for l in 0..nu {
            // slot offset + l holds u_i[t-1-l]
            if l + 1 < nu {
                a.set_raw(offset + l, offset + l + 1, 1);
            }
            for j in 0..n {
                c.set_raw(offset + l, j, m.get(i, j).raw().get(l + 1).copied().unwrap_or(0));
            }
        }
        offset += nu;
    }
    Realization { a, b, c, d }
}

/// Behavioral check: the realization's output equals the coefficients of
/// `u·M` for every input of degree at most `max_deg` (exhaustive when
/// feasible, otherwise a fixed-seed sample).
pub fn verify(r: &Realization, m: &PolyMatrix, max_deg: usize) -> Result<bool> {
    let h = Harness::new(r, m, max_deg)?;
    match h.total() {
        Some(total) if total <= EXHAUSTIVE_LIMIT => Ok(h.exhaustive(total)),
        _ => {
            let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
            let q = m.field().order();
            Ok((0..SAMPLE_COUNT).all(|_| {
                let digits: Vec<u32> = (0..h.symbols()).map(|_| rng.gen_range(0..q)).collect();
                h.check(&digits)
            }))
        }
    }
}

/// Like [`verify`] but always enumerates all `q^{k(max_deg+1)}` inputs.
pub fn verify_exhaustive(r: &Realization, m: &PolyMatrix, max_deg: usize) -> Result<bool> {
    let h = Harness::new(r, m, max_deg)?;
    match h.total() {
        Some(total) if total <= EXHAUSTIVE_HARD_LIMIT => Ok(h.exhaustive(total)),
        _ => Err(Error::SearchSpaceTooLarge(format!("{}^{} inputs", m.field().order(), h.symbols()))),
    }
}

struct Harness<'a> {
    r: &'a Realization,
    m: &'a PolyMatrix,
    len: usize,
    steps: usize,
}

impl<'a> Harness<'a> {
    fn new(r: &'a Realization, m: &'a PolyMatrix, max_deg: usize) -> Result<Self> {
        if r.field() != m.field() {
            return Err(Error::MixedFields);
        }
        if (r.k(), r.n()) != m.shape() {
            return Err(Error::ShapeMismatch(format!(
                "realization is {}→{}, encoder is {}×{}",
                r.k(),
                r.n(),
                m.rows(),
                m.cols()
            )));
        }
        let len = max_deg + 1;
        let steps = len + r.delta().max(m.max_degree().unwrap_or(0));
        Ok(Harness { r, m, len, steps })
    }

    fn symbols(&self) -> usize {
        self.m.rows() * self.len
    }

    fn total(&self) -> Option<u64> {
        (self.m.field().order() as u64).checked_pow(self.symbols() as u32)
    }

    /// `digits[t·k + i]` is the coefficient of `z^t` in input `i`.
    fn check(&self, digits: &[u32]) -> bool {
        let (f, k) = (self.m.field(), self.m.rows());
        let u: Vec<Vec<u32>> = digits.chunks(k).map(<[u32]>::to_vec).collect();
        let sim = self.r.encode_raw(&u, self.steps);
        let polys: Vec<Poly> = (0..k).map(|i| Poly::from_raw(f, (0..self.len).map(|t| u[t][i]).collect())).collect();
        let prod = self.m.left_mul(&polys).expect("shapes checked");
        (0..self.steps).all(|t| (0..self.m.cols()).all(|j| sim[t][j] == prod[j].raw().get(t).copied().unwrap_or(0)))
    }

    fn exhaustive(&self, total: u64) -> bool {
        let q = self.m.field().order();
        let mut digits = vec![0u32; self.symbols()];
        for _ in 0..total {
            if !self.check(&digits) {
                return false;
            }
            for d in digits.iter_mut() {
                *d += 1;
                if *d < q {
                    break;
                }
                *d = 0;
            }
        }
        true
    }
}
