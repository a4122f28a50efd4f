//! Polynomial encoders and their normalization to minimal-basic form.

use crate::conv::smith::smith_form;
use crate::error::{Error, Result};
use crate::matrix::{PolyMatrix, RatMatrix};
use crate::poly::Poly;

/// A full-rank `k × n` polynomial generator matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyEncoder {
    matrix: PolyMatrix,
    row_degrees: Vec<usize>,
    is_basic: bool,
    is_minimal: bool,
}

impl PolyEncoder {
    /// Wraps `matrix`, checking full row rank and computing the flags.
    pub fn new(matrix: PolyMatrix) -> Result<Self> {
        let k = matrix.rows();
        let rank = matrix.to_rat().rank();
        if rank < k || k == 0 {
            return Err(Error::RankDeficient { rank, rows: k });
        }
        let row_degrees = matrix.row_degrees().into_iter().map(|d| d.expect("full rank rows are nonzero")).collect();
        let is_basic = matrix.maximal_minors_gcd()?.is_one();
        let is_minimal = matrix.leading_row_coefficients().rank() == k;
        Ok(PolyEncoder { matrix, row_degrees, is_basic, is_minimal })
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.matrix
    }

    pub fn k(&self) -> usize {
        self.matrix.rows()
    }

    pub fn n(&self) -> usize {
        self.matrix.cols()
    }

    /// Row degrees `ν_i`.
    pub fn row_degrees(&self) -> &[usize] {
        &self.row_degrees
    }

    /// `Σ ν_i`; the code degree once the encoder is minimal-basic.
    pub fn degree(&self) -> usize {
        self.row_degrees.iter().sum()
    }

    /// Maximal minors have gcd 1.
    pub fn is_basic(&self) -> bool {
        self.is_basic
    }

    /// Leading row coefficient matrix has full rank.
    pub fn is_minimal(&self) -> bool {
        self.is_minimal
    }

    pub fn is_minimal_basic(&self) -> bool {
        self.is_basic && self.is_minimal
    }
}

/// Multiplies each row by the monic lcm of its denominators.
pub fn clear_denominators(g: &RatMatrix) -> Result<PolyEncoder> {
    let f = g.field();
    let rank = g.rank();
    if rank < g.rows() || g.rows() == 0 {
        return Err(Error::RankDeficient { rank, rows: g.rows() });
    }
    let rows = (0..g.rows())
        .map(|i| {
            let row = g.row(i);
            let l = row.iter().try_fold(Poly::one(f), |acc, e| acc.lcm(e.den()))?;
            Ok(row.iter().map(|e| e.num() * &l.div_exact(e.den()).expect("lcm is a multiple")).collect())
        })
        .collect::<Result<Vec<Vec<Poly>>>>()?;
    PolyEncoder::new(PolyMatrix::from_rows(f, g.cols(), rows)?)
}

/// Outcome of basic-encoder extraction.
#[derive(Debug, Clone)]
pub struct BasicExtraction {
    pub encoder: PolyEncoder,
    /// Monic gcd of the input's maximal minors.
    pub minor_gcd: Poly,
    /// The minor gcd has a factor other than `z`.
    pub input_was_catastrophic: bool,
}

fn is_power_of_z(p: &Poly) -> bool {
    p.is_monic() && p.weight() == 1
}

/// Returns a basic encoder with the same `F_q(z)`-row space.
///
/// Already-basic input is returned unchanged; otherwise the first `k` rows
/// of `V⁻¹` from the Smith form `U·M·V = [Γ | 0]` are used.
pub fn basic_encoder(m: &PolyEncoder) -> Result<BasicExtraction> {
    let minor_gcd = m.matrix.maximal_minors_gcd()?;
    let input_was_catastrophic = !is_power_of_z(&minor_gcd);
    if minor_gcd.is_one() {
        return Ok(BasicExtraction { encoder: m.clone(), minor_gcd, input_was_catastrophic });
    }
    let s = smith_form(&m.matrix);
    let encoder = PolyEncoder::new(s.v_inv.truncate_rows(m.k()))?;
    debug_assert!(encoder.is_basic);
    Ok(BasicExtraction { encoder, minor_gcd, input_was_catastrophic })
}

/// Unimodular row operations until the leading row coefficient matrix has
/// full rank. Basicness and the row module are preserved; `Σ ν_i` drops to
/// its minimum.
pub fn row_reduce(m: &PolyEncoder) -> Result<PolyEncoder> {
    let mut g = m.matrix.clone();
    let f = g.field();
    while let Some(c) = g.leading_row_coefficients().left_kernel_vector() {
        let degs: Vec<usize> = g.row_degrees().into_iter().map(|d| d.expect("nonzero row")).collect();
        // Reduce the highest-degree row in the dependency.
        let target = (0..c.len()).filter(|&i| c[i] != 0).max_by_key(|&i| (degs[i], std::cmp::Reverse(i))).unwrap();
        let ci_inv = f.inv_raw(c[target]).unwrap();
        for j in 0..c.len() {
            if j == target || c[j] == 0 {
                continue;
            }
            let coef = f.from_raw(f.mul_raw(c[j], ci_inv))?;
            let factor = Poly::monomial(coef, degs[target] - degs[j]);
            g.add_row_multiple(target, j, &factor);
        }
    }
    PolyEncoder::new(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::ratfn::RatFn;

    #[test]
    fn clears_row_denominators() {
        let f3 = Field::prime(3).unwrap();
        let h = RatMatrix::from_rows(
            f3,
            2,
            vec![vec![
                RatFn::new(Poly::from_ints(f3, &[2]), Poly::from_ints(f3, &[1, 1])).unwrap(),
                RatFn::new(Poly::from_ints(f3, &[1]), Poly::from_ints(f3, &[2, 1])).unwrap(),
            ]],
        )
        .unwrap();
        let e = clear_denominators(&h).unwrap();
        assert_eq!(e.matrix().row(0), &[Poly::from_ints(f3, &[1, 2]), Poly::from_ints(f3, &[1, 1])]);
    }

    #[test]
    fn polynomial_input_unchanged() {
        let f5 = Field::prime(5).unwrap();
        let g =
            PolyMatrix::from_rows(f5, 2, vec![vec![Poly::from_ints(f5, &[1, 1]), Poly::from_ints(f5, &[3])]]).unwrap();
        assert_eq!(clear_denominators(&g.to_rat()).unwrap().matrix(), &g);
    }

    #[test]
    fn rank_deficient_rejected() {
        let f2 = Field::prime(2).unwrap();
        let one = RatFn::one(f2);
        let g = RatMatrix::from_rows(f2, 2, vec![vec![one.clone(), one.clone()], vec![one.clone(), one]]).unwrap();
        assert!(matches!(clear_denominators(&g), Err(Error::RankDeficient { rank: 1, rows: 2 })));
    }

    #[test]
    fn row_reduction_lowers_degree() {
        // rows (1, z) and (z, z²+1): unimodular, so the reduced form is constant
        let f2 = Field::prime(2).unwrap();
        let p = |c: &[i64]| Poly::from_ints(f2, c);
        let g = PolyMatrix::from_rows(f2, 2, vec![vec![p(&[1]), p(&[0, 1])], vec![p(&[0, 1]), p(&[1, 0, 1])]]).unwrap();
        let e = PolyEncoder::new(g).unwrap();
        assert!(e.is_basic() && !e.is_minimal());
        let r = row_reduce(&e).unwrap();
        assert!(r.is_minimal_basic());
        assert_eq!(r.degree(), 0);
        assert!(r.matrix().to_rat().same_row_space(&e.matrix().to_rat()).unwrap());
    }
}
