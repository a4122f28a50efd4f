//! Smith normal form over `F_q[z]`.

use crate::matrix::PolyMatrix;
use crate::poly::Poly;

/// `U · M · V = D` with `U`, `V` unimodular and `D = [diag(γ_1, …) | 0]`.
///
/// `v_inv` is tracked alongside `v` so that a basic encoder can be read off
/// as the leading rows of `V⁻¹`.
#[derive(Debug, Clone)]
pub struct SmithForm {
    pub u: PolyMatrix,
    pub v: PolyMatrix,
    pub v_inv: PolyMatrix,
    pub diagonal: PolyMatrix,
    /// Nonzero diagonal entries, monic, each dividing the next.
    pub invariant_factors: Vec<Poly>,
}

struct Work {
    a: PolyMatrix,
    u: PolyMatrix,
    v: PolyMatrix,
    v_inv: PolyMatrix,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
        self.v_inv.swap_rows(i, j);
    }

    /// `row[dst] += c · row[src]`
    fn row_op(&mut self, dst: usize, src: usize, c: &Poly) {
        self.a.add_row_multiple(dst, src, c);
        self.u.add_row_multiple(dst, src, c);
    }

    /// `col[dst] += c · col[src]`; the inverse update is `row_src(V⁻¹) −= c · row_dst(V⁻¹)`.
    fn col_op(&mut self, dst: usize, src: usize, c: &Poly) {
        self.a.add_col_multiple(dst, src, c);
        self.v.add_col_multiple(dst, src, c);
        self.v_inv.add_row_multiple(src, dst, &-c);
    }
}

/// Computes the Smith form by repeated minimal-degree pivoting.
pub fn smith_form(m: &PolyMatrix) -> SmithForm {
    let f = m.field();
    let (rows, cols) = m.shape();
    let mut w = Work {
        a: m.clone(),
        u: PolyMatrix::identity(f, rows),
        v: PolyMatrix::identity(f, cols),
        v_inv: PolyMatrix::identity(f, cols),
    };
    let mut factors = Vec::new();

    for t in 0..rows.min(cols) {
        loop {
            let pivot = (t..rows)
                .flat_map(|i| (t..cols).map(move |j| (i, j)))
                .filter_map(|(i, j)| w.a.get(i, j).degree().map(|d| (d, i, j)))
                .min();
            let Some((_, pi, pj)) = pivot else {
                break;
            };
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);

            let p = w.a.get(t, t).clone();
            let mut clean = true;
            for i in t + 1..rows {
                if w.a.get(i, t).is_zero() {
                    continue;
                }
                let (q, r) = w.a.get(i, t).divrem(&p).expect("pivot is nonzero");
                w.row_op(i, t, &-&q);
                clean &= r.is_zero();
            }
            for j in t + 1..cols {
                if w.a.get(t, j).is_zero() {
                    continue;
                }
                let (q, r) = w.a.get(t, j).divrem(&p).expect("pivot is nonzero");
                w.col_op(j, t, &-&q);
                clean &= r.is_zero();
            }
            if !clean {
                continue;
            }
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !p.divides(w.a.get(i, j))));
            match offender {
                Some(i) => w.row_op(t, i, &Poly::one(f)),
                None => break,
            }
        }
        let p = w.a.get(t, t).clone();
        if p.is_zero() {
            break;
        }
        let c = p.lead().inv().expect("nonzero lead");
        w.a.scale_row(t, c);
        w.u.scale_row(t, c);
        factors.push(w.a.get(t, t).clone());
    }

    SmithForm { u: w.u, v: w.v, v_inv: w.v_inv, diagonal: w.a, invariant_factors: factors }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    #[test]
    fn coprime_row() {
        let f3 = Field::prime(3).unwrap();
        let m = PolyMatrix::from_rows(f3, 2, vec![vec![Poly::from_ints(f3, &[1, 1]), Poly::from_ints(f3, &[2, 1])]])
            .unwrap();
        let s = smith_form(&m);
        assert_eq!(s.invariant_factors, vec![Poly::one(f3)]);
        assert_eq!(s.u.mul(&m).unwrap().mul(&s.v).unwrap(), s.diagonal);
        assert_eq!(s.v.mul(&s.v_inv).unwrap(), PolyMatrix::identity(f3, 2));
    }

    #[test]
    fn diagonal_input_is_fixed() {
        let f2 = Field::prime(2).unwrap();
        let z = Poly::from_ints(f2, &[0, 1]);
        let z2 = Poly::from_ints(f2, &[0, 0, 1]);
        let m = PolyMatrix::from_rows(f2, 2, vec![vec![z.clone(), Poly::zero(f2)], vec![Poly::zero(f2), z2.clone()]])
            .unwrap();
        let s = smith_form(&m);
        assert_eq!(s.invariant_factors, vec![z, z2]);
        assert_eq!(s.diagonal, m);
        assert_eq!(s.u, PolyMatrix::identity(f2, 2));
        assert_eq!(s.v, PolyMatrix::identity(f2, 2));
    }

    #[test]
    fn non_divisible_diagonal_gets_fixed() {
        // diag(z, z+1) has Smith form diag(1, z(z+1))
        let f2 = Field::prime(2).unwrap();
        let m = PolyMatrix::from_rows(
            f2,
            2,
            vec![
                vec![Poly::from_ints(f2, &[0, 1]), Poly::zero(f2)],
                vec![Poly::zero(f2), Poly::from_ints(f2, &[1, 1])],
            ],
        )
        .unwrap();
        let s = smith_form(&m);
        assert_eq!(s.invariant_factors, vec![Poly::one(f2), Poly::from_ints(f2, &[0, 1, 1])]);
        assert_eq!(s.u.mul(&m).unwrap().mul(&s.v).unwrap(), s.diagonal);
    }
}
