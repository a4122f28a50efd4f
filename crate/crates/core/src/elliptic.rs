//! Convolutional Goppa codes from plane elliptic curves over `F_q(z)`.
//!
//! Only the affine chart is used: evaluation points are affine, and the point
//! at infinity enters through `G = r·p_∞`, whose Riemann–Roch space has the
//! monomial basis `x^i y^j` with `j ∈ {0, 1}` and pole order `2i + 3j ≤ r`.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::FieldRef;
use crate::matrix::RatMatrix;
use crate::ratfn::RatFn;

/// `y² + a1·xy + a3·y = x³ + a2·x² + a4·x + a6`
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeierstrassCurve {
    pub a1: RatFn,
    pub a2: RatFn,
    pub a3: RatFn,
    pub a4: RatFn,
    pub a6: RatFn,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EllipticPoint {
    pub x: RatFn,
    pub y: RatFn,
}

impl fmt::Display for EllipticPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Exponents `(i, j)` of the monomial `x^i y^j`.
pub type Monomial = (u32, u32);

impl WeierstrassCurve {
    pub fn new(a1: RatFn, a2: RatFn, a3: RatFn, a4: RatFn, a6: RatFn) -> Result<Self> {
        let f = a1.field();
        if [&a2, &a3, &a4, &a6].iter().any(|a| a.field() != f) {
            return Err(Error::MixedFields);
        }
        Ok(WeierstrassCurve { a1, a2, a3, a4, a6 })
    }

    pub fn field(&self) -> FieldRef {
        self.a1.field()
    }

    /// Discriminant from the usual `b2, b4, b6, b8` quantities. Raises
    /// [`Error::SmoothnessFailure`] when it vanishes.
    pub fn discriminant(&self) -> Result<RatFn> {
        let f = self.field();
        // Σ c · Π factors
        let combo = |terms: &[(i64, &[&RatFn])]| {
            terms.iter().fold(RatFn::zero(f), |acc, (c, factors)| {
                let prod = factors.iter().fold(RatFn::constant(f.from_int(*c)), |p, x| &p * x);
                &acc + &prod
            })
        };
        let (a1, a2, a3, a4, a6) = (&self.a1, &self.a2, &self.a3, &self.a4, &self.a6);
        let b2 = combo(&[(1, &[a1, a1]), (4, &[a2])]);
        let b4 = combo(&[(2, &[a4]), (1, &[a1, a3])]);
        let b6 = combo(&[(1, &[a3, a3]), (4, &[a6])]);
        let b8 = combo(&[(1, &[a1, a1, a6]), (4, &[a2, a6]), (-1, &[a1, a3, a4]), (1, &[a2, a3, a3]), (-1, &[a4, a4])]);
        let delta = combo(&[(-1, &[&b2, &b2, &b8]), (-8, &[&b4, &b4, &b4]), (-27, &[&b6, &b6]), (9, &[&b2, &b4, &b6])]);
        if delta.is_zero() {
            return Err(Error::SmoothnessFailure);
        }
        Ok(delta)
    }

    /// Exact substitution test.
    pub fn contains(&self, pt: &EllipticPoint) -> bool {
        if pt.x.field() != self.field() || pt.y.field() != self.field() {
            return false;
        }
        let (x, y) = (&pt.x, &pt.y);
        let lhs = &(&(y * y) + &(&(&self.a1 * x) * y)) + &(&self.a3 * y);
        let x2 = x * x;
        let rhs = &(&(&(&x2 * x) + &(&self.a2 * &x2)) + &(&self.a4 * x)) + &self.a6;
        lhs == rhs
    }
}

/// Monomial basis of `L(r·p_∞)`, ordered by pole order `2i + 3j`.
pub fn l_basis(r: i64) -> Result<Vec<Monomial>> {
    if r < 1 {
        return Err(Error::InvalidDegree(r));
    }
    let r = r as u32;
    let mut out: Vec<Monomial> =
        (0..=r / 2).flat_map(|i| (0..=1).map(move |j| (i, j))).filter(|&(i, j)| 2 * i + 3 * j <= r).collect();
    out.sort_by_key(|&(i, j)| (2 * i + 3 * j, j));
    Ok(out)
}

/// Curve, evaluation points, `r` and the monomial subspace `Γ ⊆ L(r·p_∞)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EllipticSpec {
    curve: WeierstrassCurve,
    points: Vec<EllipticPoint>,
    r: u32,
    gamma: Vec<Monomial>,
}

impl EllipticSpec {
    /// `gamma = None` selects all of `L(r·p_∞)`.
    pub fn new(
        curve: WeierstrassCurve,
        points: Vec<EllipticPoint>,
        r: i64,
        gamma: Option<Vec<Monomial>>,
    ) -> Result<Self> {
        let basis = l_basis(r)?;
        curve.discriminant()?;
        if points.is_empty() {
            return Err(Error::InvalidDivisor("at least one evaluation point is required".into()));
        }
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                if points[i] == points[j] {
                    return Err(Error::DuplicatePoints(format!(
                        "points {} and {} coincide: {}",
                        i + 1,
                        j + 1,
                        points[i]
                    )));
                }
            }
        }
        for (i, p) in points.iter().enumerate() {
            if !curve.contains(p) {
                return Err(Error::PointNotOnCurve(format!("point {} = {p}", i + 1)));
            }
        }
        let gamma = match gamma {
            None => basis,
            Some(g) => {
                if g.is_empty() {
                    return Err(Error::InvalidGamma("subspace must contain at least one monomial".into()));
                }
                for (idx, &(i, j)) in g.iter().enumerate() {
                    if j > 1 {
                        return Err(Error::InvalidGamma(format!("monomial x^{i} y^{j}: exponent of y must be 0 or 1")));
                    }
                    if 2 * i as i64 + 3 * j as i64 > r {
                        return Err(Error::InvalidGamma(format!("monomial x^{i} y^{j} has pole order above r = {r}")));
                    }
                    if g[..idx].contains(&(i, j)) {
                        return Err(Error::InvalidGamma(format!("monomial x^{i} y^{j} listed twice")));
                    }
                }
                g
            }
        };
        Ok(EllipticSpec { curve, points, r: r as u32, gamma })
    }

    pub fn field(&self) -> FieldRef {
        self.curve.field()
    }

    pub fn curve(&self) -> &WeierstrassCurve {
        &self.curve
    }

    pub fn points(&self) -> &[EllipticPoint] {
        &self.points
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn gamma(&self) -> &[Monomial] {
        &self.gamma
    }

    /// Evaluation matrix: one row per monomial in `Γ`, entries `x_t^i y_t^j`.
    pub fn generator(&self) -> RatMatrix {
        let rows = self
            .gamma
            .iter()
            .map(|&(i, j)| {
                self.points
                    .iter()
                    .map(|p| &p.x.pow(i as i64).expect("nonnegative") * &p.y.pow(j as i64).expect("nonnegative"))
                    .collect()
            })
            .collect();
        RatMatrix::from_rows(self.field(), self.points.len(), rows).expect("rows are well formed")
    }
}
