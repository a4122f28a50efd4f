//! Built-in example codes with their published reference data.
//!
//! Five codes on the projective line over `F_3`, `F_4`, `F_5` and two codes
//! from elliptic curves over `F_2(z)`. Each carries an `expected` block with
//! the printed parameters, matrices and state-space realizations.

use crate::field::{Field, FieldRef, FieldSpec};
use crate::matrix::{FqMatrix, RatMatrix};
use crate::poly::Poly;
use crate::ratfn::RatFn;
use crate::serial::{RawElement, RawRatFn};
use crate::spec_file::{CodeSpecFile, ConstructionKind, Expected, Family, Options, RawCurve, RawPoint, RawRealization};
use crate::statespace::Realization;

/// A named example spec.
#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: &'static str,
    pub title: &'static str,
    pub spec: CodeSpecFile,
}

pub const NAMES: [&str; 7] = ["p1-f3", "p1-f4-k2", "p1-f4-k1", "p1-f5-k1", "p1-f5-k2", "elliptic-1", "elliptic-2"];

pub fn f4_spec() -> FieldSpec {
    FieldSpec::extension(2, 2, vec![1, 1, 1])
}

fn field(spec: &FieldSpec) -> FieldRef {
    Field::get(spec).expect("fixture fields are valid")
}

/// Polynomial from raw coefficient values, constant term first.
fn poly(f: FieldRef, c: &[u32]) -> Poly {
    Poly::from_raw(f, c.to_vec())
}

/// `c / Π d_i^{e_i}`.
fn frac(f: FieldRef, c: u32, den: &[(&[u32], u64)]) -> RatFn {
    let d = den.iter().fold(Poly::one(f), |acc, (p, e)| &acc * &poly(f, p).pow(*e));
    RatFn::new(poly(f, &[c]), d).expect("nonzero denominator")
}

fn rp(f: FieldRef, c: &[u32]) -> RatFn {
    RatFn::from_poly(poly(f, c))
}

fn raw_matrix(rows: Vec<Vec<RatFn>>) -> Vec<Vec<RawRatFn>> {
    rows.iter().map(|r| r.iter().map(RawRatFn::from_ratfn).collect()).collect()
}

fn fq(f: FieldRef, rows: &[&[u32]], cols: usize) -> FqMatrix {
    let mut m = FqMatrix::zeros(f, rows.len(), cols);
    for (i, row) in rows.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            m.set_raw(i, j, v);
        }
    }
    m
}

fn realization(f: FieldRef, k: usize, n: usize, delta: usize, abcd: [&[&[u32]]; 4]) -> RawRealization {
    let r = Realization::new(fq(f, abcd[0], delta), fq(f, abcd[1], delta), fq(f, abcd[2], n), fq(f, abcd[3], n))
        .expect("fixture realization shapes");
    debug_assert_eq!((r.k(), r.n(), r.delta()), (k, n, delta));
    RawRealization::from_realization(&r)
}

fn elem(f: FieldRef, v: u32) -> RawElement {
    RawElement::from_element(f.from_raw(v).expect("in range"))
}

fn p1(field_spec: FieldSpec, a: u32, b: u32, n: usize, r: i64, s: i64, expected: Expected) -> CodeSpecFile {
    let f = field(&field_spec);
    CodeSpecFile {
        construction: ConstructionKind::P1,
        field: field_spec,
        curve: None,
        points: None,
        family: Some(Family { a: elem(f, a), b: elem(f, b), n }),
        r,
        s: Some(s),
        gamma: None,
        options: Some(Options { deg_bound_oracle: None, emit_realization: true }),
        expected: Some(expected),
    }
}

fn params(n: usize, k: usize, delta: usize, d: u64, bound: u64) -> Expected {
    Expected { n: Some(n), k: Some(k), delta: Some(delta), d: Some(d), bound: Some(bound), ..Expected::default() }
}

fn p1_f3() -> CodeSpecFile {
    let f = field(&FieldSpec::prime(3));
    let mut e = params(2, 1, 1, 4, 4);
    e.generator = Some(raw_matrix(vec![vec![rp(f, &[1, 1]), rp(f, &[2, 1])]]));
    // 1/(2(z+1)) is 2/(z+1) in canonical form
    e.dual = Some(raw_matrix(vec![vec![frac(f, 2, &[(&[1, 1], 1)]), frac(f, 1, &[(&[2, 1], 1)])]]));
    e.realization = Some(realization(f, 1, 2, 1, [&[&[0]], &[&[1]], &[&[1, 1]], &[&[1, 2]]]));
    p1(FieldSpec::prime(3), 1, 2, 2, 1, 1, e)
}

// F_4 raw values: 1 → 1, α → 2, α² = α+1 → 3.
fn p1_f4_k2() -> CodeSpecFile {
    let f = field(&f4_spec());
    let mut e = params(3, 2, 1, 3, 3);
    e.generator = Some(raw_matrix(vec![
        vec![rp(f, &[1]), rp(f, &[1]), rp(f, &[1])],
        vec![rp(f, &[1, 1]), rp(f, &[3, 2]), rp(f, &[2, 3])],
    ]));
    e.dual = Some(raw_matrix(vec![vec![
        frac(f, 1, &[(&[2, 3], 1), (&[3, 2], 1)]),
        frac(f, 1, &[(&[2, 3], 1), (&[1, 1], 1)]),
        frac(f, 1, &[(&[3, 2], 1), (&[1, 1], 1)]),
    ]]));
    e.realization = Some(realization(f, 2, 3, 1, [&[&[0]], &[&[0], &[1]], &[&[1, 2, 3]], &[&[1, 1, 1], &[1, 3, 2]]]));
    p1(f4_spec(), 2, 3, 3, 1, 0, e)
}

fn p1_f4_k1() -> CodeSpecFile {
    let f = field(&f4_spec());
    let mut e = params(3, 1, 1, 6, 6);
    e.generator = Some(raw_matrix(vec![vec![rp(f, &[1, 1]), rp(f, &[2, 1]), rp(f, &[3, 1])]]));
    e.dual = Some(raw_matrix(vec![
        vec![frac(f, 1, &[(&[1, 1], 1)]), frac(f, 2, &[(&[2, 1], 1)]), frac(f, 3, &[(&[3, 1], 1)])],
        vec![rp(f, &[1]), rp(f, &[2]), rp(f, &[3])],
    ]));
    e.realization = Some(realization(f, 1, 3, 1, [&[&[0]], &[&[1]], &[&[1, 1, 1]], &[&[1, 2, 3]]]));
    p1(f4_spec(), 1, 2, 3, 1, 1, e)
}

fn p1_f5_k1() -> CodeSpecFile {
    let f = field(&FieldSpec::prime(5));
    let mut e = params(3, 1, 2, 9, 9);
    e.generator = Some(raw_matrix(vec![vec![rp(f, &[1, 2, 1]), rp(f, &[4, 4, 1]), rp(f, &[1, 3, 1])]]));
    e.dual = Some(raw_matrix(vec![
        vec![frac(f, 2, &[(&[1, 1], 2)]), frac(f, 2, &[(&[2, 1], 2)]), frac(f, 1, &[(&[4, 1], 2)])],
        vec![frac(f, 2, &[(&[1, 1], 1)]), frac(f, 2, &[(&[2, 1], 1)]), frac(f, 1, &[(&[4, 1], 1)])],
    ]));
    e.realization =
        Some(realization(f, 1, 3, 2, [&[&[0, 1], &[0, 0]], &[&[1, 0]], &[&[2, 4, 3], &[1, 1, 1]], &[&[1, 4, 1]]]));
    p1(FieldSpec::prime(5), 1, 2, 3, 2, 2, e)
}

/// The printed tuple is `(2,1,3,8)` although the generator is 2×4.
fn p1_f5_k2() -> CodeSpecFile {
    let f = field(&FieldSpec::prime(5));
    let mut e = params(2, 1, 3, 8, 8);
    let lin = [[1, 1], [3, 2], [4, 4], [2, 3]];
    e.generator = Some(raw_matrix(vec![
        lin.iter().map(|c| rp(f, c)).collect(),
        lin.iter().map(|c| RatFn::from_poly(poly(f, c).pow(2))).collect(),
    ]));
    let (z1, z2, z3, z4): (&[u32], &[u32], &[u32], &[u32]) = (&[1, 1], &[2, 1], &[3, 1], &[4, 1]);
    e.dual = Some(raw_matrix(vec![
        vec![
            frac(f, 4, &[(z1, 2), (z2, 1), (z3, 1)]),
            frac(f, 4, &[(z2, 1), (z3, 1), (z4, 2)]),
            frac(f, 4, &[(z1, 2), (z2, 1), (z3, 1)]),
            frac(f, 4, &[(z2, 1), (z3, 1), (z4, 2)]),
        ],
        vec![
            frac(f, 4, &[(z1, 1), (z2, 1), (z3, 1)]),
            frac(f, 3, &[(z2, 1), (z3, 1), (z4, 1)]),
            frac(f, 1, &[(z1, 1), (z2, 1), (z3, 1)]),
            frac(f, 2, &[(z2, 1), (z3, 1), (z4, 1)]),
        ],
    ]));
    e.realization = Some(realization(
        f,
        2,
        4,
        3,
        [
            &[&[0, 0, 0], &[0, 0, 1], &[0, 0, 0]],
            &[&[1, 0, 0], &[0, 1, 0]],
            &[&[1, 2, 4, 3], &[2, 2, 2, 2], &[1, 4, 1, 4]],
            &[&[1, 3, 4, 2], &[1, 4, 1, 4]],
        ],
    ));
    p1(FieldSpec::prime(5), 2, 3, 4, 2, 1, e)
}

fn elliptic(a1: &[u32], a23: &[u32], points: &[(&[u32], &[u32])], row2: &[&[u32]], d: u64, bound: u64) -> CodeSpecFile {
    let f = field(&FieldSpec::prime(2));
    let raw = |c: &[u32]| RawRatFn::from_ratfn(&rp(f, c));
    let generator = RatMatrix::from_rows(
        f,
        row2.len(),
        vec![vec![RatFn::one(f); row2.len()], row2.iter().map(|c| rp(f, c)).collect()],
    )
    .expect("fixture shape");
    CodeSpecFile {
        construction: ConstructionKind::Elliptic,
        field: FieldSpec::prime(2),
        curve: Some(RawCurve { a1: raw(a1), a2: raw(a23), a3: raw(a23), a4: raw(&[]), a6: raw(&[]) }),
        points: Some(
            serde_json::to_value(points.iter().map(|(x, y)| RawPoint { x: raw(x), y: raw(y) }).collect::<Vec<_>>())
                .expect("points serialize"),
        ),
        family: None,
        r: 2,
        s: None,
        gamma: Some(vec![[0, 0], [1, 0]]),
        options: None,
        expected: Some(Expected {
            d: Some(d),
            bound: Some(bound),
            generator: Some(raw_matrix(generator.row_vecs())),
            ..Expected::default()
        }),
    }
}

fn elliptic_1() -> CodeSpecFile {
    elliptic(
        &[1, 1],
        &[0, 1, 1],
        &[(&[0, 1, 1], &[0, 0, 1, 1]), (&[], &[0, 1, 1]), (&[0, 1], &[0, 0, 1])],
        &[&[0, 1, 1], &[], &[0, 1]],
        2,
        3,
    )
}

fn elliptic_2() -> CodeSpecFile {
    elliptic(
        &[1, 1, 1],
        &[0, 0, 1, 1],
        &[
            (&[0, 0, 1, 1], &[]),
            (&[], &[0, 0, 1, 1]),
            (&[0, 0, 1, 1], &[0, 0, 0, 1, 0, 1]),
            (&[0, 1, 1], &[0, 1, 0, 1]),
            (&[0, 1, 1], &[0, 0, 1, 0, 1]),
        ],
        &[&[0, 0, 1, 1], &[], &[0, 0, 1, 1], &[0, 1, 1], &[0, 1, 1]],
        4,
        5,
    )
}

pub fn fixture(name: &str) -> Option<Fixture> {
    let (title, spec) = match name {
        "p1-f3" => ("P¹ over F_3, a=1, b=2, n=2, r=s=1", p1_f3()),
        "p1-f4-k2" => ("P¹ over F_4, a=α, b=α², n=3, s=0, r=1", p1_f4_k2()),
        "p1-f4-k1" => ("P¹ over F_4, a=1, b=α, n=3, r=s=1", p1_f4_k1()),
        "p1-f5-k1" => ("P¹ over F_5, a=1, b=2, n=3, r=s=2", p1_f5_k1()),
        "p1-f5-k2" => ("P¹ over F_5, a=2, b=3, n=4, s=1, r=2", p1_f5_k2()),
        "elliptic-1" => ("elliptic curve over F_2(z), three points, Γ = {1, x}", elliptic_1()),
        "elliptic-2" => ("elliptic curve over F_2(z), five points, Γ = {1, x}", elliptic_2()),
        _ => return None,
    };
    let name = NAMES.iter().find(|&&n| n == name).expect("listed");
    Some(Fixture { name, title, spec })
}

pub fn fixtures() -> Vec<Fixture> {
    NAMES.iter().map(|n| fixture(n).expect("listed")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_fixtures_build() {
        for fx in fixtures() {
            fx.spec.build().unwrap_or_else(|e| panic!("{}: {e}", fx.name));
            let text = fx.spec.to_json();
            assert_eq!(CodeSpecFile::from_json(&text).unwrap(), fx.spec, "{}", fx.name);
        }
    }

    #[test]
    fn unknown_fixture() {
        assert!(fixture("p1-f7").is_none());
    }
}
