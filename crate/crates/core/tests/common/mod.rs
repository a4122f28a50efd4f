#![allow(dead_code)]

use cgc::conv::smith_form;
use cgc::p1::P1Spec;
use cgc::{Error, Field, FieldRef, FieldSpec, Poly, PolyMatrix, RatFn};
use proptest::prelude::*;
use proptest::strategy::ValueTree;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

/// Moduli used for the extension fields in the test suites.
pub fn field_spec(q: u32) -> FieldSpec {
    match q {
        4 => FieldSpec::extension(2, 2, vec![1, 1, 1]),
        8 => FieldSpec::extension(2, 3, vec![1, 1, 0, 1]),
        9 => FieldSpec::extension(3, 2, vec![1, 0, 1]),
        16 => FieldSpec::extension(2, 4, vec![1, 1, 0, 0, 1]),
        25 => FieldSpec::extension(5, 2, vec![2, 0, 1]),
        p => FieldSpec::prime(p),
    }
}

pub fn field(q: u32) -> FieldRef {
    Field::get(&field_spec(q)).unwrap()
}

pub fn poly(f: FieldRef, c: &[u32]) -> Poly {
    Poly::from_raw(f, c.to_vec())
}

pub fn ratfn(f: FieldRef, num: &[u32], den: &[u32]) -> RatFn {
    RatFn::new(poly(f, num), poly(f, den)).unwrap()
}

/// Raw coefficient vectors of length `len` over a field of order `q`.
pub fn coeffs(q: u32, len: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..q, len)
}

/// A nonzero polynomial of degree at most `max_deg`.
pub fn nonzero_coeffs(q: u32, max_deg: usize) -> impl Strategy<Value = Vec<u32>> {
    coeffs(q, 1..=max_deg + 1).prop_filter("nonzero", |c| c.iter().any(|&x| x != 0))
}

pub const ORDERS: [u32; 14] = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25];

/// First violated field axiom over `F_q`, checked on every pair and triple.
#[allow(clippy::eq_op)]
pub fn field_axiom_violation(q: u32) -> Option<String> {
    let f = field(q);
    let (zero, one) = (f.zero(), f.one());
    let elems: Vec<_> = f.elements().collect();
    if elems.len() != q as usize {
        return Some(format!("q={q}: {} elements", elems.len()));
    }
    if f.zero().inv() != Err(Error::DivisionByZero) {
        return Some(format!("q={q}: zero is invertible"));
    }
    for &a in &elems {
        if a + zero != a || a * one != a || a + (-a) != zero || a - a != zero {
            return Some(format!("q={q}: identities fail at {a}"));
        }
        if !a.is_zero() && (a * a.inv().unwrap() != one || a.pow(q as u64 - 1) != one) {
            return Some(format!("q={q}: inverse fails at {a}"));
        }
        for &b in &elems {
            if a + b != b + a || a * b != b * a {
                return Some(format!("q={q}: commutativity fails at {a}, {b}"));
            }
            if !b.is_zero() && (a / b) * b != a {
                return Some(format!("q={q}: division fails at {a}, {b}"));
            }
            for &c in &elems {
                if (a + b) + c != a + (b + c) || (a * b) * c != a * (b * c) || a * (b + c) != a * b + a * c {
                    return Some(format!("q={q}: associativity or distributivity fails at {a}, {b}, {c}"));
                }
            }
        }
    }
    None
}

/// First violated Smith-form postcondition for `m`.
pub fn smith_violation(m: &PolyMatrix) -> Option<String> {
    let f = m.field();
    let s = smith_form(m);
    if s.u.mul(m).unwrap().mul(&s.v).unwrap() != s.diagonal {
        return Some("U·M·V ≠ D".into());
    }
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if i != j && !s.diagonal.get(i, j).is_zero() {
                return Some(format!("D[{i}][{j}] ≠ 0"));
            }
        }
    }
    let gammas = &s.invariant_factors;
    if gammas.len() != m.to_rat().rank() {
        return Some("invariant factor count ≠ rank".into());
    }
    for (i, g) in gammas.iter().enumerate() {
        if !g.is_monic() || s.diagonal.get(i, i) != g {
            return Some(format!("γ_{i} not monic or not on the diagonal"));
        }
    }
    if gammas.windows(2).any(|w| !w[0].divides(&w[1])) {
        return Some("divisibility chain broken".into());
    }
    let unimodular = |d: Poly| d.is_constant() && !d.is_zero();
    if !unimodular(s.u.det().unwrap()) || !unimodular(s.v.det().unwrap()) {
        return Some("U or V not unimodular".into());
    }
    if s.v.mul(&s.v_inv).unwrap() != PolyMatrix::identity(f, m.cols()) {
        return Some("V·V⁻¹ ≠ I".into());
    }
    None
}

pub fn random_poly_matrix(q: u32, k: usize, n: usize, deg: usize) -> impl Strategy<Value = Vec<Vec<Vec<u32>>>> {
    prop::collection::vec(prop::collection::vec(coeffs(q, 0..=deg + 1), n), k)
}

pub fn poly_matrix(q: u32, rows: &[Vec<Vec<u32>>]) -> PolyMatrix {
    let f = field(q);
    let n = rows[0].len();
    PolyMatrix::from_rows(f, n, rows.iter().map(|r| r.iter().map(|c| poly(f, c)).collect()).collect()).unwrap()
}

/// 2×4 polynomial matrices of degree ≤ 2 over `F_2` or `F_3`.
pub fn smith_input() -> impl Strategy<Value = (u32, Vec<Vec<Vec<u32>>>)> {
    prop::sample::select(vec![2u32, 3]).prop_flat_map(|q| (Just(q), random_poly_matrix(q, 2, 4, 2)))
}

#[derive(Debug, Clone)]
pub struct RandomSpec {
    pub q: u32,
    pub alphas: Vec<(Vec<u32>, Vec<u32>)>,
    pub r: usize,
    pub s: usize,
}

impl RandomSpec {
    pub fn build(&self) -> Option<P1Spec> {
        let f = field(self.q);
        let alphas = self.alphas.iter().map(|(n, d)| ratfn(f, n, d)).collect();
        P1Spec::new(f, alphas, self.r, self.s).ok()
    }
}

/// P¹ specs over `q ∈ {3,4,5,7,8}` with `n ≤ 6` rational points.
pub fn random_spec() -> impl Strategy<Value = RandomSpec> {
    (prop::sample::select(vec![3u32, 4, 5, 7, 8]), 2usize..=6)
        .prop_flat_map(|(q, n)| {
            let point = (nonzero_coeffs(q, 2), prop_oneof![3 => Just(vec![1u32]), 1 => nonzero_coeffs(q, 1)]);
            (Just(q), prop::collection::vec(point, n), 0..n)
        })
        .prop_flat_map(|(q, alphas, s)| {
            let n = alphas.len();
            (Just(q), Just(alphas), s..n, Just(s))
        })
        .prop_map(|(q, alphas, r, s)| RandomSpec { q, alphas, r, s })
}

/// Small P¹ specs with linear points.
pub fn small_p1() -> impl Strategy<Value = (u32, Vec<(u32, u32)>, usize, usize)> {
    (prop::sample::select(vec![2u32, 3, 4, 5]), 2usize..=4)
        .prop_flat_map(|(q, n)| (Just(q), prop::collection::vec((0..q, 0..q), n), 0..n))
        .prop_flat_map(|(q, pts, s)| {
            let n = pts.len();
            (Just(q), Just(pts), s..n, Just(s))
        })
}

pub fn build_small(q: u32, pts: &[(u32, u32)], r: usize, s: usize) -> Option<P1Spec> {
    let f = field(q);
    let alphas = pts.iter().map(|&(b, a)| RatFn::from_poly(poly(f, &[b, a]))).collect();
    P1Spec::new(f, alphas, r, s).ok()
}

pub fn seeded_runner(seed: u8) -> TestRunner {
    TestRunner::new_with_rng(Config::default(), TestRng::from_seed(RngAlgorithm::ChaCha, &[seed; 32]))
}

/// Draws values from `strategy` with a fixed seed until `keep` accepts `count` of them.
pub fn seeded_sample<S: Strategy, T>(
    seed: u8,
    count: usize,
    strategy: S,
    keep: impl Fn(S::Value) -> Option<T>,
) -> Vec<T> {
    let mut runner = seeded_runner(seed);
    let mut out = Vec::new();
    while out.len() < count {
        if let Some(t) = keep(strategy.new_tree(&mut runner).unwrap().current()) {
            out.push(t);
        }
    }
    out
}

/// The 25 small specs used for oracle equivalence, fixed by seed.
pub fn seeded_small_specs() -> Vec<P1Spec> {
    seeded_sample(7, 25, small_p1(), |(q, pts, r, s)| build_small(q, &pts, r, s))
}
