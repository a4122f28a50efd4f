mod common;

use cgc::conv::{
    analyze, basic_encoder, check_dual, clear_denominators, free_distance, free_distance_oracle, row_reduce,
    singleton_bound, smith_form, PolyEncoder,
};
use cgc::fixtures::fixtures;
use cgc::p1::{standard_points, P1Spec};
use cgc::serial::poly_matrix_display;
use cgc::{FieldRef, Poly, PolyMatrix, RatFn, RatMatrix};
use common::{
    build_small, coeffs, field, poly, poly_matrix, random_poly_matrix, ratfn, seeded_small_specs, small_p1,
    smith_input, smith_violation,
};
use proptest::prelude::*;

fn pm(f: FieldRef, rows: &[&[&[u32]]]) -> PolyMatrix {
    let cols = rows[0].len();
    PolyMatrix::from_rows(f, cols, rows.iter().map(|r| r.iter().map(|c| poly(f, c)).collect()).collect()).unwrap()
}

fn elliptic_2_matrix() -> PolyMatrix {
    let f = field(2);
    pm(f, &[&[&[1], &[1], &[1], &[1], &[1]], &[&[0, 0, 1, 1], &[], &[0, 0, 1, 1], &[0, 1, 1], &[0, 1, 1]]])
}

#[test]
fn clear_denominators_examples() {
    let f3 = field(3);
    let h = RatMatrix::from_rows(f3, 2, vec![vec![ratfn(f3, &[2], &[1, 1]), ratfn(f3, &[1], &[2, 1])]]).unwrap();
    assert_eq!(poly_matrix_display(clear_denominators(&h).unwrap().matrix()), [["2z+1", "z+1"]]);

    // H row 1 over F_4 for points z+1, z+α, z+α²: multiply by the product
    // of the three linear factors and expand term by term
    let f4 = field(4);
    let lin = [poly(f4, &[1, 1]), poly(f4, &[2, 1]), poly(f4, &[3, 1])];
    let h = RatMatrix::from_rows(
        f4,
        3,
        vec![vec![ratfn(f4, &[1], &[1, 1]), ratfn(f4, &[2], &[2, 1]), ratfn(f4, &[3], &[3, 1])]],
    )
    .unwrap();
    let cleared = clear_denominators(&h).unwrap();
    let expected: Vec<Poly> = (0..3)
        .map(|j| {
            let others = (0..3).filter(|&i| i != j).fold(Poly::one(f4), |acc, i| &acc * &lin[i]);
            others.scale(f4.from_raw([1, 2, 3][j]).unwrap())
        })
        .collect();
    assert_eq!(cleared.matrix().row(0), expected.as_slice());
    assert_eq!(poly_matrix_display(cleared.matrix()), [["z²+z+1", "αz²+α²z+1", "α²z²+αz+1"]]);

    let g = pm(f3, &[&[&[1, 1], &[2, 1]]]);
    assert_eq!(clear_denominators(&g.to_rat()).unwrap().matrix(), &g);
}

#[test]
fn smith_examples() {
    let f3 = field(3);
    let s = smith_form(&pm(f3, &[&[&[1, 1], &[2, 1]]]));
    assert_eq!(s.invariant_factors, vec![Poly::one(f3)]);

    let f2 = field(2);
    let s = smith_form(&elliptic_2_matrix());
    assert_eq!(s.invariant_factors, vec![Poly::one(f2), poly(f2, &[0, 1, 1])]);

    let d = pm(f2, &[&[&[0, 1], &[]], &[&[], &[0, 0, 1]]]);
    let s = smith_form(&d);
    assert_eq!(s.diagonal, d);
    assert_eq!(s.u, PolyMatrix::identity(f2, 2));
    assert_eq!(s.v, PolyMatrix::identity(f2, 2));
}

#[test]
fn basic_encoder_examples() {
    let f3 = field(3);
    let g = PolyEncoder::new(pm(f3, &[&[&[1, 1], &[2, 1]]])).unwrap();
    let b = basic_encoder(&g).unwrap();
    assert_eq!(b.encoder, g);
    assert!(!b.input_was_catastrophic);

    let f2 = field(2);
    let e1 = PolyEncoder::new(pm(f2, &[&[&[1], &[1], &[1]], &[&[0, 1, 1], &[], &[0, 1]]])).unwrap();
    let b = basic_encoder(&e1).unwrap();
    assert_eq!(b.minor_gcd, poly(f2, &[0, 1]));
    assert!(!b.input_was_catastrophic);
    assert!(b.encoder.is_basic());

    let e2 = PolyEncoder::new(elliptic_2_matrix()).unwrap();
    let b = basic_encoder(&e2).unwrap();
    assert_eq!(b.minor_gcd, poly(f2, &[0, 1, 1]));
    assert!(b.input_was_catastrophic);
    assert!(b.encoder.is_basic());
    let witness: Vec<RatFn> =
        [&[0u32, 0, 1][..], &[], &[0, 0, 1], &[0, 1], &[0, 1]].iter().map(|c| RatFn::from_poly(poly(f2, c))).collect();
    assert!(b.encoder.matrix().to_rat().row_space_contains(&witness).unwrap());
    // same rational row space as the evaluation matrix
    assert!(e2.matrix().to_rat().row_space_contains(&witness).unwrap());
}

#[test]
fn row_reduce_examples() {
    for (name, nu) in [("p1-f3", vec![1]), ("p1-f5-k1", vec![2])] {
        let fx = cgc::fixtures::fixture(name).unwrap();
        let a = analyze(&fx.spec.build().unwrap().generator()).unwrap();
        assert_eq!(a.encoder.row_degrees(), nu.as_slice(), "{name}");
    }
    let fx = cgc::fixtures::fixture("p1-f5-k2").unwrap();
    assert_eq!(analyze(&fx.spec.build().unwrap().generator()).unwrap().encoder.degree(), 3);
}

#[test]
fn free_distance_examples() {
    for (name, d) in [("p1-f3", 4), ("p1-f4-k1", 6), ("elliptic-1", 2)] {
        let fx = cgc::fixtures::fixture(name).unwrap();
        let a = analyze(&fx.spec.build().unwrap().generator()).unwrap();
        assert_eq!(free_distance(&a.encoder).unwrap(), d, "{name}");
    }
}

#[test]
fn oracle_examples() {
    let f3 = field(3);
    assert_eq!(free_distance_oracle(&pm(f3, &[&[&[1, 1], &[2, 1]]]), 3).unwrap(), 4);

    let fx = cgc::fixtures::fixture("elliptic-1").unwrap();
    let a = analyze(&fx.spec.build().unwrap().generator()).unwrap();
    assert_eq!(free_distance_oracle(a.encoder.matrix(), 3).unwrap(), 2);
    // u = (z, 1) on the evaluation matrix gives (z², z, 0)
    let g = a.cleared.matrix();
    let f2 = field(2);
    let cw = g.left_mul(&[poly(f2, &[0, 1]), poly(f2, &[1])]).unwrap();
    assert_eq!(cw, vec![poly(f2, &[0, 0, 1]), poly(f2, &[0, 1]), Poly::zero(f2)]);
    assert_eq!(cw.iter().map(Poly::weight).sum::<usize>(), 2);
}

#[test]
fn singleton_and_dual_checks() {
    assert_eq!(singleton_bound(2, 1, 1), 4);
    assert_eq!(singleton_bound(3, 2, 1), 3);
    let f3 = field(3);
    let g = pm(f3, &[&[&[1, 1], &[2, 1]]]).to_rat();
    let h = RatMatrix::from_rows(f3, 2, vec![vec![ratfn(f3, &[2], &[1, 1]), ratfn(f3, &[1], &[2, 1])]]).unwrap();
    assert!(check_dual(&g, &h).unwrap());
    assert!(!check_dual(&g, &g).unwrap());
    let g3 = pm(f3, &[&[&[1], &[1], &[1]]]).to_rat();
    assert!(check_dual(&g3, &h).is_err());
}

#[test]
fn oracle_agrees_on_fixtures() {
    for fx in fixtures() {
        let a = analyze(&fx.spec.build().unwrap().generator()).unwrap();
        let bound = a.report.delta + 4;
        assert_eq!(free_distance_oracle(a.encoder.matrix(), bound).unwrap(), a.report.d_free, "{}", fx.name);
    }
}

/// Random `F_q(z)` combination of the rows of `m`.
fn combination(m: &RatMatrix, weights: &[(Vec<u32>, Vec<u32>)]) -> Vec<RatFn> {
    let f = m.field();
    let mut out = vec![RatFn::zero(f); m.cols()];
    for (i, (n, d)) in weights.iter().enumerate().take(m.rows()) {
        let den = if d.iter().all(|&x| x == 0) { vec![1] } else { d.clone() };
        let w = ratfn(f, n, &den);
        for (o, e) in out.iter_mut().zip(m.row(i)) {
            *o = &*o + &(&w * e);
        }
    }
    out
}

fn weights(q: u32) -> impl Strategy<Value = Vec<(Vec<u32>, Vec<u32>)>> {
    prop::collection::vec((coeffs(q, 1..=2), coeffs(q, 1..=2)), 2)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn smith_postconditions((q, rows) in smith_input()) {
        prop_assert_eq!(smith_violation(&poly_matrix(q, &rows)), None);
    }

    #[test]
    fn normalization_preserves_row_space(
        (q, rows, w1, w2) in prop::sample::select(vec![2u32, 3])
            .prop_flat_map(|q| (Just(q), random_poly_matrix(q, 2, 4, 2), weights(q), weights(q)))
    ) {
        let f = field(q);
        // divide the first row by z+1 so that clearing denominators does work
        let divisor = poly(f, &[1, 1]);
        let g = RatMatrix::from_rows(
            f,
            4,
            rows.iter()
                .enumerate()
                .map(|(i, r)| {
                    r.iter()
                        .map(|c| {
                            let d = if i == 0 { divisor.clone() } else { Poly::one(f) };
                            RatFn::new(poly(f, c), d).unwrap()
                        })
                        .collect()
                })
                .collect(),
        )
        .unwrap();
        if g.rank() < 2 {
            return Err(TestCaseError::reject("rank deficient"));
        }
        let cleared = clear_denominators(&g).unwrap();
        let basic = basic_encoder(&cleared).unwrap().encoder;
        let reduced = row_reduce(&basic).unwrap();
        prop_assert!(reduced.is_minimal_basic());
        let steps = [g.clone(), cleared.matrix().to_rat(), basic.matrix().to_rat(), reduced.matrix().to_rat()];
        for pair in steps.windows(2) {
            let (old, new) = (&pair[0], &pair[1]);
            prop_assert!(new.solve_left(&combination(old, &w1)).unwrap().is_some());
            prop_assert!(old.solve_left(&combination(new, &w2)).unwrap().is_some());
        }
        prop_assert!(reduced.degree() <= basic.degree());
    }

    #[test]
    fn free_distance_within_bound_and_matches_oracle((q, pts, r, s) in small_p1()) {
        let Some(p) = build_small(q, &pts, r, s) else { return Err(TestCaseError::reject("invalid points")) };
        let a = analyze(&p.generator()).unwrap();
        let rep = &a.report;
        prop_assert!(rep.d_free <= rep.singleton_bound);
        prop_assert_eq!(rep.singleton_bound, singleton_bound(rep.n, rep.k, rep.delta));
        prop_assert_eq!(free_distance_oracle(a.encoder.matrix(), rep.delta + 4).unwrap(), rep.d_free);
    }
}

#[test]
fn oracle_agrees_on_seeded_specs() {
    for p in seeded_small_specs() {
        let a = analyze(&p.generator()).unwrap();
        let d = free_distance_oracle(a.encoder.matrix(), a.report.delta + 4).unwrap();
        assert_eq!(d, a.report.d_free, "{p:?}");
    }
}

#[test]
fn standard_family_codes_are_mds_examples() {
    let f5 = field(5);
    let pts = standard_points(f5.from_int(1), f5.from_int(2), 3).unwrap();
    let a = analyze(&P1Spec::new(f5, pts, 2, 2).unwrap().generator()).unwrap();
    assert!(a.report.is_mds);
}
