//! Property tests for the algebraic and geometric invariants.

mod common;

use proptest::prelude::*;
use toricsolve::arith::{first_subresultant, gcd, interpolate, quotient_invert, squarefree_part};
use toricsolve::fill::{construct_irreducible_fill, generic_system, is_fill, is_irreducible, CoeffSource};
use toricsolve::geometry::mixed_volume;
use toricsolve::resultant::{build_matrix_retrying, eval_resultant, MatrixCache};
use toricsolve::solver::{solve, SolveOptions};
use toricsolve::{CoeffAssignment, Field, Point, Scalar, SparseSystem, Support, SupportTuple, UniPoly};

fn gf(p: u64, k: u32) -> Field {
    if k == 1 {
        Field::prime(p).unwrap()
    } else {
        Field::extension(p, k).unwrap()
    }
}

fn poly(field: &Field, cs: &[i64]) -> UniPoly {
    UniPoly::new(field, cs.iter().map(|&c| field.from_i64(c)).collect())
}

fn support_2d(max: i64, min_len: usize) -> impl Strategy<Value = Vec<Point>> {
    prop::collection::btree_set((0..=max, 0..=max), min_len..=5)
        .prop_map(|s| s.into_iter().map(|(a, b)| vec![a, b]).collect())
}

fn pair_2d() -> impl Strategy<Value = SupportTuple> {
    (support_2d(2, 2), support_2d(2, 2))
        .prop_map(|(a, b)| SupportTuple::new(2, vec![Support::new(2, a).unwrap(), Support::new(2, b).unwrap()]).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn finite_field_axioms(
        (p, k) in prop_oneof![Just((2u64, 3u32)), Just((3, 2)), Just((7, 1)), Just((5, 3))],
        a in 0u64..10_000, b in 0u64..10_000, c in 0u64..10_000,
    ) {
        let f = gf(p, k);
        let size = f.size().unwrap() as u64;
        let (x, y, z) = (f.element(a % size), f.element(b % size), f.element(c % size));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&(&x - &y) + &y, x.clone());
        if !x.is_zero() {
            prop_assert!((&x * &x.inv().unwrap()).is_one());
        }
        // Frobenius is additive
        prop_assert_eq!((&x + &y).pow(p), &x.pow(p) + &y.pow(p));
    }

    #[test]
    fn division_with_remainder(
        a in prop::collection::vec(-9i64..=9, 1..8),
        d in prop::collection::vec(-9i64..=9, 1..5),
    ) {
        let q = Field::rationals();
        let (f, g) = (poly(&q, &a), poly(&q, &d));
        prop_assume!(!g.is_zero());
        let (quo, rem) = f.div_rem(&g);
        prop_assert_eq!(quo.mul(&g).add(&rem), f.clone());
        prop_assert!(rem.is_zero() || rem.deg() < g.deg());
        let h = gcd(&f, &g);
        if !h.is_zero() {
            prop_assert!(f.rem(&h).is_zero() && g.rem(&h).is_zero());
        }
    }

    #[test]
    fn squarefree_part_of_a_square(a in prop::collection::vec(-5i64..=5, 2..5)) {
        let q = Field::rationals();
        let f = poly(&q, &a);
        prop_assume!(f.deg() >= 1);
        let s = squarefree_part(&f).unwrap();
        prop_assert_eq!(squarefree_part(&f.mul(&f)).unwrap(), s.clone());
        prop_assert!(gcd(&s, &s.derivative()).deg() == 0);
    }

    #[test]
    fn interpolation_round_trip(a in prop::collection::vec(-50i64..=50, 1..9), p in prop_oneof![Just(0u64), Just(101)]) {
        let field = if p == 0 { Field::rationals() } else { Field::prime(p).unwrap() };
        let f = poly(&field, &a);
        let bound = a.len() - 1;
        let pts: Vec<(Scalar, Scalar)> = (0..=bound).map(|j| {
            let x = field.node(j).unwrap();
            (x.clone(), f.eval(&x))
        }).collect();
        prop_assert_eq!(interpolate(&pts, bound).unwrap(), f);
    }

    #[test]
    fn inverse_modulo_a_squarefree_polynomial(a in prop::collection::vec(-9i64..=9, 1..4)) {
        let q = Field::rationals();
        // t^4 - 2 is irreducible over Q, so every nonzero residue is invertible
        let h = poly(&q, &[-2, 0, 0, 0, 1]);
        let f = poly(&q, &a);
        prop_assume!(!f.is_zero());
        let inv = quotient_invert(&f, &h).unwrap();
        prop_assert!(f.mul(&inv).rem(&h).sub(&UniPoly::one(&q)).is_zero());
    }

    #[test]
    fn subresultant_finds_the_common_root(
        r in (1i64..30).prop_flat_map(|d| (-30i64..30, Just(d))),
        a in prop::collection::vec(-9i64..=9, 2..5),
        b in prop::collection::vec(-9i64..=9, 2..5),
    ) {
        let q = Field::rationals();
        prop_assume!(r.0 != 0);
        let root = q.from_i64(r.0).div(&q.from_i64(r.1));
        let lin = UniPoly::new(&q, vec![-&root, q.one()]);
        let (f, g) = (lin.mul(&poly(&q, &a)), lin.mul(&poly(&q, &b)));
        prop_assume!(!f.is_zero() && !g.is_zero() && f.deg() >= 2 && g.deg() >= 2);
        prop_assume!(gcd(&f, &g).deg() == 1);
        let (r0, r1) = first_subresultant(&f, &g).unwrap();
        prop_assert_eq!(-&r1.div(&r0), root);
    }

    #[test]
    fn mixed_volume_matches_polarization(e in pair_2d()) {
        prop_assert_eq!(mixed_volume(&e).unwrap() as i128, common::mixed_volume_polarization(&e));
    }

    #[test]
    fn mixed_volume_symmetry_and_translation(e in pair_2d(), v in (-3i64..=3, -3i64..=3)) {
        let m = mixed_volume(&e).unwrap();
        let swapped = SupportTuple::new(2, vec![e.get(1).clone(), e.get(0).clone()]).unwrap();
        prop_assert_eq!(mixed_volume(&swapped).unwrap(), m);
        let moved = e.replace(0, e.get(0).translate(&[v.0, v.1]));
        prop_assert_eq!(mixed_volume(&moved).unwrap(), m);
    }

    #[test]
    fn mixed_volume_is_linear_under_dilation(e in pair_2d(), k in 1i64..=3) {
        let m = mixed_volume(&e).unwrap();
        let dilated: Vec<Point> = e.get(0).points().iter().map(|p| p.iter().map(|x| k * x).collect()).collect();
        let d = e.replace(0, Support::new(2, dilated).unwrap());
        prop_assert_eq!(mixed_volume(&d).unwrap(), k as u64 * m);
    }

    #[test]
    fn constructed_fills_are_irreducible_fills(e in pair_2d()) {
        let m = mixed_volume(&e).unwrap();
        prop_assume!(m > 0);
        let d = construct_irreducible_fill(&e).unwrap();
        prop_assert_eq!(mixed_volume(&d).unwrap(), m);
        prop_assert!(is_fill(&d, &e).unwrap().verdict);
        prop_assert!(is_irreducible(&d).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    /// `Res(f_1, f_2, λ f_3) = λ^{M(E_1, E_2)} Res(f_1, f_2, f_3)`.
    #[test]
    fn resultant_degree_in_the_last_polynomial(e in pair_2d(), seed in 0u64..1000, lambda in 2i64..5) {
        let m = mixed_volume(&e).unwrap();
        prop_assume!(m > 0);
        let field = Field::prime(1_000_003).unwrap();
        let ebar = e.with(Support::simplex(2, 1)).unwrap();
        let mat = build_matrix_retrying(&ebar, 0, 8).unwrap();
        let f = generic_system(&e, &field, CoeffSource::Seeded(seed)).unwrap();
        let mut coeffs = f.coeffs().to_vec();
        coeffs.push([seed as i64 + 1, -3, 7].iter().map(|&c| field.from_i64(c)).collect());
        let mut scaled = coeffs.clone();
        let l = field.from_i64(lambda);
        scaled[2] = scaled[2].iter().map(|c| c * &l).collect();
        let r = eval_resultant(&mat, &CoeffAssignment::new(&ebar, coeffs).unwrap(), &field);
        let rs = eval_resultant(&mat, &CoeffAssignment::new(&ebar, scaled).unwrap(), &field);
        if let (Ok(r), Ok(rs)) = (r, rs) {
            prop_assert_eq!(rs, &r * &l.pow(m));
        }
    }

    /// Every torus point the solver emits over GF(p) satisfies the system,
    /// and the torus count never exceeds the mixed volume.
    #[test]
    fn solver_points_are_roots(e in pair_2d(), seed in 0u64..1000) {
        let m = mixed_volume(&e).unwrap();
        prop_assume!(m > 0);
        let field = Field::prime(31).unwrap();
        let f: SparseSystem = generic_system(&e, &field, CoeffSource::Seeded(seed)).unwrap();
        let out = solve(&f, &SolveOptions { seed, ..Default::default() }, &MatrixCache::new(None)).unwrap();
        prop_assert!(out.torus_count_with_mult <= m as usize);
        prop_assert_eq!(out.h.deg(), m as usize);
        let lifted = f.map_field(&out.field).unwrap();
        for p in out.points.iter().filter(|p| p.in_torus()) {
            prop_assert!(lifted.is_root(&p.coords));
        }
    }
}
