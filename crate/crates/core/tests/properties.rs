use lieop::bernoulli::coeff_table;
use lieop::exactalg::{rat, DiffOp, LiePoly, Monomial, Polynomial};
use lieop::realization::{
    coordinate_change_su3, coordinate_change_su3_inverse, operator_from_json, operator_to_json,
    OrbitContext, Weight,
};
use lieop::rootsys::{Family, LieType};
use proptest::prelude::*;

const NV: usize = 3;

fn arb_poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0u32..3, NV), -4i64..5, 1i64..4), 0..5).prop_map(|terms| {
        Polynomial::from_terms(
            NV,
            terms.into_iter().map(|(e, n, d)| (Monomial::from_exponents(e), rat(n, d))),
        )
    })
}

fn arb_op() -> impl Strategy<Value = DiffOp> {
    (arb_poly(), prop::collection::vec((0usize..NV, arb_poly()), 0..3))
        .prop_map(|(s, d)| DiffOp::new(s, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn derivative_is_a_derivation(a in arb_poly(), b in arb_poly(), i in 0usize..NV) {
        prop_assert_eq!((&a * &b).derivative(i), &(&a.derivative(i) * &b) + &(&a * &b.derivative(i)));
    }

    #[test]
    fn commutator_antisymmetry_and_jacobi(a in arb_op(), b in arb_op(), c in arb_op()) {
        prop_assert_eq!(a.commutator(&b), -&b.commutator(&a));
        let j = &(&a.commutator(&b.commutator(&c)) + &b.commutator(&c.commutator(&a)))
            + &c.commutator(&a.commutator(&b));
        prop_assert!(j.is_zero());
    }

    #[test]
    fn commutator_matches_composition(a in arb_op(), b in arb_op(), f in arb_poly()) {
        let lhs = a.commutator(&b).apply(&f);
        let rhs = &a.apply(&b.apply(&f)) - &b.apply(&a.apply(&f));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn su3_change_round_trip(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        let zeta = [a, b, c];
        prop_assert_eq!(coordinate_change_su3_inverse(&coordinate_change_su3(&zeta)), zeta.clone());
        prop_assert_eq!(coordinate_change_su3(&coordinate_change_su3_inverse(&zeta)), zeta);
    }

    #[test]
    fn json_round_trip(op_a in arb_op()) {
        let ctx = OrbitContext::new(LieType::new(Family::A, 2).unwrap(), &[], Weight::Symbolic).unwrap();
        // A2 Borel has three coordinates, matching NV
        let op = op_a.map_coeffs(|p| p.remap(ctx.nvars(), &[0, 1, 2]));
        let json = operator_to_json(&op, ctx.vars());
        let text = serde_json::to_string(&json).unwrap();
        let back = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(operator_from_json(&back, ctx.vars()).unwrap(), op);
    }

    #[test]
    fn ad_jacobi_on_a2(xs in prop::collection::vec((0usize..8, -3i64..4), 1..4),
                       ys in prop::collection::vec((0usize..8, -3i64..4), 1..4),
                       zs in prop::collection::vec((0usize..8, -3i64..4), 1..4)) {
        let ctx = OrbitContext::new(LieType::new(Family::A, 2).unwrap(), &[], Weight::Symbolic).unwrap();
        let alg = ctx.algebra();
        let nv = ctx.nvars();
        let mk = |v: &Vec<(usize, i64)>| {
            v.iter().fold(LiePoly::zero(nv), |acc, &(b, c)| {
                acc.add(&LiePoly::basis(nv, b).scale(&rat(c, 1)))
            })
        };
        let (x, y, z) = (mk(&xs), mk(&ys), mk(&zs));
        let j = x.bracket(&y.bracket(&z, alg), alg)
            .add(&y.bracket(&z.bracket(&x, alg), alg))
            .add(&z.bracket(&x.bracket(&y, alg), alg));
        prop_assert!(j.is_zero());
    }

    #[test]
    fn coefficient_recursions(len in 1usize..24) {
        let t = coeff_table(len).unwrap();
        for n in 0..len {
            let mut s = rat(0, 1);
            for k in 0..=n {
                s += &t.c()[k] / lieop::exactalg::factorial(n - k + 1);
            }
            prop_assert_eq!(s, rat(1, 1) / lieop::exactalg::factorial(n));
        }
    }
}
