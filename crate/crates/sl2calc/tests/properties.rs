//! Randomised algebraic properties of the core types.

use proptest::prelude::*;
use sl2calc::partitions::Partition;
use sl2calc::symfun::{schur_bialternant, schur_dual_giambelli, schur_jacobi_trudy};
use sl2calc::{BigInt, Laurent, NhElement, Poly};

const VARS: usize = 3;

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((prop::collection::vec(0u32..3, VARS), -4i64..=4), 0..5).prop_map(|terms| {
        Poly::from_terms(VARS, terms.into_iter().map(|(e, c)| (e, BigInt::from(c))))
    })
}

fn laurent() -> impl Strategy<Value = Laurent> {
    prop::collection::vec((-4i64..=4, -3i64..=3), 0..5)
        .prop_map(|terms| Laurent::from_terms(terms.into_iter().map(|(k, c)| (k, BigInt::from(c)))))
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(0u32..4, 0..4).prop_map(Partition::from_unsorted)
}

proptest! {
    #[test]
    fn poly_ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn poly_exact_division_inverts_multiplication(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn divided_difference_routes_agree(a in poly(), i in 1usize..VARS) {
        prop_assert_eq!(a.divided_difference(i).unwrap(), a.divided_difference_by_division(i).unwrap());
    }

    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        prop_assert_eq!(a.bar().bar(), a);
    }

    #[test]
    fn conjugation_is_an_involution(p in partition()) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().weight(), p.weight());
    }

    #[test]
    fn schur_formulas_agree(p in partition()) {
        prop_assume!(p.len() <= VARS);
        let bialt = schur_bialternant(&p, VARS).unwrap();
        prop_assert_eq!(&bialt, &schur_jacobi_trudy(&p, VARS));
        prop_assert_eq!(&bialt, &schur_dual_giambelli(&p, VARS));
        prop_assert!(bialt.is_symmetric());
    }

    #[test]
    fn nilhecke_action_is_faithful_to_products(f in poly(), g in poly(), i in 1usize..VARS, j in 1usize..VARS) {
        let u = NhElement::from_poly(f).try_mul(&NhElement::dd(i, VARS).unwrap()).unwrap();
        let v = NhElement::dd(j, VARS).unwrap();
        let uv = u.try_mul(&v).unwrap();
        let x = Poly::var(VARS, 1).unwrap().pow(3) * Poly::var(VARS, 2).unwrap() + g;
        prop_assert_eq!(uv.apply(&x).unwrap(), u.apply(&v.apply(&x).unwrap()).unwrap());
    }
}
