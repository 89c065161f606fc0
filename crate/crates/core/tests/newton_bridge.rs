mod common;

use adams_core::psi_lambda_rings::{lambda_structure, FreePsiRing, RingError, SphereElem, SphereKRing};
use adams_core::symmetric_kernel::{
    lambda_sequence_from_psi, newton_lambda_from_psi, newton_psi_from_lambda, psi_sequence_from_lambda, NewtonError,
    OperationSequence,
};
use adams_core::{BigInt, Integers, MultiPoly};
use common::{arb_poly, binomial, int};
use num_traits::Pow;
use proptest::prelude::*;

#[test]
fn integers_give_binomials() {
    for m in -10i64..=10 {
        let seq = OperationSequence::psi(vec![int(m); 6]);
        for i in 1..=6usize {
            let lam = newton_lambda_from_psi(&Integers, &seq, i).unwrap();
            assert_eq!(lam, binomial(m, i as u32), "λ^{i}({m})");
        }
    }
    assert_eq!(lambda_structure(&Integers, &int(5), 2).unwrap(), int(10));
}

#[test]
fn free_ring_is_not_special() {
    let ring = FreePsiRing::new(['a']);
    let err = lambda_structure(&ring, &MultiPoly::gen('a', 1), 2).unwrap_err();
    let witness = MultiPoly::gen('a', 2) - MultiPoly::gen('a', 1).pow(2);
    assert_eq!(
        err,
        RingError::Newton(NewtonError::NonIntegralDivision { step: 2, numerator: witness.to_string() })
    );
}

#[test]
fn sphere_lambda_closed_form() {
    // Ψ^k y = k^n y and y^2 = 0 force λ^i(y) = (-1)^{i-1} i^{n-1} y
    for n in 1..=6u32 {
        let ring = SphereKRing::new(n);
        for i in 1..=6usize {
            let sign = if i % 2 == 1 { 1 } else { -1 };
            let expected = SphereElem::new(0, sign * Pow::pow(int(i as i64), n - 1));
            assert_eq!(lambda_structure(&ring, &ring.y(), i).unwrap(), expected, "n = {n}, i = {i}");
        }
        let two = lambda_structure(&ring, &ring.y(), 2).unwrap();
        assert_eq!(two.y, -Pow::pow(int(2), n - 1));
    }
}

#[test]
fn sequence_kinds_are_checked() {
    let seq = OperationSequence::lambda(vec![int(3), int(3)]);
    assert!(matches!(newton_lambda_from_psi(&Integers, &seq, 1), Err(NewtonError::WrongKind { .. })));
    assert!(matches!(newton_psi_from_lambda(&Integers, &seq, 3), Err(NewtonError::OutOfRange { .. })));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn roundtrip_from_lambda_on_z(lams in prop::collection::vec(-50i64..=50, 1..=6)) {
        let lams: Vec<BigInt> = lams.into_iter().map(BigInt::from).collect();
        let psis = psi_sequence_from_lambda(&Integers, &lams);
        prop_assert_eq!(lambda_sequence_from_psi(&Integers, &psis).unwrap(), lams);
    }

    #[test]
    fn roundtrip_from_psi_where_defined(psis in prop::collection::vec(-50i64..=50, 1..=6)) {
        let psis: Vec<BigInt> = psis.into_iter().map(BigInt::from).collect();
        if let Ok(lams) = lambda_sequence_from_psi(&Integers, &psis) {
            prop_assert_eq!(psi_sequence_from_lambda(&Integers, &lams), psis);
        }
    }

    #[test]
    fn roundtrip_on_polynomials(lams in prop::collection::vec(arb_poly(), 1..=4)) {
        let ring = adams_core::bigpoly::PolyRing;
        let psis = psi_sequence_from_lambda(&ring, &lams);
        prop_assert_eq!(lambda_sequence_from_psi(&ring, &psis).unwrap(), lams);
    }
}
