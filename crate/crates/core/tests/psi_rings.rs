mod common;

use adams_core::extension_lab::ExtensionModel;
use adams_core::psi_lambda_rings::{
    is_special, lambda_operations, tensor_psi, FreePsiRing, PsiRing, SphereElem, SphereKRing, Specialness,
};
use adams_core::symmetric_kernel::{universal_p, universal_pij, UniversalConfig};
use adams_core::{BigInt, CommRing, Integers, MultiPoly, Var};
use common::{arb_poly_in, int};
use proptest::prelude::*;

const PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

fn free() -> FreePsiRing {
    FreePsiRing::new(['a', 'b'])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn psi_composes(p in arb_poly_in(&['a', 'b'], 4), i in 1u64..=6, j in 1u64..=6) {
        let r = free();
        let lhs = r.psi(i, &r.psi(j, &p).unwrap()).unwrap();
        prop_assert_eq!(&lhs, &r.psi(i * j, &p).unwrap());
        prop_assert_eq!(lhs, r.psi(j, &r.psi(i, &p).unwrap()).unwrap());
    }

    #[test]
    fn psi_is_a_ring_map(u in arb_poly_in(&['a', 'b'], 4), v in arb_poly_in(&['a', 'b'], 4), k in 1u64..=6) {
        let r = free();
        let psi = |x: &MultiPoly| r.psi(k, x).unwrap();
        prop_assert_eq!(psi(&(&u * &v)), &psi(&u) * &psi(&v));
        prop_assert_eq!(psi(&(&u + &v)), &psi(&u) + &psi(&v));
        prop_assert_eq!(psi(&MultiPoly::one()), MultiPoly::one());
        prop_assert_eq!(r.psi(1, &u).unwrap(), u);
    }

    #[test]
    fn sphere_psi_laws(u in -30i64..=30, b in -30i64..=30, c in -30i64..=30, d in -30i64..=30,
                       n in 1u32..=8, k in 1u64..=6, l in 1u64..=6) {
        let r = SphereKRing::new(n);
        let (x, y) = (SphereElem::new(u, b), SphereElem::new(c, d));
        prop_assert_eq!(r.psi(k, &r.mul(&x, &y)).unwrap(), r.mul(&r.psi(k, &x).unwrap(), &r.psi(k, &y).unwrap()));
        prop_assert_eq!(r.psi(k, &r.psi(l, &x).unwrap()).unwrap(), r.psi(k * l, &x).unwrap());
        prop_assert_eq!(r.psi(1, &x).unwrap(), x);
    }
}

#[test]
fn psi_one_is_identity_everywhere() {
    assert_eq!(Integers.psi(1, &int(-7)).unwrap(), int(-7));
    let m = ExtensionModel::from_nu2(2, 4, int(1), &int(-1), 4).unwrap();
    for b in adams_core::psi_lambda_rings::FiniteRank::basis(&m) {
        assert_eq!(m.psi(1, &b).unwrap(), b);
    }
}

#[test]
fn specialness() {
    for n in 1..=10 {
        assert!(is_special(&SphereKRing::new(n), &PRIMES, &[]).unwrap().is_special(), "n = {n}");
    }
    match is_special(&FreePsiRing::new(['a']), &PRIMES, &[]).unwrap() {
        Specialness::Witness { prime, element, defect } => {
            assert_eq!(prime, 2);
            assert_eq!(element, MultiPoly::gen('a', 1));
            assert_eq!(defect, "a2 - a1^2".parse().unwrap());
        }
        Specialness::Special => panic!("the free Ψ-ring is not special"),
    }
}

#[test]
fn tensor_of_free_rings() {
    let (ring, prod) = tensor_psi(&FreePsiRing::new(['a']), &MultiPoly::gen('a', 1), &FreePsiRing::new(['b']), &MultiPoly::gen('b', 2)).unwrap();
    assert_eq!(ring.psi(3, &prod).unwrap(), MultiPoly::gen('a', 3) * MultiPoly::gen('b', 6));
}

/// `λ^1..λ^top` on the sphere ring, with `λ^0 = 1`.
fn lambdas(r: &SphereKRing, x: &SphereElem, top: usize) -> Vec<SphereElem> {
    let mut out = vec![r.one()];
    out.extend(lambda_operations(r, x, top).unwrap());
    out
}

fn eval_universal(r: &SphereKRing, p: &MultiPoly, lx: &[SphereElem], ly: &[SphereElem]) -> SphereElem {
    p.eval_in(r, |v: Var| match v.family {
        'r' => lx.get(v.index as usize).cloned(),
        's' => ly.get(v.index as usize).cloned(),
        _ => None,
    })
    .unwrap()
}

fn sphere_samples() -> Vec<SphereElem> {
    let mut out = Vec::new();
    for u in [-3, -1, 0, 1, 2, 5] {
        for b in [-2, 0, 1, 3] {
            out.push(SphereElem::new(u, b));
        }
    }
    out
}

#[test]
fn lambda_ring_axioms_on_spheres() {
    let cfg = UniversalConfig::default();
    for n in 1..=5 {
        let r = SphereKRing::new(n);
        let samples = sphere_samples();
        // λ^0 = 1, λ^1 = id, λ^i(1) = 0 for i > 1
        let l1 = lambdas(&r, &r.one(), 4);
        assert_eq!(l1[1], r.one());
        assert!(l1[2..].iter().all(|e| r.is_zero(e)));
        for x in &samples {
            let lx = lambdas(&r, x, 4);
            assert_eq!(&lx[1], x);
            for y in &samples {
                let ly = lambdas(&r, y, 4);
                let lxy = lambdas(&r, &r.add(x, y), 4);
                let prod = lambdas(&r, &r.mul(x, y), 4);
                for i in 1..=4 {
                    // λ^i(x + y) = Σ λ^j(x) λ^{i−j}(y)
                    let sum = (0..=i).fold(r.zero(), |acc, j| r.add(&acc, &r.mul(&lx[j], &ly[i - j])));
                    assert_eq!(lxy[i], sum, "sum rule n = {n}, i = {i}, x = {x}, y = {y}");
                    let p = universal_p(i as u64, &cfg).unwrap();
                    assert_eq!(prod[i], eval_universal(&r, &p, &lx, &ly), "product rule n = {n}, i = {i}");
                }
            }
            for (i, j) in [(1usize, 2usize), (2, 1), (2, 2), (1, 3), (3, 1), (1, 4), (4, 1)] {
                let inner = lambdas(&r, &lx[j], i);
                let p = universal_pij(i as u64, j as u64, &cfg).unwrap();
                assert_eq!(inner[i], eval_universal(&r, &p, &lx, &[]), "λ^{i}λ^{j}, n = {n}, x = {x}");
            }
        }
    }
}

#[test]
fn lambda_on_integers_matches_binomials() {
    let r = BigInt::from(8);
    let ls = lambda_operations(&Integers, &r, 6).unwrap();
    let expected: Vec<BigInt> = (1..=6).map(|i| common::binomial(8, i)).collect();
    assert_eq!(ls, expected);
}
