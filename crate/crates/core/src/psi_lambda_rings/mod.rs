//! Concrete Ψ-rings and λ-rings.
//!
//! A Ψ-ring is a commutative ring with ring endomorphisms `Ψ^k` such that
//! `Ψ^1 = id` and `Ψ^k Ψ^l = Ψ^{kl}`. It is special when `Ψ^p(r) ≡ r^p mod p`
//! for every prime `p`. On a torsion-free special Ψ-ring the λ-operations are
//! recovered from the Adams operations by the Newton identities; see
//! [`lambda_structure`].

mod free;
mod module;
mod sphere;

use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

use crate::ring::{CommRing, Integers};
use crate::sphere_extalg::is_prime;
use crate::symmetric_kernel::{lambda_sequence_from_psi, NewtonError};

pub use free::{tensor_psi, FreePsiRing};
pub use module::{
    check_lambda_derivation, check_psi_derivation, twisted_module, Axiom, DerivationCandidate, LambdaModuleSpec,
    PsiModuleSpec, Verdict,
};
pub use sphere::{SphereElem, SphereKRing};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("generator family '{0}' is not part of the ring")]
    UnknownFamily(char),
    #[error("alphabets overlap in family '{0}'")]
    AlphabetClash(char),
    #[error("Ψ^{0} is not defined on this model")]
    PsiUndefined(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("Adams operations are indexed from 1")]
    ZeroIndex,
    #[error(transparent)]
    Newton(#[from] NewtonError),
}

/// A commutative ring with Adams operations.
pub trait PsiRing: CommRing {
    fn psi(&self, k: u64, x: &Self::Elem) -> Result<Self::Elem, RingError>;

    /// Ring generators; always part of the specialness sample.
    fn generators(&self) -> Vec<Self::Elem>;
}

/// A ring whose underlying group is free of finite rank, with a chosen basis.
pub trait FiniteRank: CommRing {
    fn basis(&self) -> Vec<Self::Elem>;
    fn coords(&self, x: &Self::Elem) -> Vec<BigInt>;
    fn from_coords(&self, c: &[BigInt]) -> Self::Elem;

    fn rank(&self) -> usize {
        self.basis().len()
    }
}

/// The integers with the trivial Adams operations `Ψ^k = id`.
impl PsiRing for Integers {
    fn psi(&self, k: u64, x: &BigInt) -> Result<BigInt, RingError> {
        if k == 0 {
            return Err(RingError::ZeroIndex);
        }
        Ok(x.clone())
    }

    fn generators(&self) -> Vec<BigInt> {
        vec![BigInt::from(1)]
    }
}

impl FiniteRank for Integers {
    fn basis(&self) -> Vec<BigInt> {
        vec![BigInt::from(1)]
    }
    fn coords(&self, x: &BigInt) -> Vec<BigInt> {
        vec![x.clone()]
    }
    fn from_coords(&self, c: &[BigInt]) -> BigInt {
        c[0].clone()
    }
}

/// Outcome of a specialness test.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Specialness<E> {
    Special,
    /// `Ψ^prime(element) − element^prime = defect` is not divisible by `prime`.
    Witness { prime: u64, element: E, defect: E },
}

impl<E> Specialness<E> {
    pub fn is_special(&self) -> bool {
        matches!(self, Specialness::Special)
    }
}

/// The default specialness sample: generators and all products of two.
pub fn default_samples<R: PsiRing>(ring: &R) -> Vec<R::Elem> {
    let gens = ring.generators();
    let mut out = gens.clone();
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i..] {
            out.push(ring.mul(a, b));
        }
    }
    out
}

/// Tests `Ψ^p(r) ≡ r^p mod pR` on the default sample plus `extra`, for each
/// listed prime, and returns the first failure.
pub fn is_special<R: PsiRing>(ring: &R, primes: &[u64], extra: &[R::Elem]) -> Result<Specialness<R::Elem>, RingError> {
    if let Some(&p) = primes.iter().find(|&&p| !is_prime(p)) {
        return Err(RingError::NotPrime(p));
    }
    let mut samples = default_samples(ring);
    samples.extend_from_slice(extra);
    for &p in primes {
        let modulus = BigInt::from(p);
        let exp = u32::try_from(p).expect("prime fits in u32");
        for x in &samples {
            let defect = ring.sub(&ring.psi(p, x)?, &ring.pow(x, exp));
            if !ring.is_multiple_of(&defect, &modulus) {
                return Ok(Specialness::Witness { prime: p, element: x.clone(), defect });
            }
        }
    }
    Ok(Specialness::Special)
}

/// `λ^1(x)..λ^n(x)` from the Adams operations, on a torsion-free ring.
pub fn lambda_operations<R: PsiRing>(ring: &R, x: &R::Elem, n: usize) -> Result<Vec<R::Elem>, RingError> {
    let psis = (1..=n as u64).map(|k| ring.psi(k, x)).collect::<Result<Vec<_>, _>>()?;
    Ok(lambda_sequence_from_psi(ring, &psis)?)
}

/// `λ^i(x)`; a [`NewtonError::NonIntegralDivision`] certifies that the ring is
/// not special.
pub fn lambda_structure<R: PsiRing>(ring: &R, x: &R::Elem, i: usize) -> Result<R::Elem, RingError> {
    assert!(i >= 1, "λ^0 is the constant 1");
    Ok(lambda_operations(ring, x, i)?.pop().expect("i >= 1"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integers_are_special() {
        let r = is_special(&Integers, &[2, 3, 5, 7, 11, 13], &[BigInt::from(5), BigInt::from(-4)]).unwrap();
        assert!(r.is_special());
    }

    #[test]
    fn binomial_lambda_on_integers() {
        assert_eq!(lambda_structure(&Integers, &BigInt::from(4), 2).unwrap(), BigInt::from(6));
        assert_eq!(lambda_structure(&Integers, &BigInt::from(-2), 3).unwrap(), BigInt::from(-4));
    }

    #[test]
    fn non_prime_rejected() {
        assert_eq!(is_special(&Integers, &[4], &[]), Err(RingError::NotPrime(4)));
    }
}
