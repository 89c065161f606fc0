//! Newton identities between λ-operations and Adams operations:
//!
//! `Ψ^i − λ^1 Ψ^{i−1} + λ^2 Ψ^{i−2} − … + (−1)^{i−1} λ^{i−1} Ψ^1 + (−1)^i i λ^i = 0`.
//!
//! Going from λ to Ψ is pure ring arithmetic. Going back divides by `i`,
//! which is exact precisely when the Ψ-structure comes from a λ-structure; a
//! failed division is reported with the offending numerator.

use num_bigint::BigInt;
use thiserror::Error;

use crate::ring::CommRing;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OpKind {
    Lambda,
    Psi,
}

/// `values[k-1]` holds the `k`-th operation applied to a fixed element, so
/// `values[0]` is the element itself.
#[derive(Clone, Debug, PartialEq)]
pub struct OperationSequence<E> {
    kind: OpKind,
    values: Vec<E>,
}

impl<E> OperationSequence<E> {
    pub fn lambda(values: Vec<E>) -> Self {
        OperationSequence { kind: OpKind::Lambda, values }
    }

    pub fn psi(values: Vec<E>) -> Self {
        OperationSequence { kind: OpKind::Psi, values }
    }

    pub fn kind(&self) -> OpKind {
        self.kind
    }

    pub fn values(&self) -> &[E] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    fn require(&self, kind: OpKind, i: usize) -> Result<(), NewtonError> {
        if self.kind != kind {
            return Err(NewtonError::WrongKind { expected: kind, found: self.kind });
        }
        if i == 0 || i > self.values.len() {
            return Err(NewtonError::OutOfRange { requested: i, available: self.values.len() });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NewtonError {
    #[error("expected a {expected:?} sequence, got {found:?}")]
    WrongKind { expected: OpKind, found: OpKind },
    #[error("operation index {requested} outside 1..={available}")]
    OutOfRange { requested: usize, available: usize },
    #[error("λ^{step}: {numerator} is not divisible by {step}")]
    NonIntegralDivision { step: usize, numerator: String },
}

/// All of `Ψ^1..Ψ^n` from `λ^1..λ^n`.
pub fn psi_sequence_from_lambda<R: CommRing>(ring: &R, lambdas: &[R::Elem]) -> Vec<R::Elem> {
    let mut psi: Vec<R::Elem> = Vec::with_capacity(lambdas.len());
    for m in 1..=lambdas.len() {
        let mut acc = ring.zero();
        for j in 1..m {
            let t = ring.mul(&lambdas[j - 1], &psi[m - j - 1]);
            acc = if j % 2 == 1 { ring.add(&acc, &t) } else { ring.sub(&acc, &t) };
        }
        let top = ring.scale(&BigInt::from(m), &lambdas[m - 1]);
        acc = if m % 2 == 1 { ring.add(&acc, &top) } else { ring.sub(&acc, &top) };
        psi.push(acc);
    }
    psi
}

/// All of `λ^1..λ^n` from `Ψ^1..Ψ^n`, stopping at the first inexact division.
pub fn lambda_sequence_from_psi<R: CommRing>(ring: &R, psis: &[R::Elem]) -> Result<Vec<R::Elem>, NewtonError> {
    let mut lam: Vec<R::Elem> = Vec::with_capacity(psis.len());
    for m in 1..=psis.len() {
        // Ψ^m − λ^1 Ψ^{m−1} + … + (−1)^{m−1} λ^{m−1} Ψ^1
        let mut numerator = psis[m - 1].clone();
        for j in 1..m {
            let t = ring.mul(&lam[j - 1], &psis[m - j - 1]);
            numerator = if j % 2 == 1 { ring.sub(&numerator, &t) } else { ring.add(&numerator, &t) };
        }
        let q = ring
            .div_exact(&numerator, &BigInt::from(m))
            .ok_or_else(|| NewtonError::NonIntegralDivision { step: m, numerator: numerator.to_string() })?;
        lam.push(if m % 2 == 1 { q } else { ring.neg(&q) });
    }
    Ok(lam)
}

/// `Ψ^i` from a λ-sequence.
pub fn newton_psi_from_lambda<R: CommRing>(
    ring: &R,
    seq: &OperationSequence<R::Elem>,
    i: usize,
) -> Result<R::Elem, NewtonError> {
    seq.require(OpKind::Lambda, i)?;
    Ok(psi_sequence_from_lambda(ring, &seq.values[..i]).pop().expect("i >= 1"))
}

/// `λ^i` from a Ψ-sequence, on a torsion-free ring.
pub fn newton_lambda_from_psi<R: CommRing>(
    ring: &R,
    seq: &OperationSequence<R::Elem>,
    i: usize,
) -> Result<R::Elem, NewtonError> {
    seq.require(OpKind::Psi, i)?;
    Ok(lambda_sequence_from_psi(ring, &seq.values[..i])?.pop().expect("i >= 1"))
}
