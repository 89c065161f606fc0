//! Explicit rank-3 models of extensions of `K(S^{2n})` by `K̃(S^{2n'})`,
//! with direct checks of the Ψ-ring axioms on their matrices.

mod classes;
mod model;
mod verify;

use num_bigint::BigInt;
use thiserror::Error;

use crate::psi_lambda_rings::RingError;
use crate::sphere_extalg::ExtalgError;

pub use classes::{are_equivalent, enumerate_classes, equivalence_reduce, predicted_classes, ClassLabel};
pub use model::{Basis, ExtElem, ExtensionModel};
pub use verify::{
    default_primes, nu_relation_holds, verify_all, verify_commutation, verify_ring_homomorphism, verify_special,
    LabCheck, LabReport, LabVerdict, DEFAULT_PRIMES,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabError {
    #[error("malformed model: {0}")]
    Malformed(String),
    #[error("nu_{0} is not defined by the model")]
    MissingNu(u64),
    #[error("n = n' has no single ν_2 parameter")]
    EqualDimensions,
    #[error("not a Ψ-model: {0}")]
    NotAModel(String),
    #[error("nu_2 = {0} is not a multiple of (2^n' - 2^n)/G")]
    Inadmissible(BigInt),
    #[error(transparent)]
    Extalg(#[from] ExtalgError),
    #[error(transparent)]
    Ring(#[from] RingError),
}
