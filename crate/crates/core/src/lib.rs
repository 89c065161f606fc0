//! Exact algebra for Adams operations on K-theory.
//!
//! * [`bigpoly`]: sparse multivariate polynomials over `Z`.
//! * [`symmetric_kernel`]: symmetric reduction, the universal polynomials
//!   `P_i`, `P_{i,j}` and the Newton bridge between λ and Ψ.
//! * [`psi_lambda_rings`]: free Ψ-rings, `K(S^{2n})`, specialness, modules
//!   and derivations.
//! * [`sphere_extalg`]: `g^p_j`, `G_{n,n'}`, extension groups and odd Hopf
//!   invariants.
//! * [`extension_lab`]: explicit extension models checked by matrix algebra.

pub mod bigpoly;
pub mod extension_lab;
pub mod json;
pub mod psi_lambda_rings;
pub mod ring;
pub mod sphere_extalg;
pub mod symmetric_kernel;

pub use bigpoly::{Monomial, MultiPoly, Substitution, Var};
pub use num_bigint::BigInt;
pub use ring::{CommRing, IntMatrix, Integers};
