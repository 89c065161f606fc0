//! Number theory of the extension groups of the K-theory of spheres:
//! the exponents `g^p_j`, the gcd `G_{n,n'}`, the classification of Ψ- and
//! λ-extensions, odd Hopf invariants and the stable groups.

mod arith;
mod gn;
mod groups;
mod hopf;
mod stable;

use num_bigint::BigInt;
use thiserror::Error;

pub use arith::{divisors, is_prime, primes_up_to, valuation, valuation_big};
pub use gn::{big_g, big_g_bruteforce, gpj_bruteforce, gpj_closed, GnProfile, GpjExponent, DEFAULT_WINDOW};
pub use groups::{
    extalg_lambda, extalg_psi, lambda_parity_coefficient, nu_from_nu2, AbelianGroupDescriptor, Congruence, Modulus,
};
pub use hopf::{adams_scan, odd_hopf_feasible, theorem_case, HopfReport};
pub use stable::{check_stability, format_stable_table, stable_extalg, stable_table, StableRow, STABILITY_GRID};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtalgError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} must be at least 1")]
    ZeroArgument(&'static str),
    #[error("{0} is too large")]
    TooLarge(&'static str),
    #[error("argument {0} is below the allowed minimum")]
    WindowTooSmall(u64),
    #[error("n = n': every l^n - l^n' vanishes")]
    DegenerateSet,
    #[error("nu_2 = {nu2} does not give an integral nu_{l}")]
    NonIntegral { nu2: BigInt, l: u64 },
    #[error("G(n, n+k) != G(n+1, n+k+1) at k = {k}, n = {n}")]
    StabilityViolated { k: u32, n: u32 },
}
