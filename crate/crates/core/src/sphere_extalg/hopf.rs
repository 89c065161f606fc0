//! Which pairs `(n, n')` admit a λ-extension with odd Hopf invariant.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::gn::gpj_closed;
use super::groups::extalg_lambda;
use super::ExtalgError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HopfReport {
    pub n: u32,
    pub n_prime: u32,
    /// `n = n'` or `min(n, n') ≤ g^2_{|n−n'|}`.
    pub feasible: bool,
    pub reason: String,
    /// The first of the five listed cases that holds, numbered 1 to 5.
    pub theorem_case: Option<u8>,
    /// Whether the λ-classification actually contains an odd-`h` class. The
    /// feasibility criterion is a necessary condition; this field records the
    /// converse direction, read off the parity coefficient.
    pub odd_class_exists: bool,
}

impl fmt::Display for HopfReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.feasible { "feasible" } else { "infeasible" };
        let case = self.theorem_case.map_or_else(|| "none".to_string(), |c| c.to_string());
        write!(f, "(n, n') = ({}, {}): {verdict}; {}; case {case}", self.n, self.n_prime, self.reason)
    }
}

/// The five cases:
/// 1. `n = n'`;
/// 2. `n = 1` or `n' = 1`;
/// 3. `n' − n` even and `n = 2` or `n' = 2`;
/// 4. `n' > n ≥ 3` and `n' = n + 2^{n−2} b`;
/// 5. `n > n' ≥ 3` and `n = n' + 2^{n'−2} b`.
pub fn theorem_case(n: u32, n_prime: u32) -> Option<u8> {
    let d = n.abs_diff(n_prime);
    let tail = |lo: u32| lo >= 3 && d.trailing_zeros() >= lo - 2;
    if n == n_prime {
        Some(1)
    } else if n == 1 || n_prime == 1 {
        Some(2)
    } else if d.is_multiple_of(2) && (n == 2 || n_prime == 2) {
        Some(3)
    } else if n_prime > n && tail(n) {
        Some(4)
    } else if n > n_prime && tail(n_prime) {
        Some(5)
    } else {
        None
    }
}

pub fn odd_hopf_feasible(n: u32, n_prime: u32) -> Result<HopfReport, ExtalgError> {
    if n == 0 || n_prime == 0 {
        return Err(ExtalgError::ZeroArgument("n"));
    }
    let (feasible, reason) = if n == n_prime {
        (true, "n = n'".to_string())
    } else {
        let d = u64::from(n.abs_diff(n_prime));
        let g2 = gpj_closed(2, d)?.value;
        let m = n.min(n_prime);
        if m <= g2 {
            (true, format!("min(n, n') = {m} <= g^2_{d} = {g2}"))
        } else {
            (false, format!("min(n, n') = {m} > g^2_{d} = {g2}"))
        }
    };
    Ok(HopfReport {
        n,
        n_prime,
        feasible,
        reason,
        theorem_case: theorem_case(n, n_prime),
        odd_class_exists: extalg_lambda(n, n_prime)?.odd_h_admissible,
    })
}

/// All `n ≤ n_max` for which `(n, a·n)` passes [`odd_hopf_feasible`].
pub fn adams_scan(a: u32, n_max: u32) -> Result<Vec<u32>, ExtalgError> {
    if a < 2 {
        return Err(ExtalgError::WindowTooSmall(u64::from(a)));
    }
    let hits: Result<Vec<Option<u32>>, ExtalgError> = (1..=n_max)
        .into_par_iter()
        .map(|n| {
            let np = n.checked_mul(a).ok_or(ExtalgError::TooLarge("a·n"))?;
            Ok(odd_hopf_feasible(n, np)?.feasible.then_some(n))
        })
        .collect();
    Ok(hits?.into_iter().flatten().collect())
}
