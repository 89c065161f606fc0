//! The invariants `g^p_j` and `G_{n,n'}`.
//!
//! `g^p_j` is the multiplicity of `p` in `gcd{k^j − 1 : k ≥ 2, p ∤ k}` and
//! `G_{n,n'} = gcd{l^n − l^{n'} : l ≥ 2}`. Both gcds run over infinite sets;
//! each has a closed form and a truncated brute-force evaluation, and the
//! two are kept independent so they can check each other.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::arith::{divisors, is_prime, valuation, valuation_big};
use super::ExtalgError;

pub const DEFAULT_WINDOW: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GpjExponent {
    pub p: u64,
    pub j: u64,
    pub value: u32,
}

fn check_pj(p: u64, j: u64) -> Result<(), ExtalgError> {
    if !is_prime(p) {
        return Err(ExtalgError::NotPrime(p));
    }
    if j == 0 {
        return Err(ExtalgError::ZeroArgument("j"));
    }
    Ok(())
}

/// Running gcd of `k^j − 1` over `k = 2, 3, ...` coprime to `p`, stopped once
/// it has been unchanged for `window` consecutive eligible `k`.
pub fn gpj_bruteforce(p: u64, j: u64, window: usize) -> Result<GpjExponent, ExtalgError> {
    check_pj(p, j)?;
    let exp = u32::try_from(j).map_err(|_| ExtalgError::TooLarge("j"))?;
    let mut g = BigInt::zero();
    let mut unchanged = 0usize;
    let mut k = 2u64;
    while unchanged < window.max(1) {
        if !k.is_multiple_of(p) {
            let term: BigInt = Pow::pow(BigInt::from(k), exp) - 1u32;
            let next = g.gcd(&term);
            if next == g {
                unchanged += 1;
            } else {
                unchanged = 0;
                g = next;
            }
        }
        k += 1;
    }
    Ok(GpjExponent { p, j, value: valuation_big(p, &g) })
}

/// `g^2_j = 1` for odd `j` and `2 + v_2(j)` for even `j`;
/// for odd `p`, `g^p_j = 0` unless `(p − 1) | j`, in which case `1 + v_p(j)`.
pub fn gpj_closed(p: u64, j: u64) -> Result<GpjExponent, ExtalgError> {
    check_pj(p, j)?;
    let value = if p == 2 {
        if j % 2 == 1 {
            1
        } else {
            2 + valuation(2, j)
        }
    } else if j.is_multiple_of(p - 1) {
        1 + valuation(p, j)
    } else {
        0
    };
    Ok(GpjExponent { p, j, value })
}

/// `G_{n,n'}` as a prime factorization. For `n = n'` every `l^n − l^{n'}`
/// vanishes; `value` is then 0 and `per_prime` is set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GnProfile {
    pub n: u32,
    pub n_prime: u32,
    pub factorization: BTreeMap<u64, u32>,
    #[serde(with = "crate::json::bigint")]
    pub value: BigInt,
    pub per_prime: bool,
}

/// Closed form: the multiplicity of `p` is `min(min(n, n'), g^p_{|n−n'|})`,
/// nonzero only for `p = 2` and odd `p` with `(p − 1) | |n − n'|`.
pub fn big_g(n: u32, n_prime: u32) -> Result<GnProfile, ExtalgError> {
    if n == 0 || n_prime == 0 {
        return Err(ExtalgError::ZeroArgument("n"));
    }
    if n == n_prime {
        return Ok(GnProfile { n, n_prime, factorization: BTreeMap::new(), value: BigInt::zero(), per_prime: true });
    }
    let d = u64::from(n.abs_diff(n_prime));
    let m = n.min(n_prime);
    let mut primes = vec![2u64];
    primes.extend(divisors(d).into_iter().map(|t| t + 1).filter(|&p| p > 2 && is_prime(p)));
    let mut factorization = BTreeMap::new();
    for p in primes {
        let e = m.min(gpj_closed(p, d)?.value);
        if e > 0 {
            factorization.insert(p, e);
        }
    }
    let value = factorization.iter().fold(BigInt::one(), |acc, (&p, &e)| acc * Pow::pow(BigInt::from(p), e));
    Ok(GnProfile { n, n_prime, factorization, value, per_prime: false })
}

/// `gcd{|l^n − l^{n'}| : 2 ≤ l ≤ l_max}`.
pub fn big_g_bruteforce(n: u32, n_prime: u32, l_max: u64) -> Result<BigInt, ExtalgError> {
    if n == n_prime {
        return Err(ExtalgError::DegenerateSet);
    }
    if l_max < 3 {
        return Err(ExtalgError::WindowTooSmall(l_max));
    }
    Ok((2..=l_max).fold(BigInt::zero(), |g, l| {
        let l = BigInt::from(l);
        let t: BigInt = Pow::pow(&l, n) - Pow::pow(&l, n_prime);
        g.gcd(&t.abs())
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gpj_examples() {
        assert_eq!(gpj_bruteforce(2, 3, DEFAULT_WINDOW).unwrap().value, 1);
        assert_eq!(gpj_bruteforce(2, 2, DEFAULT_WINDOW).unwrap().value, 3);
        assert_eq!(gpj_bruteforce(3, 2, DEFAULT_WINDOW).unwrap().value, 1);
        assert_eq!(gpj_closed(2, 6).unwrap().value, 3);
        assert_eq!(gpj_closed(2, 8).unwrap().value, 5);
        assert_eq!(gpj_closed(5, 4).unwrap().value, 1);
        assert_eq!(gpj_bruteforce(5, 4, DEFAULT_WINDOW).unwrap().value, 1);
    }

    #[test]
    fn gpj_rejects_bad_input() {
        assert_eq!(gpj_closed(4, 2), Err(ExtalgError::NotPrime(4)));
        assert_eq!(gpj_bruteforce(2, 0, 16), Err(ExtalgError::ZeroArgument("j")));
    }

    #[test]
    fn g_examples() {
        assert_eq!(big_g(1, 2).unwrap().value, BigInt::from(2));
        let g24 = big_g(2, 4).unwrap();
        assert_eq!(g24.value, BigInt::from(12));
        assert_eq!(g24.factorization, BTreeMap::from([(2, 2), (3, 1)]));
        let g55 = big_g(5, 5).unwrap();
        assert!(g55.per_prime && g55.value.is_zero());
        assert_eq!(big_g(4, 2).unwrap(), GnProfile { n: 4, n_prime: 2, ..g24 });
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(big_g_bruteforce(1, 2, 100).unwrap(), BigInt::from(2));
        assert_eq!(big_g_bruteforce(2, 4, 100).unwrap(), BigInt::from(12));
        assert_eq!(big_g_bruteforce(3, 6, 100).unwrap(), BigInt::from(2));
        assert_eq!(big_g_bruteforce(3, 3, 100), Err(ExtalgError::DegenerateSet));
    }
}
