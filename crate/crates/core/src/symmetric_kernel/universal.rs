//! The universal polynomials `P_i` and `P_{i,j}` of λ-ring theory.
//!
//! `P_i` expresses `λ^i(rs)` through `λ^k(r)` (written `r_k`) and `λ^k(s)`
//! (written `s_k`); `P_{i,j}` expresses `λ^i(λ^j(r))` through the `r_k`. Both
//! come from formal roots: with `r = x_1 + ... + x_d` and `s = y_1 + ... + y_e`,
//! `λ^k` becomes the `k`-th elementary symmetric polynomial.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use itertools::Itertools;

use super::{elementary_of, express_in_elementary, RootFamily, SymmetricContext, SymmetricError};
use crate::bigpoly::MultiPoly;

pub const DEFAULT_MAX_WEIGHT: u64 = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UniversalConfig {
    /// Largest `i` accepted for `P_i` and largest `i·j` for `P_{i,j}`.
    pub max_weight: u64,
}

impl Default for UniversalConfig {
    fn default() -> Self {
        UniversalConfig { max_weight: DEFAULT_MAX_WEIGHT }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Key {
    P(u64),
    Pij(u64, u64),
}

fn cache() -> &'static RwLock<HashMap<Key, MultiPoly>> {
    static CACHE: OnceLock<RwLock<HashMap<Key, MultiPoly>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn cached<F>(key: Key, compute: F) -> Result<MultiPoly, SymmetricError>
where
    F: FnOnce() -> Result<MultiPoly, SymmetricError>,
{
    if let Some(p) = cache().read().expect("cache poisoned").get(&key) {
        return Ok(p.clone());
    }
    let p = compute()?;
    cache().write().expect("cache poisoned").entry(key).or_insert_with(|| p.clone());
    Ok(p)
}

const X: char = 'x';
const Y: char = 'y';
pub(crate) const R_SYMBOL: char = 'r';
pub(crate) const S_SYMBOL: char = 's';

/// `P_i` in the symbols `r_k = λ^k(r)` and `s_k = λ^k(s)`.
pub fn universal_p(i: u64, config: &UniversalConfig) -> Result<MultiPoly, SymmetricError> {
    assert!(i >= 1, "P_i needs i >= 1");
    if i > config.max_weight {
        return Err(SymmetricError::TooLarge { weight: i, cap: config.max_weight });
    }
    cached(Key::P(i), || {
        let products: Vec<MultiPoly> = (1..=i)
            .cartesian_product(1..=i)
            .map(|(a, b)| &MultiPoly::gen(X, a) * &MultiPoly::gen(Y, b))
            .collect();
        let f = elementary_of(&products, i as usize);
        let ctx = SymmetricContext::pair(
            RootFamily { roots: X, count: i, symbol: R_SYMBOL },
            RootFamily { roots: Y, count: i, symbol: S_SYMBOL },
        );
        express_in_elementary(&f, &ctx)
    })
}

/// `P_{i,j}` in the symbols `r_k = λ^k(r)`, `k ≤ i·j`.
pub fn universal_pij(i: u64, j: u64, config: &UniversalConfig) -> Result<MultiPoly, SymmetricError> {
    assert!(i >= 1 && j >= 1, "P_ij needs i, j >= 1");
    let weight = i * j;
    if weight > config.max_weight {
        return Err(SymmetricError::TooLarge { weight, cap: config.max_weight });
    }
    cached(Key::Pij(i, j), || {
        let products: Vec<MultiPoly> = (1..=weight)
            .combinations(j as usize)
            .map(|subset| subset.into_iter().fold(MultiPoly::one(), |acc, t| &acc * &MultiPoly::gen(X, t)))
            .collect();
        let f = elementary_of(&products, i as usize);
        express_in_elementary(&f, &SymmetricContext::single(X, weight, R_SYMBOL))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn first_universal_polynomials() {
        let cfg = UniversalConfig::default();
        assert_eq!(universal_p(1, &cfg).unwrap(), p("r1*s1"));
        assert_eq!(universal_p(2, &cfg).unwrap(), p("r2*s1^2 + r1^2*s2 - 2*r2*s2"));
        assert_eq!(universal_pij(1, 2, &cfg).unwrap(), p("r2"));
        assert_eq!(universal_pij(2, 2, &cfg).unwrap(), p("r1*r3 - r4"));
    }

    #[test]
    fn cap_is_enforced() {
        let cfg = UniversalConfig { max_weight: 4 };
        assert_eq!(universal_pij(2, 3, &cfg), Err(SymmetricError::TooLarge { weight: 6, cap: 4 }));
        assert_eq!(universal_p(5, &cfg), Err(SymmetricError::TooLarge { weight: 5, cap: 4 }));
    }

    #[test]
    fn pij_with_i_one_is_the_symbol() {
        let cfg = UniversalConfig::default();
        for j in 1..=6 {
            assert_eq!(universal_pij(1, j, &cfg).unwrap(), MultiPoly::gen('r', j));
        }
    }
}
