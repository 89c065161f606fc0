//! Symmetric functions: rewriting symmetric polynomials in the elementary
//! basis, the universal λ-ring polynomials, and the Newton identities linking
//! λ-operations with Adams operations.

mod newton;
mod universal;

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::bigpoly::{Monomial, MultiPoly, Substitution, Var};

pub use newton::{
    lambda_sequence_from_psi, newton_lambda_from_psi, newton_psi_from_lambda, psi_sequence_from_lambda,
    NewtonError, OpKind, OperationSequence,
};
pub use universal::{universal_p, universal_pij, UniversalConfig, DEFAULT_MAX_WEIGHT};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymmetricError {
    #[error("not symmetric: swapping {family}{} and {family}{} changes the polynomial", .transposition.0, .transposition.1)]
    NotSymmetric { family: char, transposition: (u64, u64) },
    #[error("variable {0} lies outside the declared formal roots")]
    StrayRoot(Var),
    #[error("symbol family '{0}' is already in use")]
    SymbolClash(char),
    #[error("weight {weight} exceeds the configured cap {cap}")]
    TooLarge { weight: u64, cap: u64 },
}

/// One family of formal roots `roots_1..roots_count`, whose elementary
/// symmetric polynomials are written as `symbol_1..symbol_count`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RootFamily {
    pub roots: char,
    pub count: u64,
    pub symbol: char,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricContext {
    families: Vec<RootFamily>,
}

impl SymmetricContext {
    pub fn single(roots: char, count: u64, symbol: char) -> Self {
        Self::new(vec![RootFamily { roots, count, symbol }])
    }

    pub fn pair(first: RootFamily, second: RootFamily) -> Self {
        Self::new(vec![first, second])
    }

    pub fn new(families: Vec<RootFamily>) -> Self {
        assert!(!families.is_empty(), "at least one root family");
        for f in &families {
            assert!(f.count >= 1, "root count must be positive");
            assert!(f.roots != f.symbol, "roots and symbols must use different letters");
        }
        SymmetricContext { families }
    }

    pub fn families(&self) -> &[RootFamily] {
        &self.families
    }

    /// The substitution `symbol_k ↦ e_k(roots)` for every family.
    pub fn back_substitution(&self) -> Substitution {
        let mut s = Substitution::new().fix_unbound();
        for f in &self.families {
            let roots = root_vars(f);
            for k in 1..=f.count {
                s = s.bind(Var::new(f.symbol, k), elementary_of(&roots, k as usize));
            }
        }
        s
    }
}

fn root_vars(f: &RootFamily) -> Vec<MultiPoly> {
    (1..=f.count).map(|i| MultiPoly::gen(f.roots, i)).collect()
}

/// `e_k` of an arbitrary list of ring elements, by expanding the product of
/// `1 + t·item` truncated at `t^k`.
pub fn elementary_of(items: &[MultiPoly], k: usize) -> MultiPoly {
    let mut e = vec![MultiPoly::zero(); k + 1];
    e[0] = MultiPoly::one();
    for item in items {
        for t in (1..=k).rev() {
            if e[t - 1].is_zero() {
                continue;
            }
            let add = &e[t - 1] * item;
            e[t] = std::mem::take(&mut e[t]) + add;
        }
    }
    e.swap_remove(k)
}

/// The `k`-th elementary symmetric polynomial in `family_1..family_d`.
pub fn elementary(family: char, d: u64, k: u64) -> MultiPoly {
    let roots: Vec<_> = (1..=d).map(|i| MultiPoly::gen(family, i)).collect();
    elementary_of(&roots, k as usize)
}

/// The `k`-th power sum in `family_1..family_d`.
pub fn power_sum(family: char, d: u64, k: u32) -> MultiPoly {
    (1..=d).fold(MultiPoly::zero(), |acc, i| acc + MultiPoly::gen(family, i).pow(k))
}

/// Checks invariance under every adjacent transposition of one root family.
pub fn check_symmetric(f: &MultiPoly, family: &RootFamily) -> Result<(), SymmetricError> {
    if let Some(v) = f.vars().into_iter().find(|v| v.family == family.roots && v.index > family.count) {
        return Err(SymmetricError::StrayRoot(v));
    }
    for i in 1..family.count {
        let swapped = f.map_vars(|v| match v {
            Var { family: c, index } if c == family.roots && index == i => Var::new(c, i + 1),
            Var { family: c, index } if c == family.roots && index == i + 1 => Var::new(c, i),
            other => other,
        });
        if swapped != *f {
            return Err(SymmetricError::NotSymmetric { family: family.roots, transposition: (i, i + 1) });
        }
    }
    Ok(())
}

/// Rewrites `f`, symmetric in each root family of `ctx`, as a polynomial in
/// the elementary symbols. Variables outside the root families are treated as
/// coefficients and pass through.
pub fn express_in_elementary(f: &MultiPoly, ctx: &SymmetricContext) -> Result<MultiPoly, SymmetricError> {
    let used = f.families();
    for fam in ctx.families() {
        if used.contains(&fam.symbol) || ctx.families().iter().any(|g| g.roots == fam.symbol) {
            return Err(SymmetricError::SymbolClash(fam.symbol));
        }
    }
    let mut current = f.clone();
    for fam in ctx.families() {
        check_symmetric(&current, fam)?;
        current = reduce_family(&current, fam)?;
    }
    Ok(current)
}

/// Leading-term elimination for a single root family.
fn reduce_family(f: &MultiPoly, fam: &RootFamily) -> Result<MultiPoly, SymmetricError> {
    let d = fam.count as usize;
    let es: Vec<MultiPoly> = (1..=d).map(|k| elementary(fam.roots, fam.count, k as u64)).collect();
    let mut e_powers: HashMap<(usize, u32), MultiPoly> = HashMap::new();
    let is_root = |v: Var| v.family == fam.roots;

    let mut rem = f.clone();
    let mut out = MultiPoly::zero();
    loop {
        let lead = rem
            .terms()
            .map(|(m, _)| m.split_by(is_root).0)
            .max();
        let lead = match lead {
            None => break,
            Some(m) if m.is_one() => {
                out = out + rem;
                break;
            }
            Some(m) => m,
        };

        let coeff = MultiPoly::from_terms(rem.terms().filter_map(|(m, c)| {
            let (root_part, rest) = m.split_by(is_root);
            (root_part == lead).then(|| (rest, c.clone()))
        }));

        let exps: Vec<u32> = (1..=fam.count).map(|i| lead.exponent(Var::new(fam.roots, i))).collect();
        if let Some(i) = exps.windows(2).position(|w| w[0] < w[1]) {
            return Err(SymmetricError::NotSymmetric {
                family: fam.roots,
                transposition: (i as u64 + 1, i as u64 + 2),
            });
        }

        let mut symbols = Vec::with_capacity(d);
        let mut root_poly = MultiPoly::one();
        for k in 0..d {
            let next = exps.get(k + 1).copied().unwrap_or(0);
            let m = exps[k] - next;
            if m == 0 {
                continue;
            }
            symbols.push((Var::new(fam.symbol, k as u64 + 1), m));
            let pw = e_powers.entry((k, m)).or_insert_with(|| es[k].pow(m));
            root_poly = &root_poly * &*pw;
        }
        let symbol_mono = Monomial::from_factors(symbols);
        out = out + coeff.mul_monomial(&symbol_mono, &BigInt::one());
        rem = rem - &coeff * &root_poly;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    fn ctx2() -> SymmetricContext {
        SymmetricContext::single('x', 2, 'e')
    }

    #[test]
    fn elementary_basics() {
        assert_eq!(express_in_elementary(&p("x1 + x2"), &ctx2()).unwrap(), p("e1"));
        assert_eq!(express_in_elementary(&p("x1*x2"), &ctx2()).unwrap(), p("e2"));
    }

    #[test]
    fn second_power_sum_back_substitutes() {
        let f = p("x1^2 + x2^2");
        let g = express_in_elementary(&f, &ctx2()).unwrap();
        assert_eq!(g, p("e1^2 - 2*e2"));
        assert_eq!(g.substitute(&ctx2().back_substitution()).unwrap(), f);
    }

    #[test]
    fn coefficients_in_other_variables_pass_through() {
        let f = p("a1*x1 + a1*x2 + 3*x1*x2 + a2");
        let g = express_in_elementary(&f, &ctx2()).unwrap();
        assert_eq!(g, p("a1*e1 + 3*e2 + a2"));
    }

    #[test]
    fn asymmetric_input_is_rejected_with_witness() {
        let err = express_in_elementary(&p("x1^2 + x2"), &ctx2()).unwrap_err();
        assert_eq!(err, SymmetricError::NotSymmetric { family: 'x', transposition: (1, 2) });
        let ctx = SymmetricContext::single('x', 3, 'e');
        let err = express_in_elementary(&p("x1 + x2"), &ctx).unwrap_err();
        assert_eq!(err, SymmetricError::NotSymmetric { family: 'x', transposition: (2, 3) });
        let err = express_in_elementary(&p("x3"), &ctx2()).unwrap_err();
        assert_eq!(err, SymmetricError::StrayRoot(Var::new('x', 3)));
    }

    #[test]
    fn symbol_clash_detected() {
        let err = express_in_elementary(&p("e1*x1 + e1*x2"), &ctx2()).unwrap_err();
        assert_eq!(err, SymmetricError::SymbolClash('e'));
    }

    #[test]
    fn power_sums_in_four_roots() {
        let ctx = SymmetricContext::single('x', 4, 'e');
        for k in 1..=5 {
            let f = power_sum('x', 4, k);
            let g = express_in_elementary(&f, &ctx).unwrap();
            assert_eq!(g.substitute(&ctx.back_substitution()).unwrap(), f, "p_{k}");
        }
    }
}
