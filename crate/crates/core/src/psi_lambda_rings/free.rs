use std::collections::BTreeSet;

use num_bigint::BigInt;

use super::{PsiRing, RingError};
use crate::bigpoly::{MultiPoly, PolyRing, Var};
use crate::ring::CommRing;

/// The free Ψ-ring on generators `a, b, ...`: the polynomial ring in
/// `a_1, a_2, ..., b_1, ...` with `Ψ^k(a_j) = a_{kj}`. The generator `a` is
/// `a_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreePsiRing {
    alphabet: BTreeSet<char>,
}

impl FreePsiRing {
    pub fn new<I: IntoIterator<Item = char>>(families: I) -> Self {
        let alphabet: BTreeSet<char> = families.into_iter().collect();
        assert!(alphabet.iter().all(char::is_ascii_lowercase), "families are letters a..z");
        FreePsiRing { alphabet }
    }

    pub fn alphabet(&self) -> &BTreeSet<char> {
        &self.alphabet
    }

    /// Rejects polynomials mentioning families outside the alphabet.
    pub fn check_element(&self, p: &MultiPoly) -> Result<(), RingError> {
        match p.families().into_iter().find(|c| !self.alphabet.contains(c)) {
            Some(c) => Err(RingError::UnknownFamily(c)),
            None => Ok(()),
        }
    }

    pub fn psi_apply(&self, k: u64, p: &MultiPoly) -> Result<MultiPoly, RingError> {
        if k == 0 {
            return Err(RingError::ZeroIndex);
        }
        self.check_element(p)?;
        if k == 1 {
            return Ok(p.clone());
        }
        // index scaling is injective, so no terms merge
        Ok(p.map_vars(|v| Var::new(v.family, v.index * k)))
    }

    /// The coproduct `self ⊗ other`, the free Ψ-ring on the union alphabet.
    pub fn coproduct(&self, other: &FreePsiRing) -> Result<FreePsiRing, RingError> {
        if let Some(&c) = self.alphabet.intersection(&other.alphabet).next() {
            return Err(RingError::AlphabetClash(c));
        }
        Ok(FreePsiRing { alphabet: self.alphabet.union(&other.alphabet).copied().collect() })
    }
}

/// Forms `r ⊗ s` in the coproduct of two free Ψ-rings with disjoint alphabets.
/// With disjoint variables the tensor product is the polynomial product, and
/// `Ψ^k(r ⊗ s) = Ψ^k(r) ⊗ Ψ^k(s)`.
pub fn tensor_psi(
    left: &FreePsiRing,
    r: &MultiPoly,
    right: &FreePsiRing,
    s: &MultiPoly,
) -> Result<(FreePsiRing, MultiPoly), RingError> {
    let ring = left.coproduct(right)?;
    left.check_element(r)?;
    right.check_element(s)?;
    Ok((ring, r * s))
}

impl CommRing for FreePsiRing {
    type Elem = MultiPoly;

    fn zero(&self) -> MultiPoly {
        MultiPoly::zero()
    }
    fn one(&self) -> MultiPoly {
        MultiPoly::one()
    }
    fn from_int(&self, n: &BigInt) -> MultiPoly {
        MultiPoly::constant(n.clone())
    }
    fn add(&self, a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
        a + b
    }
    fn neg(&self, a: &MultiPoly) -> MultiPoly {
        -a
    }
    fn sub(&self, a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
        a - b
    }
    fn mul(&self, a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
        a * b
    }
    fn pow(&self, a: &MultiPoly, e: u32) -> MultiPoly {
        a.pow(e)
    }
    fn div_exact(&self, a: &MultiPoly, c: &BigInt) -> Option<MultiPoly> {
        PolyRing.div_exact(a, c)
    }
    fn is_multiple_of(&self, a: &MultiPoly, m: &BigInt) -> bool {
        a.is_multiple_of(m)
    }
}

impl PsiRing for FreePsiRing {
    fn psi(&self, k: u64, x: &MultiPoly) -> Result<MultiPoly, RingError> {
        self.psi_apply(k, x)
    }

    fn generators(&self) -> Vec<MultiPoly> {
        self.alphabet.iter().map(|&c| MultiPoly::gen(c, 1)).collect()
    }
}
