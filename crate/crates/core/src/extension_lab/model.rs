use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::LabError;
use crate::psi_lambda_rings::{FiniteRank, PsiRing, RingError};
use crate::ring::{CommRing, IntMatrix};
use crate::sphere_extalg::nu_from_nu2;

/// Basis of the extension ring, in coordinate order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Gamma,
    Beta,
    Alpha,
}

impl Basis {
    pub const ALL: [Basis; 3] = [Basis::Gamma, Basis::Beta, Basis::Alpha];

    pub fn elem(self) -> ExtElem {
        match self {
            Basis::Gamma => ExtElem::new(1, 0, 0),
            Basis::Beta => ExtElem::new(0, 1, 0),
            Basis::Alpha => ExtElem::new(0, 0, 1),
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::Gamma => "γ",
            Basis::Beta => "β",
            Basis::Alpha => "α",
        })
    }
}

/// `gamma·γ + beta·β + alpha·α`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ExtElem {
    pub gamma: BigInt,
    pub beta: BigInt,
    pub alpha: BigInt,
}

impl ExtElem {
    pub fn new<A: Into<BigInt>, B: Into<BigInt>, C: Into<BigInt>>(gamma: A, beta: B, alpha: C) -> Self {
        ExtElem { gamma: gamma.into(), beta: beta.into(), alpha: alpha.into() }
    }

    fn coords(&self) -> [&BigInt; 3] {
        [&self.gamma, &self.beta, &self.alpha]
    }
}

impl fmt::Display for ExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (c, b) in self.coords().into_iter().zip(Basis::ALL) {
            if c.is_zero() {
                continue;
            }
            let sign = match (first, c.is_negative()) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            let a = c.abs();
            if a.is_one() {
                write!(f, "{sign}{b}")?;
            } else {
                write!(f, "{sign}{a}{b}")?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A square-zero extension `0 → Z·α → Z·γ ⊕ Z·β ⊕ Z·α → K(S^{2n}) → 0` with
/// `γ` the unit, `β² = h·α`, `αβ = α² = 0`, and
/// `Ψ^k: γ ↦ γ, β ↦ k^n β + ν_k α, α ↦ k^{n'} α`.
///
/// `nu` holds `ν_k` for `2 ≤ k ≤ k_max`; `ν_1 = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionModel {
    pub n: u32,
    #[serde(alias = "n'")]
    pub n_prime: u32,
    #[serde(with = "crate::json::bigint")]
    pub h: BigInt,
    #[serde(with = "crate::json::bigint_map")]
    pub nu: BTreeMap<u64, BigInt>,
}

impl ExtensionModel {
    pub fn new(n: u32, n_prime: u32, h: BigInt, nu: BTreeMap<u64, BigInt>) -> Result<Self, LabError> {
        let m = ExtensionModel { n, n_prime, h, nu };
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> Result<(), LabError> {
        if self.n == 0 || self.n_prime == 0 {
            return Err(LabError::Malformed("n and n' must be positive".into()));
        }
        if self.nu.keys().any(|&k| k < 2) {
            return Err(LabError::Malformed("nu is indexed by k >= 2".into()));
        }
        Ok(())
    }

    /// The model whose `ν_k` are determined by `ν_2` through
    /// `ν_k = ν_2 (k^{n'} − k^n) / (2^{n'} − 2^n)`, for `2 ≤ k ≤ k_max`.
    pub fn from_nu2(n: u32, n_prime: u32, h: BigInt, nu2: &BigInt, k_max: u64) -> Result<Self, LabError> {
        let nu = (2..=k_max)
            .map(|k| Ok((k, nu_from_nu2(n, n_prime, nu2, k)?)))
            .collect::<Result<BTreeMap<_, _>, LabError>>()?;
        Self::new(n, n_prime, h, nu)
    }

    /// Largest `K` with `ν_2..ν_K` all present.
    pub fn k_max(&self) -> u64 {
        let mut k = 1;
        while self.nu.contains_key(&(k + 1)) {
            k += 1;
        }
        k
    }

    pub fn nu(&self, k: u64) -> Option<BigInt> {
        match k {
            0 => None,
            1 => Some(BigInt::zero()),
            _ => self.nu.get(&k).cloned(),
        }
    }

    /// `k^{n'} − k^n`, the shift of `ν_k` under `β ↦ β + α`.
    pub fn shift(&self, k: u64) -> BigInt {
        let k = BigInt::from(k);
        Pow::pow(&k, self.n_prime) - Pow::pow(&k, self.n)
    }

    /// Replaces `β` by `β + N·α`: `h` is unchanged and
    /// `ν_k ↦ ν_k + N (k^{n'} − k^n)`.
    pub fn apply_move(&self, shift_by: &BigInt) -> ExtensionModel {
        let nu = self.nu.iter().map(|(&k, v)| (k, v + shift_by * self.shift(k))).collect();
        ExtensionModel { nu, ..self.clone() }
    }

    /// Matrix of `Ψ^k` in the basis `(γ, β, α)`, columns holding images.
    pub fn psi_matrix(&self, k: u64) -> Option<IntMatrix> {
        let nu = self.nu(k)?;
        let kb = BigInt::from(k);
        let mut m = IntMatrix::zeros(3, 3);
        m.set(0, 0, BigInt::one());
        m.set(1, 1, Pow::pow(&kb, self.n));
        m.set(2, 1, nu);
        m.set(2, 2, Pow::pow(&kb, self.n_prime));
        Some(m)
    }
}

impl CommRing for ExtensionModel {
    type Elem = ExtElem;

    fn zero(&self) -> ExtElem {
        ExtElem::default()
    }
    fn one(&self) -> ExtElem {
        Basis::Gamma.elem()
    }
    fn from_int(&self, n: &BigInt) -> ExtElem {
        ExtElem { gamma: n.clone(), ..Default::default() }
    }
    fn add(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        ExtElem { gamma: &a.gamma + &b.gamma, beta: &a.beta + &b.beta, alpha: &a.alpha + &b.alpha }
    }
    fn neg(&self, a: &ExtElem) -> ExtElem {
        ExtElem { gamma: -&a.gamma, beta: -&a.beta, alpha: -&a.alpha }
    }
    fn mul(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        ExtElem {
            gamma: &a.gamma * &b.gamma,
            beta: &a.gamma * &b.beta + &a.beta * &b.gamma,
            alpha: &a.gamma * &b.alpha + &a.alpha * &b.gamma + &self.h * &a.beta * &b.beta,
        }
    }
    fn div_exact(&self, a: &ExtElem, c: &BigInt) -> Option<ExtElem> {
        let mut out = [BigInt::zero(), BigInt::zero(), BigInt::zero()];
        for (o, x) in out.iter_mut().zip(a.coords()) {
            let (q, r) = x.div_rem(c);
            if !r.is_zero() {
                return None;
            }
            *o = q;
        }
        let [gamma, beta, alpha] = out;
        Some(ExtElem { gamma, beta, alpha })
    }
    fn is_multiple_of(&self, a: &ExtElem, m: &BigInt) -> bool {
        a.coords().into_iter().all(|x| x.is_multiple_of(m))
    }
}

impl PsiRing for ExtensionModel {
    fn psi(&self, k: u64, x: &ExtElem) -> Result<ExtElem, RingError> {
        let m = self.psi_matrix(k).ok_or(RingError::PsiUndefined(k))?;
        Ok(self.from_coords(&m.apply(&self.coords(x))))
    }

    fn generators(&self) -> Vec<ExtElem> {
        self.basis()
    }
}

impl FiniteRank for ExtensionModel {
    fn basis(&self) -> Vec<ExtElem> {
        Basis::ALL.iter().map(|b| b.elem()).collect()
    }
    fn coords(&self, x: &ExtElem) -> Vec<BigInt> {
        x.coords().into_iter().cloned().collect()
    }
    fn from_coords(&self, c: &[BigInt]) -> ExtElem {
        ExtElem { gamma: c[0].clone(), beta: c[1].clone(), alpha: c[2].clone() }
    }
}
