use std::fmt;

use serde::Serialize;

use super::model::{Basis, ExtensionModel};
use super::LabError;
use crate::psi_lambda_rings::{is_special, PsiRing, Specialness};
use crate::ring::{CommRing, IntMatrix};
use crate::sphere_extalg::is_prime;

pub const DEFAULT_PRIMES: [u64; 4] = [2, 3, 5, 7];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LabCheck {
    /// `Ψ^k Ψ^l = Ψ^l Ψ^k`
    Commutation,
    /// `Ψ^k Ψ^l = Ψ^{kl}`
    Composition,
    /// `Ψ^k(uv) = Ψ^k(u) Ψ^k(v)` and `Ψ^k(1) = 1`
    RingHomomorphism,
}

impl fmt::Display for LabCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LabCheck::Commutation => "commutation",
            LabCheck::Composition => "composition",
            LabCheck::RingHomomorphism => "ring homomorphism",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum LabVerdict {
    Ok,
    CounterExample {
        check: LabCheck,
        k: u64,
        #[serde(skip_serializing_if = "Option::is_none")]
        l: Option<u64>,
        #[serde(skip_serializing_if = "Option::is_none")]
        pair: Option<(Basis, Basis)>,
        detail: String,
    },
    Witness {
        prime: u64,
        element: String,
        defect: String,
    },
}

impl LabVerdict {
    pub fn is_ok(&self) -> bool {
        matches!(self, LabVerdict::Ok)
    }
}

impl fmt::Display for LabVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LabVerdict::Ok => write!(f, "ok"),
            LabVerdict::CounterExample { check, k, l, pair, detail } => {
                write!(f, "counterexample ({check}) at k = {k}")?;
                if let Some(l) = l {
                    write!(f, ", l = {l}")?;
                }
                if let Some((u, v)) = pair {
                    write!(f, ", pair ({u}, {v})")?;
                }
                write!(f, ": {detail}")
            }
            LabVerdict::Witness { prime, element, defect } => {
                write!(f, "not special at p = {prime}: Ψ^{prime}({element}) - ({element})^{prime} = {defect}")
            }
        }
    }
}

fn psi(model: &ExtensionModel, k: u64) -> Result<IntMatrix, LabError> {
    model.psi_matrix(k).ok_or(LabError::MissingNu(k))
}

/// Checks `Ψ^k Ψ^l = Ψ^l Ψ^k` for `2 ≤ k < l ≤ k_max` and
/// `Ψ^k Ψ^l = Ψ^{kl}` whenever `kl ≤ k_max`, on the matrices.
pub fn verify_commutation(model: &ExtensionModel, k_max: u64) -> Result<LabVerdict, LabError> {
    let mats = (2..=k_max).map(|k| psi(model, k)).collect::<Result<Vec<_>, _>>()?;
    let m = |k: u64| &mats[(k - 2) as usize];
    for k in 2..=k_max {
        for l in k..=k_max {
            let kl = m(k).mul(m(l));
            if l != k {
                let lk = m(l).mul(m(k));
                if kl != lk {
                    return Ok(LabVerdict::CounterExample {
                        check: LabCheck::Commutation,
                        k,
                        l: Some(l),
                        pair: None,
                        detail: format!(
                            "Ψ^{k}Ψ^{l}(β) has α-coefficient {} but Ψ^{l}Ψ^{k}(β) has {}",
                            kl.get(2, 1),
                            lk.get(2, 1)
                        ),
                    });
                }
            }
            if k * l <= k_max && &kl != m(k * l) {
                return Ok(LabVerdict::CounterExample {
                    check: LabCheck::Composition,
                    k,
                    l: Some(l),
                    pair: None,
                    detail: format!(
                        "Ψ^{k}Ψ^{l}(β) has α-coefficient {} but ν_{} = {}",
                        kl.get(2, 1),
                        k * l,
                        m(k * l).get(2, 1)
                    ),
                });
            }
        }
    }
    Ok(LabVerdict::Ok)
}

/// The relation `ν_l (k^{n'} − k^n) = ν_k (l^{n'} − l^n)` for all
/// `2 ≤ k, l ≤ k_max`, checked on the numbers alone.
pub fn nu_relation_holds(model: &ExtensionModel, k_max: u64) -> Result<bool, LabError> {
    for k in 2..=k_max {
        let nk = model.nu(k).ok_or(LabError::MissingNu(k))?;
        for l in 2..=k_max {
            let nl = model.nu(l).ok_or(LabError::MissingNu(l))?;
            if nl * model.shift(k) != &nk * model.shift(l) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Checks that each `Ψ^k`, `1 ≤ k ≤ k_max`, fixes the unit and is
/// multiplicative on every ordered pair of basis elements.
pub fn verify_ring_homomorphism(model: &ExtensionModel, k_max: u64) -> Result<LabVerdict, LabError> {
    for k in 1..=k_max {
        let one = model.psi(k, &model.one())?;
        if one != model.one() {
            return Ok(LabVerdict::CounterExample {
                check: LabCheck::RingHomomorphism,
                k,
                l: None,
                pair: Some((Basis::Gamma, Basis::Gamma)),
                detail: format!("Ψ^{k}(1) = {one}"),
            });
        }
        for u in Basis::ALL {
            for v in Basis::ALL {
                let (x, y) = (u.elem(), v.elem());
                let lhs = model.psi(k, &model.mul(&x, &y))?;
                let rhs = model.mul(&model.psi(k, &x)?, &model.psi(k, &y)?);
                if lhs != rhs {
                    return Ok(LabVerdict::CounterExample {
                        check: LabCheck::RingHomomorphism,
                        k,
                        l: None,
                        pair: Some((u, v)),
                        detail: format!("Ψ^{k}({u}{v}) = {lhs} but Ψ^{k}({u})Ψ^{k}({v}) = {rhs}"),
                    });
                }
            }
        }
    }
    Ok(LabVerdict::Ok)
}

/// `Ψ^p(x) ≡ x^p (mod p)` on the basis and its pairwise products, for each
/// listed prime. Primes beyond the model's `k_max` are an error.
pub fn verify_special(model: &ExtensionModel, primes: &[u64]) -> Result<LabVerdict, LabError> {
    for &p in primes {
        if !is_prime(p) {
            return Err(LabError::Ring(crate::psi_lambda_rings::RingError::NotPrime(p)));
        }
        if model.nu(p).is_none() {
            return Err(LabError::MissingNu(p));
        }
    }
    Ok(match is_special(model, primes, &[])? {
        Specialness::Special => LabVerdict::Ok,
        Specialness::Witness { prime, element, defect } => {
            LabVerdict::Witness { prime, element: element.to_string(), defect: defect.to_string() }
        }
    })
}

/// The primes in [`DEFAULT_PRIMES`] for which the model defines `ν_p`.
pub fn default_primes(model: &ExtensionModel) -> Vec<u64> {
    let k = model.k_max();
    DEFAULT_PRIMES.iter().copied().filter(|&p| p <= k).collect()
}

/// Runs every check at once: structure, ring homomorphism, specialness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabReport {
    pub model: ExtensionModel,
    pub k_max: u64,
    pub commutation: LabVerdict,
    pub nu_relation: bool,
    pub ring_homomorphism: LabVerdict,
    pub special: LabVerdict,
}

impl LabReport {
    pub fn all_ok(&self) -> bool {
        self.commutation.is_ok() && self.ring_homomorphism.is_ok() && self.special.is_ok()
    }
}

impl fmt::Display for LabReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "model: n = {}, n' = {}, h = {}, k <= {}", self.model.n, self.model.n_prime, self.model.h, self.k_max)?;
        let nus: Vec<String> = self.model.nu.iter().map(|(k, v)| format!("ν_{k} = {v}")).collect();
        writeln!(f, "  {}", nus.join(", "))?;
        writeln!(f, "commutation: {}", self.commutation)?;
        writeln!(f, "ring homomorphism: {}", self.ring_homomorphism)?;
        write!(f, "special: {}", self.special)
    }
}

pub fn verify_all(model: &ExtensionModel, k_max: u64) -> Result<LabReport, LabError> {
    if k_max > model.k_max() {
        return Err(LabError::MissingNu(model.k_max() + 1));
    }
    let primes: Vec<u64> = DEFAULT_PRIMES.iter().copied().filter(|&p| p <= k_max).collect();
    Ok(LabReport {
        model: model.clone(),
        k_max,
        commutation: verify_commutation(model, k_max)?,
        nu_relation: nu_relation_holds(model, k_max)?,
        ring_homomorphism: verify_ring_homomorphism(model, k_max)?,
        special: verify_special(model, &primes)?,
    })
}
