use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Pow, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::model::ExtensionModel;
use super::verify::{verify_commutation, verify_ring_homomorphism, verify_special};
use super::LabError;
use crate::sphere_extalg::{big_g, extalg_lambda, extalg_psi, primes_up_to, AbelianGroupDescriptor, Modulus};

/// The invariant of an extension class: Hopf invariant and `z mod G`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ClassLabel {
    #[serde(with = "crate::json::bigint")]
    pub h: BigInt,
    #[serde(with = "crate::json::bigint")]
    pub z: BigInt,
}

impl ClassLabel {
    pub fn new<A: Into<BigInt>, B: Into<BigInt>>(h: A, z: B) -> Self {
        ClassLabel { h: h.into(), z: z.into() }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(h, z) = ({}, {})", self.h, self.z)
    }
}

/// `2^{n'} − 2^n`
fn span2(n: u32, n_prime: u32) -> BigInt {
    Pow::pow(BigInt::from(2), n_prime) - Pow::pow(BigInt::from(2), n)
}

/// Brings `model` to the representative of its class with `0 ≤ z < G`,
/// via the move `β ↦ β + Nα`, and returns it with its label.
pub fn equivalence_reduce(model: &ExtensionModel) -> Result<(ExtensionModel, ClassLabel), LabError> {
    if model.n == model.n_prime {
        return Err(LabError::EqualDimensions);
    }
    let k_max = model.k_max();
    if k_max < 2 {
        return Err(LabError::MissingNu(2));
    }
    let verdict = verify_commutation(model, k_max)?;
    if !verdict.is_ok() {
        return Err(LabError::NotAModel(verdict.to_string()));
    }
    let g = big_g(model.n, model.n_prime)?.value;
    let d = span2(model.n, model.n_prime);
    let nu2 = model.nu(2).expect("k_max >= 2");
    let (z, r) = (&nu2 * &g).div_rem(&d);
    if !r.is_zero() {
        return Err(LabError::Inadmissible(nu2));
    }
    let z_can = z.mod_floor(&g);
    let shift_by = (&z_can - &z) / &g;
    let canonical = model.apply_move(&shift_by);
    Ok((canonical, ClassLabel { h: model.h.clone(), z: z_can }))
}

/// Whether `b` lies in the move orbit of `a`. The move size is forced by
/// the change in `ν_2`; every shared `ν_k` is then compared under that move.
pub fn are_equivalent(a: &ExtensionModel, b: &ExtensionModel) -> bool {
    if (a.n, a.n_prime, &a.h) != (b.n, b.n_prime, &b.h) || a.nu.keys().ne(b.nu.keys()) || a.n == a.n_prime {
        return false;
    }
    let (Some(x), Some(y)) = (a.nu(2), b.nu(2)) else {
        return a.nu == b.nu;
    };
    let (shift_by, r) = (y - x).div_rem(&span2(a.n, a.n_prime));
    r.is_zero() && a.apply_move(&shift_by).nu == b.nu
}

/// Every class label realised by a model with `h` in `h_values` and `ν_2` in
/// `[−|D|, |D|]`, `D = 2^{n'} − 2^n`. A candidate must produce integral
/// `ν_k` for `k ≤ k_max` and pass the ring-homomorphism check; with
/// `special_only` it must also be special at every prime `≤ k_max`.
pub fn enumerate_classes(
    n: u32,
    n_prime: u32,
    h_values: &[BigInt],
    k_max: u64,
    special_only: bool,
) -> Result<Vec<ClassLabel>, LabError> {
    if n == n_prime {
        return Err(LabError::EqualDimensions);
    }
    if k_max < 2 {
        return Err(LabError::MissingNu(2));
    }
    let d = span2(n, n_prime).abs();
    let primes = primes_up_to(k_max);
    let width = u64::try_from(&d).map_err(|_| LabError::Malformed("window too wide".into()))?;
    let candidates: Vec<(BigInt, BigInt)> = h_values
        .iter()
        .flat_map(|h| {
            let d = &d;
            (0..=2 * width).map(move |i| (h.clone(), BigInt::from(i) - d))
        })
        .collect();
    let labels = candidates
        .into_par_iter()
        .map(|(h, nu2)| -> Result<Option<ClassLabel>, LabError> {
            let model = match ExtensionModel::from_nu2(n, n_prime, h, &nu2, k_max) {
                Ok(m) => m,
                Err(LabError::Extalg(crate::sphere_extalg::ExtalgError::NonIntegral { .. })) => return Ok(None),
                Err(e) => return Err(e),
            };
            if !verify_ring_homomorphism(&model, k_max)?.is_ok() {
                return Ok(None);
            }
            if special_only && !verify_special(&model, &primes)?.is_ok() {
                return Ok(None);
            }
            Ok(Some(equivalence_reduce(&model)?.1))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let set: BTreeSet<ClassLabel> = labels.into_iter().flatten().collect();
    Ok(set.into_iter().collect())
}

/// The labels the group descriptor predicts for the listed `h`: the Ψ
/// descriptor allows `h = 0` only off `n' = 2n`, and every `z` mod `G`; the λ
/// descriptor adds its mod 2 congruence on `(h, z)`.
pub fn predicted_classes(
    n: u32,
    n_prime: u32,
    h_values: &[BigInt],
    special_only: bool,
) -> Result<Vec<ClassLabel>, LabError> {
    if n == n_prime {
        return Err(LabError::EqualDimensions);
    }
    let desc: AbelianGroupDescriptor = if special_only { extalg_lambda(n, n_prime)? } else { extalg_psi(n, n_prime)? };
    let g = desc.torsion.first().cloned().unwrap_or_else(|| BigInt::from(1));
    let g_small = u64::try_from(&g).map_err(|_| LabError::Malformed("G too large to list".into()))?;
    let mut out = Vec::new();
    for h in h_values {
        if n_prime != 2 * n && !h.is_zero() {
            continue;
        }
        for z in 0..g_small {
            let z = BigInt::from(z);
            let coords = [h, &z];
            let ok = desc.congruences.iter().all(|c| match &c.modulus {
                Modulus::Fixed(m) => {
                    let s: BigInt = c.coeffs.iter().zip(coords).map(|(a, x)| a * x).sum();
                    s.is_multiple_of(m)
                }
                Modulus::EachOddPrime => true,
            });
            if ok {
                out.push(ClassLabel { h: h.clone(), z });
            }
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn reduce_examples() {
        let m = ExtensionModel::from_nu2(2, 4, BigInt::from(1), &BigInt::from(25), 6).unwrap();
        let (c, label) = equivalence_reduce(&m).unwrap();
        assert_eq!(label, ClassLabel::new(1, 1));
        assert_eq!(c.nu(2).unwrap(), BigInt::from(1));
        assert!(are_equivalent(&m, &c));
        let m = ExtensionModel::from_nu2(2, 4, BigInt::from(1), &BigInt::from(-1), 6).unwrap();
        assert_eq!(equivalence_reduce(&m).unwrap().1, ClassLabel::new(1, 11));
    }

    #[test]
    fn reduce_is_idempotent() {
        for nu2 in -20..=20 {
            let m = ExtensionModel::from_nu2(1, 3, BigInt::zero(), &BigInt::from(nu2), 6).unwrap();
            let (c, l) = equivalence_reduce(&m).unwrap();
            assert_eq!(equivalence_reduce(&c).unwrap(), (c.clone(), l));
        }
    }

    #[test]
    fn inequivalent_models() {
        let a = ExtensionModel::from_nu2(2, 4, BigInt::from(1), &BigInt::from(1), 6).unwrap();
        let b = ExtensionModel::from_nu2(2, 4, BigInt::from(1), &BigInt::from(3), 6).unwrap();
        assert!(!are_equivalent(&a, &b));
        assert_ne!(equivalence_reduce(&a).unwrap().1, equivalence_reduce(&b).unwrap().1);
    }

    #[test]
    fn equal_dimensions_rejected() {
        assert_eq!(enumerate_classes(2, 2, &ints(&[0]), 4, false), Err(LabError::EqualDimensions));
    }

    #[test]
    fn double_dimension_classes() {
        let hs = ints(&[0, 1]);
        let psi = enumerate_classes(1, 2, &hs, 8, false).unwrap();
        assert_eq!(psi, predicted_classes(1, 2, &hs, false).unwrap());
        assert_eq!(psi.len(), 4);
        let lam = enumerate_classes(1, 2, &hs, 8, true).unwrap();
        assert_eq!(lam, vec![ClassLabel::new(0, 0), ClassLabel::new(1, 1)]);
        assert_eq!(lam, predicted_classes(1, 2, &hs, true).unwrap());
    }

    #[test]
    fn only_zero_hopf_off_double() {
        let labels = enumerate_classes(1, 3, &ints(&[-1, 0, 1]), 6, false).unwrap();
        assert!(labels.iter().all(|l| l.h.is_zero()));
        assert_eq!(labels.len(), 6);
    }
}
