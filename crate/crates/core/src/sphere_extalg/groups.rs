//! Extension groups of `K(S^{2n})` by `K̃(S^{2n'})`.
//!
//! A Ψ-extension is fixed by its Hopf invariant `h` and by `ν_2`; the other
//! `ν_k` follow from `ν_2`, and `ν_2 = z·(2^{n'} − 2^n)/G_{n,n'}` with `z`
//! defined modulo `G_{n,n'}`. Descriptors use the coordinates `(h, z)`. When
//! `n = n'` the `ν_p` at primes are independent and the torsion part becomes a
//! product of one free integer per prime, kept symbolic.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::gn::big_g;
use super::ExtalgError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Modulus {
    Fixed(BigInt),
    /// One congruence per odd prime `p`, modulo `p`.
    EachOddPrime,
}

impl Serialize for Modulus {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Modulus::Fixed(m) => crate::json::bigint::serialize(m, s),
            Modulus::EachOddPrime => s.serialize_str("p"),
        }
    }
}

impl<'de> Deserialize<'de> for Modulus {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match serde_json::Value::deserialize(d)? {
            serde_json::Value::String(s) if s == "p" => Ok(Modulus::EachOddPrime),
            serde_json::Value::Number(n) => n
                .to_string()
                .parse()
                .map(Modulus::Fixed)
                .map_err(|_| serde::de::Error::custom("modulus must be an integer")),
            other => Err(serde::de::Error::custom(format!("bad modulus {other}"))),
        }
    }
}

/// `Σ coeffs[i]·coord[i] ≡ 0 (mod modulus)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Congruence {
    #[serde(with = "crate::json::bigint_vec")]
    pub coeffs: Vec<BigInt>,
    pub modulus: Modulus,
}

/// `Z^free_rank ⊕ ⊕ Z_{torsion[i]}`, optionally with one extra free integer per
/// prime, cut down by congruences on the listed coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianGroupDescriptor {
    pub free_rank: u32,
    #[serde(with = "crate::json::bigint_vec")]
    pub torsion: Vec<BigInt>,
    pub per_prime_free: bool,
    pub coordinates: Vec<String>,
    pub congruences: Vec<Congruence>,
    pub odd_h_admissible: bool,
}

impl AbelianGroupDescriptor {
    /// The free part as a subgroup of the `h`-line: `Z`, or `2Z` when every
    /// admissible class has even Hopf invariant.
    pub fn free_part(&self) -> &'static str {
        if self.odd_h_admissible {
            "Z"
        } else {
            "2Z"
        }
    }
}

impl fmt::Display for AbelianGroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let torsion = self.torsion.iter().map(|t| format!(" ⊕ Z_{t}")).collect::<String>();
        if self.per_prime_free {
            if self.congruences.is_empty() {
                return write!(f, "Z ⊕ ∏_p Z");
            }
            return write!(f, "{{(h, ν_2, ν_3, ...) ∈ Z ⊕ ∏_p Z : h ≡ ν_2 mod 2, ν_p ≡ 0 mod p for p > 2}}");
        }
        if self.congruences.is_empty() || !self.odd_h_admissible {
            let free = if self.free_rank == 1 { self.free_part().to_string() } else { format!("Z^{}", self.free_rank) };
            return write!(f, "{free}{torsion}");
        }
        write!(f, "{{(h, z) ∈ Z{torsion} : h ≡ z mod 2}}")
    }
}

fn check_n(n: u32, n_prime: u32) -> Result<(), ExtalgError> {
    if n == 0 || n_prime == 0 {
        Err(ExtalgError::ZeroArgument("n"))
    } else {
        Ok(())
    }
}

/// `Extalg_Ψ(K(S^{2n}), K̃(S^{2n'}))`: `Z ⊕ Z_{G_{n,n'}}` for `n ≠ n'`,
/// `Z ⊕ ∏_p Z` for `n = n'`.
pub fn extalg_psi(n: u32, n_prime: u32) -> Result<AbelianGroupDescriptor, ExtalgError> {
    check_n(n, n_prime)?;
    if n == n_prime {
        return Ok(AbelianGroupDescriptor {
            free_rank: 1,
            torsion: vec![],
            per_prime_free: true,
            coordinates: vec!["h".into(), "nu_p".into()],
            congruences: vec![],
            odd_h_admissible: true,
        });
    }
    let g = big_g(n, n_prime)?.value;
    Ok(AbelianGroupDescriptor {
        free_rank: 1,
        torsion: if g > BigInt::one() { vec![g] } else { vec![] },
        per_prime_free: false,
        coordinates: vec!["h".into(), "z".into()],
        congruences: vec![],
        odd_h_admissible: true,
    })
}

/// `(2^n − 2^{n'}) / G_{n,n'}`, whose parity decides whether odd Hopf
/// invariants occur among λ-extensions. `None` for `n = n'`.
pub fn lambda_parity_coefficient(n: u32, n_prime: u32) -> Result<Option<BigInt>, ExtalgError> {
    check_n(n, n_prime)?;
    if n == n_prime {
        return Ok(None);
    }
    let g = big_g(n, n_prime)?.value;
    let diff: BigInt = Pow::pow(BigInt::from(2), n) - Pow::pow(BigInt::from(2), n_prime);
    Ok(Some(diff / g))
}

/// `Extalg_λ`: the Ψ-descriptor restricted to special extensions.
/// For `n ≠ n'`: `h ≡ z·(2^n − 2^{n'})/G mod 2`.
/// For `n = n'`: `h ≡ ν_2 mod 2` and `ν_p ≡ 0 mod p` for odd `p`.
pub fn extalg_lambda(n: u32, n_prime: u32) -> Result<AbelianGroupDescriptor, ExtalgError> {
    let mut d = extalg_psi(n, n_prime)?;
    match lambda_parity_coefficient(n, n_prime)? {
        None => {
            let int = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
            d.coordinates = vec!["h".into(), "nu_2".into(), "nu_p".into()];
            d.congruences = vec![
                Congruence { coeffs: int(&[1, 1, 0]), modulus: Modulus::Fixed(BigInt::from(2)) },
                Congruence { coeffs: int(&[0, 0, 1]), modulus: Modulus::EachOddPrime },
            ];
            d.odd_h_admissible = true;
        }
        Some(c) => {
            let two = BigInt::from(2);
            let parity = c.mod_floor(&two);
            d.odd_h_admissible = !parity.is_zero();
            d.congruences = vec![Congruence { coeffs: vec![BigInt::one(), parity], modulus: Modulus::Fixed(two) }];
        }
    }
    Ok(d)
}

/// `ν_l = ν_2 (l^{n'} − l^n) / (2^{n'} − 2^n)`.
pub fn nu_from_nu2(n: u32, n_prime: u32, nu2: &BigInt, l: u64) -> Result<BigInt, ExtalgError> {
    check_n(n, n_prime)?;
    if n == n_prime {
        return Err(ExtalgError::DegenerateSet);
    }
    if l < 2 {
        return Err(ExtalgError::WindowTooSmall(l));
    }
    let span = |b: u64| -> BigInt { Pow::pow(BigInt::from(b), n_prime) - Pow::pow(BigInt::from(b), n) };
    let num = nu2 * span(l);
    let den = span(2);
    let (q, r) = num.div_rem(&den);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(ExtalgError::NonIntegral { nu2: nu2.clone(), l })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn psi_descriptors() {
        let d = extalg_psi(1, 2).unwrap();
        assert_eq!((d.free_rank, d.torsion.clone()), (1, vec![BigInt::from(2)]));
        assert_eq!(d.to_string(), "Z ⊕ Z_2");
        assert_eq!(extalg_psi(2, 4).unwrap().to_string(), "Z ⊕ Z_12");
        let d = extalg_psi(3, 3).unwrap();
        assert!(d.per_prime_free && d.torsion.is_empty());
        assert_eq!(d.to_string(), "Z ⊕ ∏_p Z");
    }

    #[test]
    fn lambda_parity() {
        assert_eq!(lambda_parity_coefficient(2, 4).unwrap(), Some(BigInt::from(-1)));
        assert!(extalg_lambda(2, 4).unwrap().odd_h_admissible);
        assert_eq!(lambda_parity_coefficient(3, 6).unwrap(), Some(BigInt::from(-28)));
        let d = extalg_lambda(3, 6).unwrap();
        assert!(!d.odd_h_admissible);
        assert_eq!(d.to_string(), "2Z ⊕ Z_2");
    }

    #[test]
    fn lambda_equal_dimensions() {
        let d = extalg_lambda(4, 4).unwrap();
        assert!(d.per_prime_free);
        assert_eq!(d.congruences.len(), 2);
        assert_eq!(d.congruences[1].modulus, Modulus::EachOddPrime);
    }

    #[test]
    fn nu_examples() {
        let one = BigInt::one();
        assert_eq!(nu_from_nu2(1, 2, &one, 3).unwrap(), BigInt::from(3));
        assert_eq!(nu_from_nu2(1, 2, &BigInt::from(5), 2).unwrap(), BigInt::from(5));
        assert_eq!(nu_from_nu2(1, 3, &one, 3).unwrap(), BigInt::from(4));
        // (3,6): ν_2 must be a multiple of 28
        assert!(matches!(nu_from_nu2(3, 6, &one, 3), Err(ExtalgError::NonIntegral { .. })));
        assert!(nu_from_nu2(3, 6, &BigInt::from(28), 3).is_ok());
    }

    #[test]
    fn descriptor_json_shape() {
        let v = serde_json::to_value(extalg_psi(2, 4).unwrap()).unwrap();
        assert_eq!(v["free_rank"], 1);
        assert_eq!(v["torsion"], serde_json::json!([12]));
        assert_eq!(v["per_prime_free"], false);
        let back: AbelianGroupDescriptor = serde_json::from_value(v).unwrap();
        assert_eq!(back, extalg_psi(2, 4).unwrap());
        let lam = extalg_lambda(5, 5).unwrap();
        let s = serde_json::to_string(&lam).unwrap();
        assert!(s.contains("\"modulus\":\"p\""));
        assert_eq!(serde_json::from_str::<AbelianGroupDescriptor>(&s).unwrap(), lam);
    }
}
