use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{FiniteRank, PsiRing, RingError};
use crate::ring::CommRing;

/// `K(S^{2n})`: the dual numbers `Z·1 ⊕ Z·y` with `y² = 0` and
/// `Ψ^k(y) = k^n y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SphereKRing {
    pub n: u32,
}

/// `unit·1 + y·y`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SphereElem {
    #[serde(with = "crate::json::bigint")]
    pub unit: BigInt,
    #[serde(with = "crate::json::bigint")]
    pub y: BigInt,
}

impl SphereElem {
    pub fn new<A: Into<BigInt>, B: Into<BigInt>>(unit: A, y: B) -> Self {
        SphereElem { unit: unit.into(), y: y.into() }
    }
}

impl fmt::Display for SphereElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.unit.is_zero(), self.y.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.unit),
            (true, false) => write_y(f, &self.y, true),
            (false, false) => {
                write!(f, "{}", self.unit)?;
                write_y(f, &self.y, false)
            }
        }
    }
}

fn write_y(f: &mut fmt::Formatter<'_>, c: &BigInt, leading: bool) -> fmt::Result {
    let sign = match (leading, c.is_negative()) {
        (true, true) => "-",
        (true, false) => "",
        (false, true) => " - ",
        (false, false) => " + ",
    };
    let a = c.abs();
    if a.is_one() {
        write!(f, "{sign}y")
    } else {
        write!(f, "{sign}{a}*y")
    }
}

impl SphereKRing {
    pub fn new(n: u32) -> Self {
        assert!(n >= 1, "sphere half-dimension must be positive");
        SphereKRing { n }
    }

    pub fn y(&self) -> SphereElem {
        SphereElem::new(0, 1)
    }
}

impl CommRing for SphereKRing {
    type Elem = SphereElem;

    fn zero(&self) -> SphereElem {
        SphereElem::default()
    }
    fn one(&self) -> SphereElem {
        SphereElem::new(1, 0)
    }
    fn from_int(&self, n: &BigInt) -> SphereElem {
        SphereElem { unit: n.clone(), y: BigInt::zero() }
    }
    fn add(&self, a: &SphereElem, b: &SphereElem) -> SphereElem {
        SphereElem { unit: &a.unit + &b.unit, y: &a.y + &b.y }
    }
    fn neg(&self, a: &SphereElem) -> SphereElem {
        SphereElem { unit: -&a.unit, y: -&a.y }
    }
    fn mul(&self, a: &SphereElem, b: &SphereElem) -> SphereElem {
        SphereElem { unit: &a.unit * &b.unit, y: &a.unit * &b.y + &b.unit * &a.y }
    }
    fn div_exact(&self, a: &SphereElem, c: &BigInt) -> Option<SphereElem> {
        let (u, ru) = a.unit.div_rem(c);
        let (y, ry) = a.y.div_rem(c);
        (ru.is_zero() && ry.is_zero()).then_some(SphereElem { unit: u, y })
    }
    fn is_multiple_of(&self, a: &SphereElem, m: &BigInt) -> bool {
        a.unit.is_multiple_of(m) && a.y.is_multiple_of(m)
    }
}

impl PsiRing for SphereKRing {
    fn psi(&self, k: u64, x: &SphereElem) -> Result<SphereElem, RingError> {
        if k == 0 {
            return Err(RingError::ZeroIndex);
        }
        let factor: BigInt = Pow::pow(BigInt::from(k), self.n);
        Ok(SphereElem { unit: x.unit.clone(), y: factor * &x.y })
    }

    fn generators(&self) -> Vec<SphereElem> {
        vec![self.one(), self.y()]
    }
}

impl FiniteRank for SphereKRing {
    fn basis(&self) -> Vec<SphereElem> {
        vec![self.one(), self.y()]
    }
    fn coords(&self, x: &SphereElem) -> Vec<BigInt> {
        vec![x.unit.clone(), x.y.clone()]
    }
    fn from_coords(&self, c: &[BigInt]) -> SphereElem {
        SphereElem { unit: c[0].clone(), y: c[1].clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::psi_lambda_rings::{is_special, lambda_structure};

    #[test]
    fn dual_number_arithmetic() {
        let r = SphereKRing::new(3);
        let a = SphereElem::new(2, 5);
        let b = SphereElem::new(-1, 4);
        assert_eq!(r.mul(&a, &b), SphereElem::new(-2, 3));
        assert_eq!(r.mul(&r.y(), &r.y()), r.zero());
        assert_eq!(r.psi(2, &a).unwrap(), SphereElem::new(2, 40));
        assert_eq!(a.to_string(), "2 + 5*y");
        assert_eq!(SphereElem::new(0, -1).to_string(), "-y");
    }

    #[test]
    fn sphere_rings_are_special() {
        for n in 1..=10 {
            let r = SphereKRing::new(n);
            assert!(is_special(&r, &[2, 3, 5, 7, 11, 13], &[SphereElem::new(3, -2)]).unwrap().is_special());
        }
    }

    #[test]
    fn second_lambda_of_y() {
        assert_eq!(lambda_structure(&SphereKRing::new(1), &SphereElem::new(0, 1), 2).unwrap(), SphereElem::new(0, -1));
        for n in 1..=8u32 {
            let l2 = lambda_structure(&SphereKRing::new(n), &SphereElem::new(0, 1), 2).unwrap();
            assert_eq!(l2, SphereElem::new(0, -(BigInt::from(2).pow(n - 1))));
        }
    }
}
