//! Sparse multivariate polynomials with arbitrary-precision integer
//! coefficients.
//!
//! A [`MultiPoly`] is a map from [`Monomial`] to a nonzero [`BigInt`]. The
//! representation is canonical, so structural equality is polynomial equality.
//! Terms are kept in graded lexicographic order; the leading term is the
//! largest one.

mod monomial;
mod text;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::ring::CommRing;

pub use monomial::{Monomial, Var};
pub use text::SyntaxError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable {0} is neither bound nor declared fixed")]
    UnboundVariable(Var),
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn var(v: Var) -> Self {
        Self::term(1, Monomial::var(v))
    }

    /// Shorthand for the generator `family_index`.
    pub fn gen(family: char, index: u64) -> Self {
        Self::var(Var::new(family, index))
    }

    pub fn term<T: Into<BigInt>>(c: T, m: Monomial) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigInt)>>(iter: I) -> Self {
        let mut p = MultiPoly::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(&Monomial::one())
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn degree(&self) -> Option<u64> {
        self.leading_term().map(|(m, _)| m.degree())
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms.keys().flat_map(|m| m.factors().iter().map(|&(v, _)| v)).collect()
    }

    pub fn families(&self) -> BTreeSet<char> {
        self.vars().into_iter().map(|v| v.family).collect()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly { terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &BigInt) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly { terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect() }
    }

    pub fn pow(&self, mut e: u32) -> MultiPoly {
        let mut base = self.clone();
        let mut acc = MultiPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Reduces every coefficient into `[0, m)` and drops the zeros.
    pub fn reduce_mod(&self, m: &BigInt) -> MultiPoly {
        assert!(*m >= BigInt::from(2), "modulus must be at least 2");
        MultiPoly::from_terms(self.terms.iter().map(|(t, c)| (t.clone(), c.mod_floor(m))))
    }

    /// Divides every coefficient by `c`, or returns `None` if any is not a multiple.
    pub fn div_exact(&self, c: &BigInt) -> Option<MultiPoly> {
        let mut out = BTreeMap::new();
        for (m, a) in &self.terms {
            let (q, r) = a.div_rem(c);
            if !r.is_zero() {
                return None;
            }
            out.insert(m.clone(), q);
        }
        Some(MultiPoly { terms: out })
    }

    pub fn is_multiple_of(&self, c: &BigInt) -> bool {
        self.terms.values().all(|a| a.is_multiple_of(c))
    }

    /// Renames variables through `f`; colliding images are merged.
    pub fn map_vars<F: Fn(Var) -> Var>(&self, f: F) -> MultiPoly {
        MultiPoly::from_terms(self.terms.iter().map(|(m, c)| (m.map_vars(&f), c.clone())))
    }

    /// Simultaneous substitution. Every variable must be bound or fixed.
    pub fn substitute(&self, subst: &Substitution) -> Result<MultiPoly, PolyError> {
        let mut powers: HashMap<(Var, u32), MultiPoly> = HashMap::new();
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut fixed_part = Vec::new();
            let mut acc = MultiPoly::constant(c.clone());
            for &(v, e) in m.factors() {
                match subst.bindings.get(&v) {
                    Some(image) => {
                        let pw = powers.entry((v, e)).or_insert_with(|| image.pow(e));
                        acc = &acc * &*pw;
                    }
                    None if subst.is_fixed(v) => fixed_part.push((v, e)),
                    None => return Err(PolyError::UnboundVariable(v)),
                }
            }
            if !fixed_part.is_empty() {
                acc = acc.mul_monomial(&Monomial::from_factors(fixed_part), &BigInt::one());
            }
            out = out + acc;
        }
        Ok(out)
    }

    /// Evaluates in an arbitrary commutative ring, with `assign` giving the
    /// image of each variable.
    pub fn eval_in<R, F>(&self, ring: &R, assign: F) -> Result<R::Elem, PolyError>
    where
        R: CommRing,
        F: Fn(Var) -> Option<R::Elem>,
    {
        let mut cache: HashMap<Var, R::Elem> = HashMap::new();
        let mut total = ring.zero();
        for (m, c) in &self.terms {
            let mut acc = ring.from_int(c);
            for &(v, e) in m.factors() {
                let val = match cache.get(&v) {
                    Some(x) => x.clone(),
                    None => {
                        let x = assign(v).ok_or(PolyError::UnboundVariable(v))?;
                        cache.insert(v, x.clone());
                        x
                    }
                };
                acc = ring.mul(&acc, &ring.pow(&val, e));
            }
            total = ring.add(&total, &acc);
        }
        Ok(total)
    }

    pub fn parse(text: &str) -> Result<MultiPoly, SyntaxError> {
        text::parse(text)
    }
}

/// Bindings for [`MultiPoly::substitute`], plus the set of variables allowed
/// to pass through unchanged.
#[derive(Clone, Debug, Default)]
pub struct Substitution {
    bindings: BTreeMap<Var, MultiPoly>,
    fixed_families: BTreeSet<char>,
    fixed_vars: BTreeSet<Var>,
    fix_all: bool,
}

impl Substitution {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn bind(mut self, v: Var, image: MultiPoly) -> Self {
        self.bindings.insert(v, image);
        self
    }

    pub fn fix(mut self, v: Var) -> Self {
        self.fixed_vars.insert(v);
        self
    }

    pub fn fix_family(mut self, family: char) -> Self {
        self.fixed_families.insert(family);
        self
    }

    /// Leaves every unbound variable in place.
    pub fn fix_unbound(mut self) -> Self {
        self.fix_all = true;
        self
    }

    fn is_fixed(&self, v: Var) -> bool {
        self.fix_all || self.fixed_vars.contains(&v) || self.fixed_families.contains(&v.family)
    }
}

impl FromIterator<(Var, MultiPoly)> for Substitution {
    fn from_iter<I: IntoIterator<Item = (Var, MultiPoly)>>(iter: I) -> Self {
        Substitution { bindings: iter.into_iter().collect(), ..Default::default() }
    }
}

/// Free function form of [`MultiPoly::reduce_mod`].
pub fn poly_mod(p: &MultiPoly, m: u64) -> MultiPoly {
    p.reduce_mod(&BigInt::from(m))
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for MultiPoly {
    type Err = SyntaxError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        text::parse(s)
    }
}

impl From<i64> for MultiPoly {
    fn from(c: i64) -> Self {
        MultiPoly::constant(c)
    }
}

impl From<BigInt> for MultiPoly {
    fn from(c: BigInt) -> Self {
        MultiPoly::constant(c)
    }
}

impl From<Var> for MultiPoly {
    fn from(v: Var) -> Self {
        MultiPoly::var(v)
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &'a MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(mut self, rhs: MultiPoly) -> MultiPoly {
        if self.terms.len() < rhs.terms.len() {
            return rhs + self;
        }
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &'a MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        &self - &rhs
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(mut self) -> MultiPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &'a MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

/// The polynomial ring over the integers in all variables, as a [`CommRing`].
#[derive(Clone, Copy, Debug, Default)]
pub struct PolyRing;

impl CommRing for PolyRing {
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
    fn scale(&self, c: &BigInt, a: &MultiPoly) -> MultiPoly {
        a.scale(c)
    }
    fn pow(&self, a: &MultiPoly, e: u32) -> MultiPoly {
        a.pow(e)
    }
    fn div_exact(&self, a: &MultiPoly, c: &BigInt) -> Option<MultiPoly> {
        a.div_exact(c)
    }
    fn is_multiple_of(&self, a: &MultiPoly, m: &BigInt) -> bool {
        a.is_multiple_of(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn addition_examples() {
        assert_eq!(p("a1 + 1") + p("-a1"), MultiPoly::one());
        assert_eq!(p("a1") + p("a1"), p("2*a1"));
        let sum = p("a1*b2 - 3") + p("3");
        assert_eq!(sum, p("a1*b2"));
        assert_eq!(sum.len(), 1);
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(p("a1 + b1") * p("a1 - b1"), p("a1^2 - b1^2"));
        assert!((MultiPoly::zero() * p("a1 + 7*b3")).is_zero());
        assert_eq!(p("a1 + 1").pow(2), p("a1^2 + 2*a1 + 1"));
    }

    #[test]
    fn substitution_examples() {
        let a1 = Var::new('a', 1);
        let b1 = Var::new('b', 1);
        let s = Substitution::new().bind(a1, p("a2"));
        assert_eq!(p("a1^2").substitute(&s).unwrap(), p("a2^2"));

        let s = Substitution::new().bind(a1, p("a2 + 1")).bind(b1, p("b2"));
        assert_eq!(p("a1*b1").substitute(&s).unwrap(), p("a2*b2 + b2"));

        let q = p("3*a1^2*b1 - a1 + 4");
        let id: Substitution = q.vars().into_iter().map(|v| (v, MultiPoly::var(v))).collect();
        assert_eq!(q.substitute(&id).unwrap(), q);
    }

    #[test]
    fn substitution_requires_bound_or_fixed() {
        let s = Substitution::new().bind(Var::new('a', 1), p("2"));
        assert_eq!(
            p("a1*b1").substitute(&s),
            Err(PolyError::UnboundVariable(Var::new('b', 1)))
        );
        let s = s.fix_family('b');
        assert_eq!(p("a1*b1").substitute(&s).unwrap(), p("2*b1"));
    }

    #[test]
    fn reduction_mod_m() {
        assert_eq!(poly_mod(&p("2*a1 + 3"), 2), MultiPoly::one());
        let r = poly_mod(&p("a2 - a1^2"), 2);
        assert_eq!(r, p("a2 + a1^2"));
        // r and the input differ by a multiple of 2
        assert!((&r - &p("a2 - a1^2")).is_multiple_of(&BigInt::from(2)));
        assert!(poly_mod(&p("6*a1"), 3).is_zero());
    }

    #[test]
    fn display_leads_with_highest_term() {
        assert_eq!(p("-5 + 3*b2*a1^2").to_string(), "3*a1^2*b2 - 5");
        assert_eq!(p("a1 - a1").to_string(), "0");
        assert_eq!(p("-a1 + a2").to_string(), "-a1 + a2");
    }

    #[test]
    fn exact_division() {
        assert_eq!(p("4*a1 - 6").div_exact(&BigInt::from(2)), Some(p("2*a1 - 3")));
        assert_eq!(p("4*a1 - 5").div_exact(&BigInt::from(2)), None);
    }
}
