use std::cmp::Ordering;
use std::fmt;

/// A generator `family_index`, e.g. `a3`. Families are single lowercase letters
/// and indices start at 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    pub family: char,
    pub index: u64,
}

impl Var {
    /// Panics on an index of zero or a family outside `a..=z`; use
    /// [`Var::checked`] for untrusted input.
    pub fn new(family: char, index: u64) -> Self {
        Self::checked(family, index).unwrap_or_else(|| panic!("invalid variable {family}{index}"))
    }

    pub fn checked(family: char, index: u64) -> Option<Self> {
        (family.is_ascii_lowercase() && index >= 1).then_some(Var { family, index })
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.index)
    }
}

/// A power product of variables. Factors are kept sorted by variable and
/// never carry a zero exponent.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    factors: Vec<(Var, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { factors: Vec::new() }
    }

    pub fn var(v: Var) -> Self {
        Monomial { factors: vec![(v, 1)] }
    }

    /// Builds a monomial from arbitrary `(var, exp)` pairs, merging repeats.
    pub fn from_factors<I: IntoIterator<Item = (Var, u32)>>(iter: I) -> Self {
        let mut factors: Vec<(Var, u32)> = iter.into_iter().filter(|&(_, e)| e > 0).collect();
        factors.sort_by_key(|&(v, _)| v);
        let mut merged: Vec<(Var, u32)> = Vec::with_capacity(factors.len());
        for (v, e) in factors {
            match merged.last_mut() {
                Some((last, exp)) if *last == v => *exp += e,
                _ => merged.push((v, e)),
            }
        }
        Monomial { factors: merged }
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.factors.iter().map(|&(_, e)| u64::from(e)).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.factors
            .binary_search_by_key(&v, |&(w, _)| w)
            .map(|i| self.factors[i].1)
            .unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.factors, &other.factors);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial { factors: out }
    }

    /// Splits into the part whose variables satisfy `pred` and the rest.
    pub fn split_by<F: Fn(Var) -> bool>(&self, pred: F) -> (Monomial, Monomial) {
        let (yes, no): (Vec<_>, Vec<_>) = self.factors.iter().partition(|(v, _)| pred(*v));
        (Monomial { factors: yes }, Monomial { factors: no })
    }

    /// Applies an injective-or-not renaming of variables.
    pub fn map_vars<F: Fn(Var) -> Var>(&self, f: F) -> Monomial {
        Monomial::from_factors(self.factors.iter().map(|&(v, e)| (f(v), e)))
    }

    /// Lexicographic comparison with smaller variables ranking higher
    /// (`a1 > a2 > ... > b1 > ...`).
    pub fn lex_cmp(&self, other: &Monomial) -> Ordering {
        let (a, b) = (&self.factors, &other.factors);
        for (x, y) in a.iter().zip(b.iter()) {
            match x.0.cmp(&y.0) {
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => match x.1.cmp(&y.1) {
                    Ordering::Equal => {}
                    ord => return ord,
                },
            }
        }
        a.len().cmp(&b.len())
    }
}

/// Graded lexicographic order: total degree first, then [`Monomial::lex_cmp`].
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.lex_cmp(other))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, (v, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(f: &[(char, u64, u32)]) -> Monomial {
        Monomial::from_factors(f.iter().map(|&(c, i, e)| (Var::new(c, i), e)))
    }

    #[test]
    fn grlex_orders_by_degree_first() {
        assert!(m(&[('b', 9, 2)]) > m(&[('a', 1, 1)]));
        assert!(m(&[('a', 1, 2)]) > m(&[('a', 1, 1), ('a', 2, 1)]));
        assert!(m(&[('a', 1, 1), ('a', 2, 1)]) > m(&[('a', 2, 2)]));
        assert!(m(&[('a', 1, 1)]) > m(&[('b', 1, 1)]));
    }

    #[test]
    fn repeated_factors_merge() {
        let x = m(&[('a', 1, 1), ('b', 2, 1), ('a', 1, 2)]);
        assert_eq!(x.factors(), &[(Var::new('a', 1), 3), (Var::new('b', 2), 1)]);
        assert_eq!(x.to_string(), "a1^3*b2");
    }

    #[test]
    fn zero_index_is_rejected() {
        assert!(Var::checked('a', 0).is_none());
        assert!(Var::checked('A', 1).is_none());
    }
}
