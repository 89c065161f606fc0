//! Ψ-modules, λ-modules and derivations over finite-rank rings.
//!
//! Modules are free abelian groups `Z^m`. The ring acts through one matrix
//! per ring basis element and the operators `ψ^i` (or `Λ^i`) are matrices for
//! `1 ≤ i ≤ bound`. All axioms are checked on basis elements, which suffices
//! because every structure in scope is determined by its values there.

use num_bigint::BigInt;
use num_traits::{Pow, Zero};
use serde::Serialize;

use super::{lambda_operations, FiniteRank, PsiRing, RingError};
use crate::ring::IntMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    UnitActsTrivially,
    ActionAssociative,
    OperatorOneIsIdentity,
    OperatorSemilinear,
    OperatorComposition,
    Leibniz,
    PsiCompatible,
    LambdaCompatible,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Verdict {
    Ok,
    CounterExample { axiom: Axiom, detail: String },
}

impl Verdict {
    pub fn is_ok(&self) -> bool {
        matches!(self, Verdict::Ok)
    }

    fn fail(axiom: Axiom, detail: String) -> Self {
        Verdict::CounterExample { axiom, detail }
    }
}

/// The carrier shared by both module kinds.
#[derive(Clone, Debug)]
struct Carrier<R> {
    ring: R,
    rank: usize,
    action: Vec<IntMatrix>,
    ops: Vec<IntMatrix>,
}

impl<R: FiniteRank> Carrier<R> {
    fn new(ring: R, rank: usize, action: Vec<IntMatrix>, bound: u64, op: impl Fn(u64) -> IntMatrix) -> Self {
        assert_eq!(action.len(), ring.rank(), "one action matrix per ring basis element");
        assert!(action.iter().all(|a| a.rows() == rank && a.cols() == rank));
        let ops: Vec<IntMatrix> = (1..=bound).map(op).collect();
        assert!(ops.iter().all(|a| a.rows() == rank && a.cols() == rank));
        Carrier { ring, rank, action, ops }
    }

    fn act(&self, r: &R::Elem) -> IntMatrix {
        self.ring
            .coords(r)
            .iter()
            .zip(&self.action)
            .fold(IntMatrix::zeros(self.rank, self.rank), |acc, (c, a)| acc.add(&a.scale(c)))
    }

    fn op(&self, i: u64) -> Option<&IntMatrix> {
        self.ops.get(usize::try_from(i).ok()?.checked_sub(1)?)
    }

    fn bound(&self) -> u64 {
        self.ops.len() as u64
    }

    fn check_action(&self) -> Verdict {
        if self.act(&self.ring.one()) != IntMatrix::identity(self.rank) {
            return Verdict::fail(Axiom::UnitActsTrivially, "1 does not act as the identity".into());
        }
        let basis = self.ring.basis();
        for r in &basis {
            for s in &basis {
                if self.act(r).mul(&self.act(s)) != self.act(&self.ring.mul(r, s)) {
                    return Verdict::fail(Axiom::ActionAssociative, format!("r = {r}, s = {s}"));
                }
            }
        }
        Verdict::Ok
    }
}

impl<R: FiniteRank + PsiRing> Carrier<R> {
    fn check_semilinear(&self) -> Result<Verdict, RingError> {
        if self.op(1).is_some_and(|m| *m != IntMatrix::identity(self.rank)) {
            return Ok(Verdict::fail(Axiom::OperatorOneIsIdentity, "operator 1 is not the identity".into()));
        }
        for i in 1..=self.bound() {
            let op = self.op(i).expect("in range");
            for r in self.ring.basis() {
                let lhs = op.mul(&self.act(&r));
                let rhs = self.act(&self.ring.psi(i, &r)?).mul(op);
                if lhs != rhs {
                    return Ok(Verdict::fail(Axiom::OperatorSemilinear, format!("i = {i}, r = {r}")));
                }
            }
        }
        Ok(Verdict::Ok)
    }
}

/// A Ψ-module: `ψ^1 = id`, `ψ^i(rm) = Ψ^i(r)ψ^i(m)`, `ψ^i ψ^j = ψ^{ij}`.
#[derive(Clone, Debug)]
pub struct PsiModuleSpec<R> {
    inner: Carrier<R>,
}

impl<R: FiniteRank + PsiRing + Clone> PsiModuleSpec<R> {
    pub fn new(ring: R, rank: usize, action: Vec<IntMatrix>, bound: u64, op: impl Fn(u64) -> IntMatrix) -> Self {
        PsiModuleSpec { inner: Carrier::new(ring, rank, action, bound, op) }
    }

    /// The ring as a module over itself, `ψ^k = Ψ^k`.
    pub fn regular(ring: R, bound: u64) -> Result<Self, RingError> {
        let basis = ring.basis();
        let n = basis.len();
        let matrix_of = |f: &dyn Fn(&R::Elem) -> Result<R::Elem, RingError>| -> Result<IntMatrix, RingError> {
            let mut m = IntMatrix::zeros(n, n);
            for (j, b) in basis.iter().enumerate() {
                for (i, c) in ring.coords(&f(b)?).into_iter().enumerate() {
                    m.set(i, j, c);
                }
            }
            Ok(m)
        };
        let action = basis
            .iter()
            .map(|r| matrix_of(&|b| Ok(ring.mul(r, b))))
            .collect::<Result<Vec<_>, _>>()?;
        let ops = (1..=bound)
            .map(|k| matrix_of(&|b| ring.psi(k, b)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PsiModuleSpec { inner: Carrier { ring, rank: n, action, ops } })
    }

    pub fn ring(&self) -> &R {
        &self.inner.ring
    }

    pub fn rank(&self) -> usize {
        self.inner.rank
    }

    pub fn bound(&self) -> u64 {
        self.inner.bound()
    }

    pub fn act(&self, r: &R::Elem) -> IntMatrix {
        self.inner.act(r)
    }

    pub fn psi(&self, i: u64) -> Option<&IntMatrix> {
        self.inner.op(i)
    }

    pub fn check(&self) -> Result<Verdict, RingError> {
        let v = self.inner.check_action();
        if !v.is_ok() {
            return Ok(v);
        }
        let v = self.inner.check_semilinear()?;
        if !v.is_ok() {
            return Ok(v);
        }
        let b = self.bound();
        for i in 1..=b {
            for j in 1..=b / i {
                let lhs = self.inner.op(i).unwrap().mul(self.inner.op(j).unwrap());
                if lhs != *self.inner.op(i * j).unwrap() {
                    return Ok(Verdict::fail(Axiom::OperatorComposition, format!("ψ^{i} ψ^{j} ≠ ψ^{}", i * j)));
                }
            }
        }
        Ok(Verdict::Ok)
    }
}

/// A λ-module: `Λ^1 = id`, `Λ^i(rm) = Ψ^i(r)Λ^i(m)`,
/// `Λ^{ij} = (−1)^{(i+1)(j+1)} Λ^i Λ^j`.
#[derive(Clone, Debug)]
pub struct LambdaModuleSpec<R> {
    inner: Carrier<R>,
}

impl<R: FiniteRank + PsiRing + Clone> LambdaModuleSpec<R> {
    pub fn new(ring: R, rank: usize, action: Vec<IntMatrix>, bound: u64, op: impl Fn(u64) -> IntMatrix) -> Self {
        LambdaModuleSpec { inner: Carrier::new(ring, rank, action, bound, op) }
    }

    pub fn ring(&self) -> &R {
        &self.inner.ring
    }

    pub fn bound(&self) -> u64 {
        self.inner.bound()
    }

    pub fn act(&self, r: &R::Elem) -> IntMatrix {
        self.inner.act(r)
    }

    pub fn lambda(&self, i: u64) -> Option<&IntMatrix> {
        self.inner.op(i)
    }

    pub fn check(&self) -> Result<Verdict, RingError> {
        let v = self.inner.check_action();
        if !v.is_ok() {
            return Ok(v);
        }
        let v = self.inner.check_semilinear()?;
        if !v.is_ok() {
            return Ok(v);
        }
        let b = self.bound();
        for i in 1..=b {
            for j in 1..=b / i {
                let sign = if (i + 1) * (j + 1) % 2 == 0 { 1 } else { -1 };
                let rhs = self.inner.op(i).unwrap().mul(self.inner.op(j).unwrap()).scale(&BigInt::from(sign));
                if rhs != *self.inner.op(i * j).unwrap() {
                    return Ok(Verdict::fail(Axiom::OperatorComposition, format!("Λ^{} vs Λ^{i} Λ^{j}", i * j)));
                }
            }
        }
        Ok(Verdict::Ok)
    }
}

/// Rank-one modules `K̃(S^{2n'})` over `K(S^{2n})`: `y` acts by zero.
mod sphere_modules {
    use super::*;
    use crate::psi_lambda_rings::SphereKRing;

    fn rank_one_action() -> Vec<IntMatrix> {
        vec![IntMatrix::identity(1), IntMatrix::zeros(1, 1)]
    }

    impl PsiModuleSpec<SphereKRing> {
        /// `ψ^k = k^{n'}`.
        pub fn sphere_reduced(n: u32, n_prime: u32, bound: u64) -> Self {
            Self::new(SphereKRing::new(n), 1, rank_one_action(), bound, |k| {
                IntMatrix::scalar(1, &Pow::pow(BigInt::from(k), n_prime))
            })
        }
    }

    impl LambdaModuleSpec<SphereKRing> {
        /// `Λ^i = (−1)^{i+1} i^{n'−1}`, the λ-operations of a square-zero class
        /// with `Ψ^i = i^{n'}`.
        pub fn sphere_reduced(n: u32, n_prime: u32, bound: u64) -> Self {
            assert!(n_prime >= 1);
            Self::new(SphereKRing::new(n), 1, rank_one_action(), bound, |i| {
                let mag: BigInt = Pow::pow(BigInt::from(i), n_prime - 1);
                IntMatrix::scalar(1, &if i % 2 == 1 { mag } else { -mag })
            })
        }
    }
}

/// The values of an additive map `R → M` on the ring basis, in module
/// coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationCandidate {
    images: Vec<Vec<BigInt>>,
}

impl DerivationCandidate {
    pub fn new(images: Vec<Vec<BigInt>>) -> Self {
        DerivationCandidate { images }
    }

    pub fn zero(ring_rank: usize, module_rank: usize) -> Self {
        DerivationCandidate { images: vec![vec![BigInt::zero(); module_rank]; ring_rank] }
    }

    pub fn from_i64(images: &[&[i64]]) -> Self {
        Self::new(images.iter().map(|v| v.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    pub fn apply<R: FiniteRank>(&self, ring: &R, r: &R::Elem) -> Vec<BigInt> {
        let m = self.images.first().map_or(0, Vec::len);
        let mut out = vec![BigInt::zero(); m];
        for (c, img) in ring.coords(r).iter().zip(&self.images) {
            for (o, x) in out.iter_mut().zip(img) {
                *o += c * x;
            }
        }
        out
    }
}

fn add_vec(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn leibniz<R: FiniteRank>(d: &DerivationCandidate, carrier: &Carrier<R>) -> Verdict {
    let ring = &carrier.ring;
    let basis = ring.basis();
    for r in &basis {
        for s in &basis {
            let lhs = d.apply(ring, &ring.mul(r, s));
            let rhs = add_vec(&carrier.act(r).apply(&d.apply(ring, s)), &carrier.act(s).apply(&d.apply(ring, r)));
            if lhs != rhs {
                return Verdict::fail(Axiom::Leibniz, format!("d({r} * {s})"));
            }
        }
    }
    Verdict::Ok
}

/// Checks `d(rs) = r d(s) + d(r) s` on basis pairs and `ψ^i(d(r)) = d(Ψ^i(r))`
/// on basis elements and their pairwise products, for `i ≤ bound`.
pub fn check_psi_derivation<R: FiniteRank + PsiRing + Clone>(
    d: &DerivationCandidate,
    module: &PsiModuleSpec<R>,
    bound: u64,
) -> Result<Verdict, RingError> {
    let carrier = &module.inner;
    let v = leibniz(d, carrier);
    if !v.is_ok() {
        return Ok(v);
    }
    let ring = &carrier.ring;
    let basis = ring.basis();
    let mut samples = basis.clone();
    for (i, a) in basis.iter().enumerate() {
        for b in &basis[i..] {
            samples.push(ring.mul(a, b));
        }
    }
    for i in 1..=bound.min(module.bound()) {
        let op = carrier.op(i).expect("in range");
        for r in &samples {
            if op.apply(&d.apply(ring, r)) != d.apply(ring, &ring.psi(i, r)?) {
                return Ok(Verdict::fail(Axiom::PsiCompatible, format!("i = {i}, r = {r}")));
            }
        }
    }
    Ok(Verdict::Ok)
}

/// Checks Leibniz and
/// `d(λ^i(r)) = Λ^i(d(r)) + Σ_{j=1}^{i−1} Λ^j(d(r)) λ^{i−j}(r)`
/// on basis elements, pairwise products and pairwise sums, for `i ≤ bound`.
/// The λ-operations of `R` come from [`lambda_operations`].
pub fn check_lambda_derivation<R: FiniteRank + PsiRing + Clone>(
    d: &DerivationCandidate,
    module: &LambdaModuleSpec<R>,
    bound: u64,
) -> Result<Verdict, RingError> {
    let carrier = &module.inner;
    let v = leibniz(d, carrier);
    if !v.is_ok() {
        return Ok(v);
    }
    let ring = &carrier.ring;
    let basis = ring.basis();
    let mut samples = basis.clone();
    for (i, a) in basis.iter().enumerate() {
        for b in &basis[i..] {
            samples.push(ring.mul(a, b));
            samples.push(ring.add(a, b));
        }
    }
    let top = bound.min(module.bound()) as usize;
    for r in &samples {
        let lambdas = lambda_operations(ring, r, top)?;
        let dr = d.apply(ring, r);
        for i in 1..=top {
            let lhs = d.apply(ring, &lambdas[i - 1]);
            let mut rhs = carrier.op(i as u64).unwrap().apply(&dr);
            for j in 1..i {
                let term = carrier.act(&lambdas[i - j - 1]).apply(&carrier.op(j as u64).unwrap().apply(&dr));
                rhs = add_vec(&rhs, &term);
            }
            if lhs != rhs {
                return Ok(Verdict::fail(Axiom::LambdaCompatible, format!("i = {i}, r = {r}")));
            }
        }
    }
    Ok(Verdict::Ok)
}

/// `M^f`: the same group and operators, with `r` acting as `Ψ^f(r)`.
pub fn twisted_module<R: FiniteRank + PsiRing + Clone>(
    module: &PsiModuleSpec<R>,
    f: u64,
) -> Result<PsiModuleSpec<R>, RingError> {
    if f == 0 {
        return Err(RingError::ZeroIndex);
    }
    let carrier = &module.inner;
    let action = carrier
        .ring
        .basis()
        .iter()
        .map(|b| Ok(carrier.act(&carrier.ring.psi(f, b)?)))
        .collect::<Result<Vec<_>, RingError>>()?;
    Ok(PsiModuleSpec {
        inner: Carrier { ring: carrier.ring.clone(), rank: carrier.rank, action, ops: carrier.ops.clone() },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::psi_lambda_rings::{SphereElem, SphereKRing};
    use crate::ring::Integers;

    #[test]
    fn sphere_modules_are_valid() {
        for (n, np) in [(1, 1), (1, 2), (2, 4), (3, 5)] {
            assert!(PsiModuleSpec::sphere_reduced(n, np, 12).check().unwrap().is_ok());
            assert!(LambdaModuleSpec::sphere_reduced(n, np, 12).check().unwrap().is_ok());
            assert!(PsiModuleSpec::regular(SphereKRing::new(n), 12).unwrap().check().unwrap().is_ok());
        }
    }

    #[test]
    fn zero_derivations_pass() {
        let m = PsiModuleSpec::sphere_reduced(2, 4, 8);
        assert!(check_psi_derivation(&DerivationCandidate::zero(2, 1), &m, 8).unwrap().is_ok());
        let m = LambdaModuleSpec::sphere_reduced(2, 4, 6);
        assert!(check_lambda_derivation(&DerivationCandidate::zero(2, 1), &m, 6).unwrap().is_ok());
    }

    #[test]
    fn identity_on_y_is_a_psi_derivation() {
        let m = PsiModuleSpec::regular(SphereKRing::new(3), 8).unwrap();
        let d = DerivationCandidate::from_i64(&[&[0, 0], &[0, 1]]);
        assert!(check_psi_derivation(&d, &m, 8).unwrap().is_ok());
    }

    #[test]
    fn leibniz_violation_is_reported() {
        let m = PsiModuleSpec::regular(SphereKRing::new(3), 8).unwrap();
        // d(y) = 1: d(y·y) = 0 but 2·y·d(y) = 2y
        let d = DerivationCandidate::from_i64(&[&[0, 0], &[1, 0]]);
        match check_psi_derivation(&d, &m, 8).unwrap() {
            Verdict::CounterExample { axiom, .. } => assert_eq!(axiom, Axiom::Leibniz),
            Verdict::Ok => panic!("expected a counterexample"),
        }
    }

    #[test]
    fn lambda_derivation_on_integers() {
        let m = LambdaModuleSpec::new(Integers, 1, vec![IntMatrix::identity(1)], 6, |i| {
            IntMatrix::scalar(1, &BigInt::from(if i % 2 == 1 { 1 } else { -1 }))
        });
        assert!(m.check().unwrap().is_ok());
        assert!(check_lambda_derivation(&DerivationCandidate::zero(1, 1), &m, 6).unwrap().is_ok());
    }

    #[test]
    fn nonzero_lambda_derivation_on_sphere() {
        // d(y) = z into K̃(S^{2n}) respects λ; the same map into K̃(S^{2n'}),
        // n' ≠ n, does not.
        let d = DerivationCandidate::from_i64(&[&[0], &[1]]);
        let same = LambdaModuleSpec::sphere_reduced(3, 3, 6);
        assert!(check_lambda_derivation(&d, &same, 6).unwrap().is_ok());
        let other = LambdaModuleSpec::sphere_reduced(3, 4, 6);
        match check_lambda_derivation(&d, &other, 6).unwrap() {
            Verdict::CounterExample { axiom, .. } => assert_eq!(axiom, Axiom::LambdaCompatible),
            Verdict::Ok => panic!("expected a counterexample"),
        }
    }

    #[test]
    fn twisting() {
        let m = PsiModuleSpec::sphere_reduced(2, 4, 8);
        let t1 = twisted_module(&m, 1).unwrap();
        for b in m.ring().basis() {
            assert_eq!(t1.act(&b), m.act(&b));
        }
        let t2 = twisted_module(&m, 2).unwrap();
        assert_eq!(t2.act(&SphereElem::new(0, 1)), IntMatrix::zeros(1, 1));
        assert_eq!(t2.act(&SphereElem::new(1, 0)), IntMatrix::identity(1));
        assert!(t2.check().unwrap().is_ok());

        let reg = PsiModuleSpec::regular(SphereKRing::new(2), 8).unwrap();
        let t3 = twisted_module(&reg, 3).unwrap();
        // y acts on M^3 as Ψ^3(y) = 9y
        let expected = reg.act(&SphereElem::new(0, 9));
        assert_eq!(t3.act(&SphereElem::new(0, 1)), expected);
        assert!(t3.check().unwrap().is_ok());
    }
}
