#![allow(dead_code)]

use adams_core::{BigInt, Monomial, MultiPoly, Var};
use proptest::prelude::*;

pub fn arb_var(families: &'static [char], max_index: u64) -> impl Strategy<Value = Var> {
    (prop::sample::select(families), 1..=max_index).prop_map(|(f, i)| Var::new(f, i))
}

pub fn arb_monomial(families: &'static [char], max_index: u64) -> impl Strategy<Value = Monomial> {
    prop::collection::vec((arb_var(families, max_index), 1u32..=3), 0..=3).prop_map(Monomial::from_factors)
}

pub fn arb_poly_in(families: &'static [char], max_index: u64) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((arb_monomial(families, max_index), -20i64..=20), 0..=5).prop_map(|terms| {
        MultiPoly::from_terms(terms.into_iter().map(|(m, c)| (m, BigInt::from(c))))
    })
}

pub fn arb_poly() -> impl Strategy<Value = MultiPoly> {
    arb_poly_in(&['a', 'b'], 4)
}

pub fn int(x: i64) -> BigInt {
    BigInt::from(x)
}

pub fn binomial(m: i64, i: u32) -> BigInt {
    // falling factorial over i!, valid for negative m too
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for t in 0..i64::from(i) {
        num *= m - t;
        den *= t + 1;
    }
    num / den
}
