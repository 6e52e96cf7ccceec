#![allow(dead_code)]

use f5_core::algebra::{Coeff, Monomial, MonomialOrder, Polynomial, PrimeField, Ring};
use proptest::prelude::*;

pub const P: u64 = 32003;

pub fn ring(nvars: usize, order: MonomialOrder) -> Ring {
    Ring::new(PrimeField::new(P).unwrap(), order, nvars)
}

pub fn order() -> impl Strategy<Value = MonomialOrder> {
    prop_oneof![Just(MonomialOrder::Grevlex), Just(MonomialOrder::Lex), Just(MonomialOrder::Deglex)]
}

pub fn monomial(nvars: usize, max_exp: u16) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, nvars).prop_map(Monomial::new)
}

/// Arbitrary polynomial with up to `max_terms` terms (possibly zero).
pub fn polynomial(ring: Ring, max_exp: u16, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    let n = ring.nvars();
    let p = ring.field.characteristic();
    prop::collection::vec((1..p, monomial(n, max_exp)), 0..=max_terms)
        .prop_map(move |terms| ring.from_terms(terms).unwrap())
}

/// Sum of `(coefficient, exponent vector)` terms, all of total degree `d`.
fn homogeneous_poly(ring: &Ring, d: u32, terms: Vec<(Coeff, Vec<u16>)>) -> Polynomial {
    let n = ring.nvars();
    let terms = terms.into_iter().map(|(c, seed)| {
        // spread the degree over the variables following the seed
        let mut exps = vec![0u16; n];
        let mut left = d as u16;
        for (i, s) in seed.iter().enumerate().take(n - 1) {
            let e = s % (left + 1);
            exps[i] = e;
            left -= e;
        }
        exps[n - 1] = left;
        (c, Monomial::new(exps))
    });
    ring.from_terms(terms).unwrap()
}

/// Homogeneous systems with at most 4 variables, 3 generators and degree
/// 3; every generator is nonzero.
pub fn homogeneous_system() -> impl Strategy<Value = (Ring, Vec<Polynomial>)> {
    (2usize..=4, 1usize..=3).prop_flat_map(|(n, k)| {
        let gen = (1u32..=3, prop::collection::vec((1..P as u32, prop::collection::vec(0u16..4, n)), 1..=4));
        prop::collection::vec(gen, k).prop_map(move |gens| {
            let r = ring(n, MonomialOrder::Grevlex);
            let polys = gens
                .into_iter()
                .map(|(d, terms)| homogeneous_poly(&r, d, terms))
                .filter(|p| !p.is_zero())
                .collect::<Vec<_>>();
            (r, polys)
        })
    })
    .prop_filter("at least one generator", |(_, polys)| !polys.is_empty())
}
