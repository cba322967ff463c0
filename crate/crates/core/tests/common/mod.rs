//! Strategies shared by the property suites.
#![allow(dead_code)]

use gfdiag::rational::rat;
use gfdiag::series::SequenceSpec;
use gfdiag::{BiPoly, Rational, UniPoly, Var};
use proptest::prelude::*;

pub const CASES: u32 = 200;

pub fn config() -> ProptestConfig {
    ProptestConfig {
        cases: CASES,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    small_rational().prop_filter("nonzero", |r| *r != rat(0, 1))
}

pub fn small_int() -> impl Strategy<Value = Rational> {
    (-4i64..=4).prop_map(|n| rat(n, 1))
}

pub fn poly(var: Var, max_degree: usize) -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(small_rational(), 0..=max_degree + 1)
        .prop_map(move |c| UniPoly::new(var, c))
}

pub fn nonzero_poly(var: Var, max_degree: usize) -> impl Strategy<Value = UniPoly> {
    poly(var, max_degree).prop_filter("nonzero", |p| !p.is_zero())
}

/// Monic, degree at least 1.
pub fn monic_poly(var: Var, max_degree: usize) -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(small_rational(), 1..=max_degree).prop_map(move |mut c| {
        c.push(rat(1, 1));
        UniPoly::new(var, c)
    })
}

/// Constant term 1, so the function is expandable at 0.
pub fn unit_constant_poly(var: Var, max_degree: usize) -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(small_int(), 0..=max_degree).prop_map(move |mut c| {
        c.insert(0, rat(1, 1));
        UniPoly::new(var, c)
    })
}

pub fn bipoly(max_outer: usize, max_inner: usize) -> impl Strategy<Value = BiPoly> {
    prop::collection::vec(
        (0..=max_outer, 0..=max_inner, small_rational()),
        0..=(max_outer + 1) * (max_inner + 1),
    )
    .prop_map(|terms| BiPoly::from_terms(Var::X, Var::Y, terms))
}

pub fn nonzero_bipoly(max_outer: usize, max_inner: usize) -> impl Strategy<Value = BiPoly> {
    bipoly(max_outer, max_inner).prop_filter("nonzero", |p| !p.is_zero())
}

/// Constant term 1 in `(x, y)`.
pub fn unit_constant_bipoly(max_outer: usize, max_inner: usize) -> impl Strategy<Value = BiPoly> {
    prop::collection::vec((0..=max_outer, 0..=max_inner, small_int()), 0..=4).prop_map(|terms| {
        let terms = terms
            .into_iter()
            .filter(|(i, j, _)| i + j > 0)
            .chain([(0, 0, rat(1, 1))]);
        BiPoly::from_terms(Var::X, Var::Y, terms)
    })
}

/// A sequence spec of order 1..=max_order with small integer data.
pub fn sequence_spec(max_order: usize) -> impl Strategy<Value = SequenceSpec> {
    (1..=max_order)
        .prop_flat_map(|k| {
            (
                prop::collection::vec(small_int(), k),
                prop::collection::vec(small_int(), k),
            )
        })
        .prop_filter_map("valid spec", |(coeffs, initial)| {
            SequenceSpec::new(coeffs, initial).ok()
        })
}
