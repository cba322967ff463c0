//! A minimal field abstraction and dense polynomial routines over it.
//!
//! Polynomials here are plain coefficient vectors, index = degree, with
//! trailing zeros trimmed. `UniPoly` wraps these for rationals; the residue
//! code reuses them with rational functions of `z` as coefficients.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::rational::Rational;

pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    fn from_i64(n: i64) -> Self;
}

impl Field for Rational {
    fn from_i64(n: i64) -> Self {
        crate::rational::int(n)
    }
}

pub fn trim<F: Field>(v: &mut Vec<F>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

pub fn degree<F: Field>(v: &[F]) -> Option<usize> {
    v.iter().rposition(|c| !c.is_zero())
}

pub fn add<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    let n = a.len().max(b.len());
    let mut out: Vec<F> = (0..n)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x.clone() + y.clone(),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => F::zero(),
        })
        .collect();
    trim(&mut out);
    out
}

pub fn neg<F: Field>(a: &[F]) -> Vec<F> {
    a.iter().map(|c| -c.clone()).collect()
}

pub fn sub<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    add(a, &neg(b))
}

pub fn scale<F: Field>(a: &[F], c: &F) -> Vec<F> {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| x.clone() * c.clone()).collect()
}

pub fn mul<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![F::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            let prod = x.clone() * y.clone();
            out[i + j] = std::mem::replace(&mut out[i + j], F::zero()) + prod;
        }
    }
    trim(&mut out);
    out
}

pub fn derivative<F: Field>(a: &[F]) -> Vec<F> {
    let mut out: Vec<F> = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c.clone() * F::from_i64(i as i64))
        .collect();
    trim(&mut out);
    out
}

/// Euclidean division. Panics if `b` is zero; callers check first.
pub fn divrem<F: Field>(a: &[F], b: &[F]) -> (Vec<F>, Vec<F>) {
    let db = degree(b).expect("division by zero polynomial");
    let lead_inv = F::one() / b[db].clone();
    let mut rem: Vec<F> = a.to_vec();
    trim(&mut rem);
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![F::zero(); rem.len() - db];
    while let Some(dr) = degree(&rem) {
        if dr < db {
            break;
        }
        let c = rem[dr].clone() * lead_inv.clone();
        let shift = dr - db;
        for (j, bj) in b.iter().enumerate().take(db + 1) {
            if !bj.is_zero() {
                let t = c.clone() * bj.clone();
                rem[shift + j] = std::mem::replace(&mut rem[shift + j], F::zero()) - t;
            }
        }
        // exact zero regardless of any rounding in exotic fields
        rem[dr] = F::zero();
        quot[shift] = c;
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

pub fn rem<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    divrem(a, b).1
}

pub fn monic<F: Field>(a: &[F]) -> Vec<F> {
    match degree(a) {
        None => Vec::new(),
        Some(d) => {
            let inv = F::one() / a[d].clone();
            let mut out = scale(&a[..=d], &inv);
            trim(&mut out);
            out
        }
    }
}

/// Monic greatest common divisor; `gcd(0, 0) = 0`.
pub fn gcd<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    let mut r0 = monic(a);
    let mut r1 = monic(b);
    while !r1.is_empty() {
        let r = monic(&rem(&r0, &r1));
        r0 = std::mem::replace(&mut r1, r);
    }
    r0
}

/// Returns `(g, s, t)` with `s*a + t*b = g` and `g` the monic gcd.
pub fn xgcd<F: Field>(a: &[F], b: &[F]) -> (Vec<F>, Vec<F>, Vec<F>) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    trim(&mut r0);
    trim(&mut r1);
    let (mut s0, mut s1) = (vec![F::one()], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![F::one()]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1);
        let s = sub(&s0, &mul(&q, &s1));
        let t = sub(&t0, &mul(&q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    match degree(&r0) {
        None => (r0, s0, t0),
        Some(d) => {
            let inv = F::one() / r0[d].clone();
            (scale(&r0, &inv), scale(&s0, &inv), scale(&t0, &inv))
        }
    }
}

/// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
pub fn inverse_mod<F: Field>(a: &[F], m: &[F]) -> Option<Vec<F>> {
    let (g, s, _) = xgcd(&rem(a, m), m);
    if g.len() == 1 {
        Some(rem(&s, m))
    } else {
        None
    }
}

pub fn mul_mod<F: Field>(a: &[F], b: &[F], m: &[F]) -> Vec<F> {
    rem(&mul(a, b), m)
}

pub fn eval<F: Field>(a: &[F], x: &F) -> F {
    a.iter()
        .rev()
        .fold(F::zero(), |acc, c| acc * x.clone() + c.clone())
}
