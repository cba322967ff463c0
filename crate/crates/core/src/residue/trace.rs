//! Sums of residues over all roots of a factor, as traces in
//! `Q(z)[t] / p(t, z)`.
//!
//! For a simple factor `p` of `N / (p * Q)`, the residue at a root `s` is
//! `N(s) / (p'(s) Q(s))`. Summed over all roots this is the trace of
//! multiplication by `r = N * (p' Q)^(-1) mod p`, which lives in `Q(z)`.

use num_traits::{One, Zero};

use crate::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::field;
use crate::poly::UniPoly;
use crate::ratfunc::UniRatFunc;
use crate::var::Var;

use super::hk::{HKTransformed, PoleClass};
use super::zfrac::ZFrac;

/// Coefficients in `t` of a `(t, z)` polynomial as elements of `Q(z)`.
pub(crate) fn to_qz(p: &BiPoly) -> Vec<ZFrac> {
    let mut v: Vec<ZFrac> = p.coeffs().iter().cloned().map(ZFrac::from_poly).collect();
    field::trim(&mut v);
    v
}

/// Trace of multiplication by `r` on the basis `1, t, ..., t^(d-1)` of
/// `Q(z)[t] / p`.
fn trace_mod(r: &[ZFrac], p: &[ZFrac]) -> ZFrac {
    let d = field::degree(p).expect("nonzero modulus");
    let mut cur = field::rem(r, p);
    let mut tr = ZFrac::zero();
    for j in 0..d {
        if let Some(c) = cur.get(j) {
            tr = tr + c.clone();
        }
        if j + 1 < d {
            // cur <- cur * t mod p
            cur.insert(0, ZFrac::zero());
            cur = field::rem(&cur, p);
        }
    }
    tr
}

/// Product of every denominator factor except `skip`, reduced mod `modulus`
/// when one is given.
fn cofactor(h: &HKTransformed, skip: usize, modulus: Option<&[ZFrac]>) -> Vec<ZFrac> {
    let mut q: Vec<ZFrac> = vec![ZFrac::one()];
    for (k, (f, m)) in h.denom_factors.iter().enumerate() {
        if k == skip {
            continue;
        }
        let fq = to_qz(f);
        for _ in 0..*m {
            q = field::mul(&q, &fq);
            if let Some(p) = modulus {
                q = field::rem(&q, p);
            }
        }
    }
    q
}

/// Residue at `t = 0` of `N / (t^k Q)`: the coefficient of `t^(k-1)` in the
/// power series `N / Q`.
fn residue_at_origin(h: &HKTransformed, pole: &PoleClass) -> Result<ZFrac> {
    let k = pole.multiplicity as usize;
    let q = cofactor(h, pole.index, None);
    let n = to_qz(&h.numerator);
    let q0 = q.first().cloned().unwrap_or_else(ZFrac::zero);
    if q0.is_zero() {
        return Err(Error::DegeneratePole(
            "t = 0 is shared with another denominator factor".into(),
        ));
    }
    let mut s: Vec<ZFrac> = Vec::with_capacity(k);
    for i in 0..k {
        let mut acc = n.get(i).cloned().unwrap_or_else(ZFrac::zero);
        for j in 1..=i {
            if let Some(qj) = q.get(j) {
                if !qj.is_zero() {
                    acc = acc - qj.clone() * s[i - j].clone();
                }
            }
        }
        s.push(acc / q0.clone());
    }
    Ok(s.pop().unwrap_or_else(ZFrac::zero))
}

fn is_t_monomial(p: &BiPoly) -> bool {
    p.degree_outer() == Some(1) && p.coeff(0).is_zero() && p.coeff(1).degree() == Some(0)
}

/// `a mod p` for `p` monic in `t`, coefficients in `Q[z]`.
fn rem_monic(a: &[UniPoly], p: &[UniPoly]) -> Vec<UniPoly> {
    let d = p.len() - 1;
    let mut r = a.to_vec();
    while r.len() > d {
        let lead = r.pop().expect("nonempty");
        if lead.is_zero() {
            continue;
        }
        let shift = r.len() - d;
        for (j, pj) in p[..d].iter().enumerate() {
            if !pj.is_zero() {
                r[shift + j] = &r[shift + j] - &(&lead * pj);
            }
        }
    }
    while r.last().is_some_and(UniPoly::is_zero) {
        r.pop();
    }
    r
}

fn mul_t(a: &[UniPoly], b: &[UniPoly]) -> Vec<UniPoly> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![UniPoly::zero(Var::Z); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] = &out[i + j] + &(x * y);
            }
        }
    }
    out
}

/// Fraction-free determinant over `Q[z]` (Bareiss elimination).
fn bareiss_det(mut m: Vec<Vec<UniPoly>>) -> UniPoly {
    let n = m.len();
    if n == 0 {
        return UniPoly::one(Var::Z);
    }
    let mut prev = UniPoly::one(Var::Z);
    let mut negate = false;
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    negate = !negate;
                }
                None => return UniPoly::zero(Var::Z),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -&det
    } else {
        det
    }
}

/// Residue sum for a factor whose leading `t`-coefficient is a nonzero
/// rational. Works in `Q[z]` throughout: with `a = p' Q mod p` and
/// `M` the matrix of multiplication by `a`, the element `r = N / a` has
/// coordinates `det(M_i) / det(M)` (Cramer), and its trace is
/// `sum_i r_i Tr(t^i)`. Only the final quotient is reduced.
fn trace_constant_lead(h: &HKTransformed, pole: &PoleClass) -> Result<ZFrac> {
    let lc = pole.factor.leading_coeff().coeff(0);
    let inv = lc.recip();
    let p: Vec<UniPoly> = pole.factor.coeffs().iter().map(|c| c.scale(&inv)).collect();
    let d = p.len() - 1;
    // derivative of the factor itself, not of its monic associate
    let dp: Vec<UniPoly> = pole
        .factor
        .coeffs()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c.scale(&crate::rational::int(i as i64)))
        .collect();
    let mut q = vec![UniPoly::one(Var::Z)];
    for (k, (f, m)) in h.denom_factors.iter().enumerate() {
        if k == pole.index {
            continue;
        }
        for _ in 0..*m {
            q = rem_monic(&mul_t(&q, f.coeffs()), &p);
        }
    }
    let a = rem_monic(&mul_t(&dp, &q), &p);
    let coord =
        |v: &[UniPoly], i: usize| v.get(i).cloned().unwrap_or_else(|| UniPoly::zero(Var::Z));
    let mut columns = Vec::with_capacity(d);
    let mut cur = a;
    for _ in 0..d {
        columns.push(cur.clone());
        let mut shifted = vec![UniPoly::zero(Var::Z)];
        shifted.extend(cur);
        cur = rem_monic(&shifted, &p);
    }
    let matrix = |replace: Option<(usize, &[UniPoly])>| -> Vec<Vec<UniPoly>> {
        (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| match replace {
                        Some((col, v)) if col == j => coord(v, i),
                        _ => coord(&columns[j], i),
                    })
                    .collect()
            })
            .collect()
    };
    let det = bareiss_det(matrix(None));
    if det.is_zero() {
        return Err(degeneracy(h, pole));
    }
    let n = rem_monic(h.numerator.coeffs(), &p);
    // power sums Tr(t^i) = sum_j [t^j] (t^(i+j) mod p)
    let mut powers = vec![vec![UniPoly::one(Var::Z)]];
    for _ in 1..2 * d {
        let mut next = vec![UniPoly::zero(Var::Z)];
        next.extend(powers.last().expect("nonempty").iter().cloned());
        powers.push(rem_monic(&next, &p));
    }
    let power_sum = |i: usize| {
        (0..d).fold(UniPoly::zero(Var::Z), |acc, j| {
            &acc + &coord(&powers[i + j], j)
        })
    };
    let mut num = UniPoly::zero(Var::Z);
    for i in 0..d {
        let di = bareiss_det(matrix(Some((i, &n))));
        if !di.is_zero() {
            num = &num + &(&di * &power_sum(i));
        }
    }
    Ok(ZFrac::new(num, det))
}

fn degeneracy(h: &HKTransformed, pole: &PoleClass) -> Error {
    let p = to_qz(&pole.factor);
    let dp = field::derivative(&p);
    if field::degree(&field::gcd(&p, &dp)) != Some(0) {
        Error::DegeneratePole(format!("factor {} is not squarefree in t", pole.factor))
    } else if field::degree(&field::gcd(&p, &cofactor(h, pole.index, Some(&p)))) != Some(0) {
        Error::DegeneratePole(format!(
            "factor {} shares roots with another denominator factor",
            pole.factor
        ))
    } else {
        Error::DegeneratePole(format!("p' * Q is not invertible modulo {}", pole.factor))
    }
}

/// Sum of the residues of `h` at all roots of the factor described by `pole`.
pub fn residue_trace_qz(h: &HKTransformed, pole: &PoleClass) -> Result<ZFrac> {
    if h.numerator.is_zero() || pole.degree_in_t == 0 {
        return Ok(ZFrac::zero());
    }
    if is_t_monomial(&pole.factor) {
        return residue_at_origin(h, pole);
    }
    if pole.multiplicity != 1 {
        return Err(Error::RepeatedPole(pole.multiplicity));
    }
    if pole.factor.leading_coeff().degree() == Some(0) {
        return trace_constant_lead(h, pole);
    }
    trace_general(h, pole)
}

/// Quotient-ring route for a leading coefficient that depends on `z`.
fn trace_general(h: &HKTransformed, pole: &PoleClass) -> Result<ZFrac> {
    let p = to_qz(&pole.factor);
    let dp = field::derivative(&p);
    if field::degree(&field::gcd(&p, &dp)) != Some(0) {
        return Err(Error::DegeneratePole(format!(
            "factor {} is not squarefree in t",
            pole.factor
        )));
    }
    let q = cofactor(h, pole.index, Some(&p));
    if field::degree(&field::gcd(&p, &q)) != Some(0) {
        return Err(Error::DegeneratePole(format!(
            "factor {} shares roots with another denominator factor",
            pole.factor
        )));
    }
    let inv = field::inverse_mod(&field::mul_mod(&dp, &q, &p), &p).ok_or_else(|| {
        Error::DegeneratePole(format!("p' * Q is not invertible modulo {}", pole.factor))
    })?;
    let r = field::mul_mod(&to_qz(&h.numerator), &inv, &p);
    Ok(trace_mod(&r, &p))
}

/// [`residue_trace_qz`] as a factored rational function of `z`.
pub fn residue_trace(h: &HKTransformed, pole: &PoleClass) -> Result<UniRatFunc> {
    Ok(residue_trace_qz(h, pole)?.to_ratfunc())
}
