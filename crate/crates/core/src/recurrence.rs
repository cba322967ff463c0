//! Minimal linear recurrences over the rationals (Berlekamp-Massey) and the
//! rational generating functions they determine.

use num_traits::{One, Zero};

use crate::error::Result;
use crate::poly::UniPoly;
use crate::ratfunc::{FactoredRatFunc, UniRatFunc};
use crate::rational::Rational;
use crate::series::series_of_rational;
use crate::var::Var;

/// `a_n = sum_(i=1..r) coeffs[i-1] * a_(n-i)` for `n >= r`, with
/// `initial = a_0 .. a_(r-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearRecurrence {
    pub coeffs: Vec<Rational>,
    pub initial: Vec<Rational>,
}

impl LinearRecurrence {
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// Characteristic denominator `1 - sum c_i z^i`.
    pub fn denominator(&self, var: Var) -> UniPoly {
        let mut q = vec![Rational::one()];
        q.extend(self.coeffs.iter().map(|c| -c.clone()));
        UniPoly::new(var, q)
    }

    pub fn generate(&self, n: usize) -> Vec<Rational> {
        let r = self.order();
        let mut a: Vec<Rational> = self.initial.iter().take(n).cloned().collect();
        while a.len() < n {
            let len = a.len();
            let next = (0..r).fold(Rational::zero(), |acc, i| {
                acc + &self.coeffs[i] * &a[len - 1 - i]
            });
            a.push(next);
        }
        a
    }
}

/// Berlekamp-Massey over the rationals. Returns the connection polynomial
/// `C = 1 + c_1 z + ...` and the linear complexity `L`, so that
/// `sum_(j=0..L) C_j s_(i-j) = 0` for every `L <= i < len`.
fn berlekamp_massey(s: &[Rational]) -> (Vec<Rational>, usize) {
    let mut c: Vec<Rational> = vec![Rational::one()];
    let mut b: Vec<Rational> = vec![Rational::one()];
    let mut l = 0usize;
    let mut m = 1usize;
    let mut last_disc = Rational::one();
    for i in 0..s.len() {
        let mut d = s[i].clone();
        for j in 1..=l.min(c.len() - 1) {
            if !c[j].is_zero() {
                d += &c[j] * &s[i - j];
            }
        }
        if d.is_zero() {
            m += 1;
            continue;
        }
        let factor = &d / &last_disc;
        let prev = c.clone();
        if c.len() < b.len() + m {
            c.resize(b.len() + m, Rational::zero());
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                c[j + m] -= &factor * bj;
            }
        }
        if 2 * l <= i {
            l = i + 1 - l;
            b = prev;
            last_disc = d;
            m = 1;
        } else {
            m += 1;
        }
    }
    c.resize(l + 1, Rational::zero());
    (c, l)
}

/// The minimal-order recurrence consistent with every supplied term, or
/// `None` when fewer than 4 terms are given or the order exceeds
/// `len / 2` (not enough evidence to trust it).
pub fn find_min_recurrence(terms: &[Rational]) -> Option<LinearRecurrence> {
    if terms.len() < 4 {
        return None;
    }
    let (c, l) = berlekamp_massey(terms);
    if l > terms.len() / 2 {
        return None;
    }
    Some(LinearRecurrence {
        coeffs: c[1..].iter().map(|x| -x.clone()).collect(),
        initial: terms[..l].to_vec(),
    })
}

/// Evidence margin `len - 2r` for a recurrence of order `r` found from `len`
/// terms.
pub fn confidence(rec: &LinearRecurrence, len: usize) -> i64 {
    len as i64 - 2 * rec.order() as i64
}

/// `P(z) / (1 - sum c_i z^i)` with `deg P < r` fixed by the initial terms.
pub fn recurrence_to_gf(rec: &LinearRecurrence) -> UniRatFunc {
    let var = Var::Z;
    let q = rec.denominator(var);
    let init = UniPoly::new(var, rec.initial.clone());
    let p = (&q * &init).truncate(rec.order());
    if p.is_zero() {
        return FactoredRatFunc::zero(var);
    }
    FactoredRatFunc::from_fraction(p, q).expect("constant term 1")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Agreement {
    pub agrees: bool,
    pub first_mismatch: Option<usize>,
}

/// Compares the Taylor coefficients of `f` with `terms`, exactly.
pub fn certify_agreement(f: &UniRatFunc, terms: &[Rational]) -> Result<Agreement> {
    let s = series_of_rational(f, terms.len())?;
    let first_mismatch = s.coeffs.iter().zip(terms).position(|(a, b)| a != b);
    Ok(Agreement {
        agrees: first_mismatch.is_none(),
        first_mismatch,
    })
}
