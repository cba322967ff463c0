//! Bivariate polynomials stored as polynomials in an outer variable whose
//! coefficients are polynomials in an inner variable.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{monomial_text, write_term, UniPoly};
use crate::rational::Rational;
use crate::var::Var;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BiPoly {
    outer: Var,
    inner: Var,
    coeffs: Vec<UniPoly>,
}

impl BiPoly {
    /// Builds from outer-indexed coefficients. Panics if a coefficient is not
    /// in `inner`.
    pub fn new(outer: Var, inner: Var, mut coeffs: Vec<UniPoly>) -> Self {
        assert!(outer != inner, "outer and inner variables must differ");
        assert!(
            coeffs.iter().all(|c| c.var() == inner),
            "coefficient variable must be {inner}"
        );
        while coeffs.last().is_some_and(UniPoly::is_zero) {
            coeffs.pop();
        }
        BiPoly {
            outer,
            inner,
            coeffs,
        }
    }

    pub fn zero(outer: Var, inner: Var) -> Self {
        Self::new(outer, inner, Vec::new())
    }

    pub fn constant(outer: Var, inner: Var, c: Rational) -> Self {
        Self::new(outer, inner, vec![UniPoly::constant(inner, c)])
    }

    /// Lifts a polynomial in the outer variable.
    pub fn from_outer(p: &UniPoly, inner: Var) -> Self {
        let coeffs = p
            .coeffs()
            .iter()
            .map(|c| UniPoly::constant(inner, c.clone()))
            .collect();
        Self::new(p.var(), inner, coeffs)
    }

    /// Lifts a polynomial in the inner variable.
    pub fn from_inner(outer: Var, p: &UniPoly) -> Self {
        Self::new(outer, p.var(), vec![p.clone()])
    }

    /// Sum of `c * outer^i * inner^j` over the given terms.
    pub fn from_terms<I>(outer: Var, inner: Var, terms: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, Rational)>,
    {
        let mut grid: Vec<Vec<Rational>> = Vec::new();
        for (i, j, c) in terms {
            if grid.len() <= i {
                grid.resize(i + 1, Vec::new());
            }
            let row = &mut grid[i];
            if row.len() <= j {
                row.resize(j + 1, Rational::zero());
            }
            row[j] += c;
        }
        let coeffs = grid
            .into_iter()
            .map(|row| UniPoly::new(inner, row))
            .collect();
        Self::new(outer, inner, coeffs)
    }

    pub fn outer(&self) -> Var {
        self.outer
    }

    pub fn inner(&self) -> Var {
        self.inner
    }

    pub fn coeffs(&self) -> &[UniPoly] {
        &self.coeffs
    }

    /// Coefficient of `outer^i` as a polynomial in the inner variable.
    pub fn coeff(&self, i: usize) -> UniPoly {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| UniPoly::zero(self.inner))
    }

    /// Nonzero terms as `(outer exponent, inner exponent, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &Rational)> + '_ {
        self.coeffs.iter().enumerate().flat_map(|(i, p)| {
            p.coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(j, c)| (i, j, c))
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree_outer(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn degree_inner(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(UniPoly::degree).max()
    }

    /// Leading coefficient with respect to the outer variable.
    pub fn leading_coeff(&self) -> UniPoly {
        self.coeffs
            .last()
            .cloned()
            .unwrap_or_else(|| UniPoly::zero(self.inner))
    }

    pub fn eval(&self, outer_val: &Rational, inner_val: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| {
            acc * outer_val + c.eval(inner_val)
        })
    }

    /// Substitutes a value for the inner variable.
    pub fn eval_inner(&self, inner_val: &Rational) -> UniPoly {
        UniPoly::new(
            self.outer,
            self.coeffs.iter().map(|c| c.eval(inner_val)).collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(
            self.outer,
            self.inner,
            self.coeffs.iter().map(|p| p.scale(c)).collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(self.outer, self.inner, crate::rational::int(1));
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.outer == other.outer && self.inner == other.inner {
            Ok(())
        } else {
            Err(Error::VariableMismatch(
                format!("({}, {})", self.outer, self.inner),
                format!("({}, {})", other.outer, other.inner),
            ))
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&UniPoly, &UniPoly) -> UniPoly) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| f(&self.coeff(i), &other.coeff(i))).collect();
        Self::new(self.outer, self.inner, coeffs)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.outer, self.inner));
        }
        let mut out = vec![UniPoly::zero(self.inner); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Ok(Self::new(self.outer, self.inner, out))
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        self.checked_add(rhs).expect("BiPoly add")
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        self.checked_sub(rhs).expect("BiPoly sub")
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        self.checked_mul(rhs).expect("BiPoly mul")
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly::new(
            self.outer,
            self.inner,
            self.coeffs.iter().map(|c| -c).collect(),
        )
    }
}

impl fmt::Display for BiPoly {
    /// Terms ordered by total degree, then by outer degree descending, so
    /// `1 - 2*x + x^2 - x*y` reads the way it is usually written.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut terms: Vec<(usize, usize, &Rational)> = self.terms().collect();
        terms.sort_by_key(|&(i, j, _)| (i + j, std::cmp::Reverse(i)));
        let mut out = String::new();
        for (k, (i, j, c)) in terms.into_iter().enumerate() {
            let mono = match (monomial_text(self.outer, i), monomial_text(self.inner, j)) {
                (a, b) if a.is_empty() => b,
                (a, b) if b.is_empty() => a,
                (a, b) => format!("{a}*{b}"),
            };
            write_term(&mut out, c, &mono, k == 0);
        }
        f.write_str(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn xy(terms: &[(usize, usize, i64)]) -> BiPoly {
        BiPoly::from_terms(
            Var::X,
            Var::Y,
            terms.iter().map(|&(i, j, c)| (i, j, int(c))),
        )
    }

    #[test]
    fn multiply_and_evaluate() {
        // (1 - x)(1 - y) = 1 - x - y + xy
        let a = xy(&[(0, 0, 1), (1, 0, -1)]);
        let b = xy(&[(0, 0, 1), (0, 1, -1)]);
        let p = &a * &b;
        assert_eq!(p, xy(&[(0, 0, 1), (1, 0, -1), (0, 1, -1), (1, 1, 1)]));
        assert_eq!(p.eval(&int(3), &int(5)), int(8));
        assert_eq!(p.degree_outer(), Some(1));
        assert_eq!(p.degree_inner(), Some(1));
    }

    #[test]
    fn display_orders_terms() {
        let p = xy(&[
            (0, 0, 1),
            (1, 0, -2),
            (2, 0, 1),
            (1, 1, -1),
            (2, 1, -1),
            (2, 2, 1),
        ]);
        assert_eq!(p.to_string(), "1 - 2*x + x^2 - x*y - x^2*y + x^2*y^2");
    }

    #[test]
    fn mismatched_variables() {
        let a = xy(&[(0, 0, 1)]);
        let b = BiPoly::constant(Var::T, Var::Z, int(1));
        assert!(a.checked_add(&b).is_err());
    }
}
