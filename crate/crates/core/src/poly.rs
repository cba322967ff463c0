//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field;
use crate::rational::Rational;
use crate::var::Var;

/// Which ring operation `poly_arith` performs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Dense polynomial in one named variable; `coeffs[i]` is the coefficient of
/// `var^i`. The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UniPoly {
    var: Var,
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(var: Var, mut coeffs: Vec<Rational>) -> Self {
        field::trim(&mut coeffs);
        UniPoly { var, coeffs }
    }

    pub fn from_ints(var: Var, coeffs: &[i64]) -> Self {
        Self::new(
            var,
            coeffs.iter().map(|&c| crate::rational::int(c)).collect(),
        )
    }

    pub fn zero(var: Var) -> Self {
        UniPoly {
            var,
            coeffs: Vec::new(),
        }
    }

    pub fn one(var: Var) -> Self {
        Self::constant(var, Rational::one())
    }

    pub fn constant(var: Var, c: Rational) -> Self {
        Self::new(var, vec![c])
    }

    /// `c * var^deg`
    pub fn monomial(var: Var, c: Rational, deg: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); deg];
        coeffs.push(c);
        Self::new(var, coeffs)
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `var^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    /// Index of the lowest nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        field::eval(&self.coeffs, x)
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.var, field::derivative(&self.coeffs))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.var, field::scale(&self.coeffs, c))
    }

    /// Drops all terms of degree `>= n`.
    pub fn truncate(&self, n: usize) -> Self {
        Self::new(self.var, self.coeffs.iter().take(n).cloned().collect())
    }

    /// Divides by `var^k`; the low `k` coefficients are discarded.
    pub fn shift_down(&self, k: usize) -> Self {
        Self::new(self.var, self.coeffs.iter().skip(k).cloned().collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.var);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn monic(&self) -> Self {
        Self::new(self.var, field::monic(&self.coeffs))
    }

    fn check_var(&self, other: &Self) -> Result<()> {
        if self.var == other.var {
            Ok(())
        } else {
            Err(Error::VariableMismatch(
                self.var.to_string(),
                other.var.to_string(),
            ))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        Ok(Self::new(self.var, field::add(&self.coeffs, &other.coeffs)))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        Ok(Self::new(self.var, field::sub(&self.coeffs, &other.coeffs)))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        Ok(Self::new(self.var, field::mul(&self.coeffs, &other.coeffs)))
    }

    /// `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.check_var(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (q, r) = field::divrem(&self.coeffs, &divisor.coeffs);
        Ok((Self::new(self.var, q), Self::new(self.var, r)))
    }

    /// Monic gcd over the rationals. `gcd(p, 0)` is `p` made monic.
    ///
    /// Runs the remainder sequence on primitive integer polynomials, taking
    /// the content out after every pseudo-remainder, which keeps the
    /// coefficients far smaller than a plain monic Euclid over `Q`.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        let mut a = primitive_part(&self.coeffs);
        let mut b = primitive_part(&other.coeffs);
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = primitive_part_int(pseudo_rem(&a, &b));
            a = std::mem::replace(&mut b, r);
        }
        let coeffs: Vec<Rational> = a.into_iter().map(Rational::from_integer).collect();
        Ok(Self::new(self.var, field::monic(&coeffs)))
    }

    /// Exact quotient; errors if `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.divrem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotCoprime)
        }
    }
}

/// Integer polynomial with the same roots and coprime coefficients.
fn primitive_part(coeffs: &[Rational]) -> Vec<BigInt> {
    let lcm = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    primitive_part_int(ints)
}

fn primitive_part_int(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    let content = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() || content.is_one() {
        return v;
    }
    v.iter().map(|c| c / &content).collect()
}

/// Remainder of `lc(b)^k * a` by `b` over the integers.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db {
        let lr = r.pop().expect("nonempty");
        let shift = r.len() - db;
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (j, bj) in b[..db].iter().enumerate() {
            r[shift + j] -= &lr * bj;
        }
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
    }
    r
}

/// Ring operation with variable checking.
pub fn poly_arith<P: crate::ratfunc::Polynomial>(a: &P, b: &P, op: ArithOp) -> Result<P> {
    match op {
        ArithOp::Add => a.checked_add(b),
        ArithOp::Sub => a.checked_sub(b),
        ArithOp::Mul => a.checked_mul(b),
    }
}

// Operator forms panic on a variable mismatch; use the checked methods when
// the variables are not known to agree.
impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        self.checked_add(rhs).expect("UniPoly add")
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self.checked_sub(rhs).expect("UniPoly sub")
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        self.checked_mul(rhs).expect("UniPoly mul")
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.var, field::neg(&self.coeffs))
    }
}

/// Writes `c * var^e` in the text format, with sign handling left to the
/// caller. `first` controls whether a leading `+` is emitted.
pub(crate) fn write_term(out: &mut String, coeff: &Rational, monomial: &str, first: bool) {
    let negative = crate::rational::is_negative(coeff);
    let abs = if negative {
        -coeff.clone()
    } else {
        coeff.clone()
    };
    if first {
        if negative {
            out.push('-');
        }
    } else {
        out.push_str(if negative { " - " } else { " + " });
    }
    let c = crate::rational::format_rational(&abs);
    if monomial.is_empty() {
        out.push_str(&c);
    } else if abs.is_one() {
        out.push_str(monomial);
    } else {
        out.push_str(&c);
        out.push('*');
        out.push_str(monomial);
    }
}

pub(crate) fn monomial_text(var: Var, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            write_term(&mut out, c, &monomial_text(self.var, i), first);
            first = false;
        }
        f.write_str(&out)
    }
}

impl std::str::FromStr for UniPoly {
    type Err = Error;

    /// Parses a polynomial in the text format, e.g. `1 - 2*z - 4*z^2`. A
    /// constant with no variable is placed in `z`.
    fn from_str(s: &str) -> Result<Self> {
        crate::parse::parse_univariate(s)?.into_polynomial()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn z(cs: &[i64]) -> UniPoly {
        UniPoly::from_ints(Var::Z, cs)
    }

    #[test]
    fn arithmetic_examples() {
        // (1 - z - z^2) + z^2 = 1 - z
        assert_eq!(&z(&[1, -1, -1]) + &z(&[0, 0, 1]), z(&[1, -1]));
        // (1 - z)(1 - 2z - 4z^2) = 1 - 3z - 2z^2 + 4z^3
        assert_eq!(&z(&[1, -1]) * &z(&[1, -2, -4]), z(&[1, -3, -2, 4]));
        assert!((&z(&[3, 4]) * &UniPoly::zero(Var::Z)).is_zero());
    }

    #[test]
    fn variable_mismatch_is_an_error() {
        let a = z(&[1, 1]);
        let b = UniPoly::from_ints(Var::Y, &[1, 1]);
        assert!(matches!(
            poly_arith(&a, &b, ArithOp::Add),
            Err(Error::VariableMismatch(..))
        ));
    }

    #[test]
    fn divrem_examples() {
        let t = |cs: &[i64]| UniPoly::from_ints(Var::T, cs);
        let (q, r) = t(&[-1, -1, 1]).divrem(&t(&[0, 1])).unwrap();
        assert_eq!((q, r), (t(&[-1, 1]), t(&[-1])));

        let a = t(&[1, -1, -1, -1]);
        let b = t(&[1, -1]);
        let (q, r) = a.divrem(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        assert_eq!(q, t(&[3, 2, 1]));
        assert_eq!(r, t(&[-2]));

        let (q, r) = a.divrem(&a).unwrap();
        assert_eq!(q, t(&[1]));
        assert!(r.is_zero());

        assert_eq!(a.divrem(&UniPoly::zero(Var::T)), Err(Error::DivisionByZero));
    }

    #[test]
    fn gcd_examples() {
        let a = z(&[1, -2, -4, -8]);
        let b = z(&[1, -2, 0, 2]);
        assert_eq!(a.gcd(&b).unwrap(), z(&[1]));
        let p = z(&[1, -1, -1]);
        assert_eq!(p.gcd(&UniPoly::zero(Var::Z)).unwrap(), p.monic());
        assert_eq!(p.pow(2).gcd(&p).unwrap(), p.monic());
    }

    #[test]
    fn display_format() {
        assert_eq!(z(&[1, -2, -4]).to_string(), "1 - 2*z - 4*z^2");
        assert_eq!(z(&[0, -1]).to_string(), "-z");
        let p = UniPoly::new(Var::X, vec![rat(1, 2), int(0), rat(-3, 7)]);
        assert_eq!(p.to_string(), "1/2 - 3/7*x^2");
        assert_eq!(UniPoly::zero(Var::Z).to_string(), "0");
    }

    #[test]
    fn parse_round_trip() {
        let p = UniPoly::new(Var::Z, vec![rat(1, 2), int(-2), int(0), rat(5, 3)]);
        let q: UniPoly = p.to_string().parse().unwrap();
        assert_eq!(p, q);
        assert!("1/(1 - z)".parse::<UniPoly>().is_err());
    }
}
