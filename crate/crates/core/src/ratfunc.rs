//! Rational functions kept as products of polynomial factors.
//!
//! Factors are never multiplied out unless a caller asks for
//! [`FactoredRatFunc::expand_to_single_fraction`]. That keeps every
//! construction in the crate free of multivariate factorization: a product
//! stays a list, and common factors cancel only when they are literally equal
//! after normalization.

use std::fmt;

use num_traits::{One, Zero};

use crate::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::rational::{self, Rational};
use crate::var::Var;

/// The operations `FactoredRatFunc` needs from its factor type.
pub trait Polynomial: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    type Vars: Copy + PartialEq + fmt::Debug + Send + Sync;
    type Point: ?Sized;

    fn vars(&self) -> Self::Vars;
    fn constant_poly(vars: Self::Vars, c: Rational) -> Self;
    /// The polynomial for a single variable, if it belongs to `vars`.
    fn variable(vars: Self::Vars, v: Var) -> Option<Self>;
    fn is_zero(&self) -> bool;
    /// `Some(c)` iff the polynomial is the constant `c` (including zero).
    fn as_constant(&self) -> Option<Rational>;
    /// Constant term if nonzero, else the first nonzero coefficient in
    /// storage order. Factors are scaled so this becomes 1.
    fn normalizing_coeff(&self) -> Rational;
    fn checked_add(&self, other: &Self) -> Result<Self>;
    fn checked_sub(&self, other: &Self) -> Result<Self>;
    fn checked_mul(&self, other: &Self) -> Result<Self>;
    fn scale(&self, c: &Rational) -> Self;
    fn eval_at(&self, at: &Self::Point) -> Rational;

    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant_poly(self.vars(), Rational::one());
        for _ in 0..e {
            acc = acc.checked_mul(self).expect("same variables");
        }
        acc
    }
}

impl Polynomial for UniPoly {
    type Vars = Var;
    type Point = Rational;

    fn vars(&self) -> Var {
        self.var()
    }

    fn constant_poly(vars: Var, c: Rational) -> Self {
        UniPoly::constant(vars, c)
    }

    fn variable(vars: Var, v: Var) -> Option<Self> {
        (vars == v).then(|| UniPoly::monomial(v, Rational::one(), 1))
    }

    fn is_zero(&self) -> bool {
        UniPoly::is_zero(self)
    }

    fn as_constant(&self) -> Option<Rational> {
        match self.degree() {
            None => Some(Rational::zero()),
            Some(0) => Some(self.coeff(0)),
            _ => None,
        }
    }

    fn normalizing_coeff(&self) -> Rational {
        self.coeffs()
            .iter()
            .find(|c| !c.is_zero())
            .cloned()
            .unwrap_or_else(Rational::one)
    }

    fn checked_add(&self, other: &Self) -> Result<Self> {
        UniPoly::checked_add(self, other)
    }

    fn checked_sub(&self, other: &Self) -> Result<Self> {
        UniPoly::checked_sub(self, other)
    }

    fn checked_mul(&self, other: &Self) -> Result<Self> {
        UniPoly::checked_mul(self, other)
    }

    fn scale(&self, c: &Rational) -> Self {
        UniPoly::scale(self, c)
    }

    fn eval_at(&self, at: &Rational) -> Rational {
        self.eval(at)
    }

    fn pow(&self, e: u32) -> Self {
        UniPoly::pow(self, e)
    }
}

impl Polynomial for BiPoly {
    /// `(outer, inner)`
    type Vars = (Var, Var);
    /// `[outer value, inner value]`
    type Point = [Rational; 2];

    fn vars(&self) -> (Var, Var) {
        (self.outer(), self.inner())
    }

    fn constant_poly((outer, inner): (Var, Var), c: Rational) -> Self {
        BiPoly::constant(outer, inner, c)
    }

    fn variable((outer, inner): (Var, Var), v: Var) -> Option<Self> {
        if v == outer {
            Some(BiPoly::from_terms(outer, inner, [(1, 0, Rational::one())]))
        } else if v == inner {
            Some(BiPoly::from_terms(outer, inner, [(0, 1, Rational::one())]))
        } else {
            None
        }
    }

    fn is_zero(&self) -> bool {
        BiPoly::is_zero(self)
    }

    fn as_constant(&self) -> Option<Rational> {
        match self.degree_outer() {
            None => Some(Rational::zero()),
            Some(0) => self.coeff(0).as_constant(),
            _ => None,
        }
    }

    fn normalizing_coeff(&self) -> Rational {
        self.terms()
            .next()
            .map(|(_, _, c)| c.clone())
            .unwrap_or_else(Rational::one)
    }

    fn checked_add(&self, other: &Self) -> Result<Self> {
        BiPoly::checked_add(self, other)
    }

    fn checked_sub(&self, other: &Self) -> Result<Self> {
        BiPoly::checked_sub(self, other)
    }

    fn checked_mul(&self, other: &Self) -> Result<Self> {
        BiPoly::checked_mul(self, other)
    }

    fn scale(&self, c: &Rational) -> Self {
        BiPoly::scale(self, c)
    }

    fn eval_at(&self, at: &[Rational; 2]) -> Rational {
        self.eval(&at[0], &at[1])
    }

    fn pow(&self, e: u32) -> Self {
        BiPoly::pow(self, e)
    }
}

/// `constant * prod(numer_i ^ m_i) / prod(denom_j ^ n_j)`.
///
/// Canonical form: no constant factors, every factor scaled so its
/// normalizing coefficient is 1, equal factors merged, and factors common to
/// numerator and denominator cancelled. The zero function has constant 0 and
/// no factors.
#[derive(Clone, Debug, PartialEq)]
pub struct FactoredRatFunc<P: Polynomial> {
    vars: P::Vars,
    constant: Rational,
    numer: Vec<(P, u32)>,
    denom: Vec<(P, u32)>,
}

pub type UniRatFunc = FactoredRatFunc<UniPoly>;
pub type BiRatFunc = FactoredRatFunc<BiPoly>;

impl<P: Polynomial> FactoredRatFunc<P> {
    pub fn new(
        vars: P::Vars,
        constant: Rational,
        numer: Vec<(P, u32)>,
        denom: Vec<(P, u32)>,
    ) -> Result<Self> {
        for (p, _) in numer.iter().chain(&denom) {
            if p.vars() != vars {
                return Err(Error::VariableMismatch(
                    format!("{:?}", vars),
                    format!("{:?}", p.vars()),
                ));
            }
        }
        if denom.iter().any(|(p, m)| *m > 0 && p.is_zero()) {
            return Err(Error::ZeroDenominator);
        }
        let mut f = FactoredRatFunc {
            vars,
            constant,
            numer,
            denom,
        };
        f.canonicalize();
        Ok(f)
    }

    pub fn zero(vars: P::Vars) -> Self {
        Self::constant(vars, Rational::zero())
    }

    pub fn one(vars: P::Vars) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn constant(vars: P::Vars, c: Rational) -> Self {
        FactoredRatFunc {
            vars,
            constant: c,
            numer: Vec::new(),
            denom: Vec::new(),
        }
    }

    pub fn from_poly(p: P) -> Self {
        let vars = p.vars();
        Self::new(vars, Rational::one(), vec![(p, 1)], Vec::new()).expect("numerator only")
    }

    pub fn from_fraction(numer: P, denom: P) -> Result<Self> {
        let vars = numer.vars();
        Self::new(vars, Rational::one(), vec![(numer, 1)], vec![(denom, 1)])
    }

    pub fn vars(&self) -> P::Vars {
        self.vars
    }

    pub fn constant_factor(&self) -> &Rational {
        &self.constant
    }

    pub fn numer_factors(&self) -> &[(P, u32)] {
        &self.numer
    }

    pub fn denom_factors(&self) -> &[(P, u32)] {
        &self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero()
    }

    fn canonicalize(&mut self) {
        if self.numer.iter().any(|(p, m)| *m > 0 && p.is_zero()) {
            self.constant = Rational::zero();
        }
        if self.constant.is_zero() {
            self.numer.clear();
            self.denom.clear();
            return;
        }
        let mut constant = std::mem::take(&mut self.constant);
        let numer = normalize_list(std::mem::take(&mut self.numer), &mut constant, 1);
        let denom = normalize_list(std::mem::take(&mut self.denom), &mut constant, -1);
        let (numer, denom) = cancel(numer, denom);
        self.constant = constant;
        self.numer = numer;
        self.denom = denom;
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = self.clone();
        out.constant *= c;
        out.canonicalize();
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let mut numer = self.numer.clone();
        numer.extend(other.numer.iter().cloned());
        let mut denom = self.denom.clone();
        denom.extend(other.denom.iter().cloned());
        Self::new(self.vars, &self.constant * &other.constant, numer, denom)
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Self::new(
            self.vars,
            self.constant.recip(),
            self.denom.clone(),
            self.numer.clone(),
        )
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.mul(&other.recip()?)
    }

    pub fn powi(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        let k = e.unsigned_abs();
        let lift = |v: &[(P, u32)]| v.iter().map(|(p, m)| (p.clone(), m * k)).collect();
        Self::new(
            self.vars,
            rational::pow(&base.constant, k as i64),
            lift(&base.numer),
            lift(&base.denom),
        )
    }

    /// Sum; the result's numerator is a single expanded polynomial over the
    /// concatenated (or shared, when identical) denominator factors.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let na = self.expand_numer();
        let nb = other.expand_numer();
        let (numer, denom) = if self.denom == other.denom {
            (na.checked_add(&nb)?, self.denom.clone())
        } else {
            let da = expand_factors(self.vars, &self.denom);
            let db = expand_factors(self.vars, &other.denom);
            let numer = na.checked_mul(&db)?.checked_add(&nb.checked_mul(&da)?)?;
            let mut denom = self.denom.clone();
            denom.extend(other.denom.iter().cloned());
            (numer, denom)
        };
        Self::new(self.vars, Rational::one(), vec![(numer, 1)], denom)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// Numerator including the constant, multiplied out.
    fn expand_numer(&self) -> P {
        expand_factors(self.vars, &self.numer).scale(&self.constant)
    }

    /// Multiplies every factor out. No cancellation is attempted.
    pub fn expand_to_single_fraction(&self) -> (P, P) {
        (self.expand_numer(), expand_factors(self.vars, &self.denom))
    }

    pub fn eval(&self, at: &P::Point) -> Result<Rational> {
        let mut value = self.constant.clone();
        for (p, m) in &self.denom {
            let v = p.eval_at(at);
            if v.is_zero() {
                return Err(Error::PoleAtPoint);
            }
            value /= rational::pow(&v, *m as i64);
        }
        for (p, m) in &self.numer {
            value *= rational::pow(&p.eval_at(at), *m as i64);
        }
        Ok(value)
    }

    /// Equality as rational functions, decided by cross-multiplying the
    /// expanded forms. This is a complete proof, not a sampled test.
    pub fn identical_to(&self, other: &Self) -> Result<bool> {
        let (n1, d1) = self.expand_to_single_fraction();
        let (n2, d2) = other.expand_to_single_fraction();
        Ok(n1.checked_mul(&d2)? == n2.checked_mul(&d1)?)
    }

    /// The numerator as a polynomial, if the function has no denominator.
    pub fn into_polynomial(self) -> Result<P> {
        if self.denom.is_empty() {
            Ok(self.expand_numer())
        } else {
            Err(Error::NotPolynomial)
        }
    }
}

fn expand_factors<P: Polynomial>(vars: P::Vars, factors: &[(P, u32)]) -> P {
    factors
        .iter()
        .fold(P::constant_poly(vars, Rational::one()), |acc, (p, m)| {
            acc.checked_mul(&p.pow(*m)).expect("same variables")
        })
}

/// Scales factors to normalized form, folding scalars (raised to `sign *
/// multiplicity`) into `constant`, dropping constant factors and merging
/// duplicates.
fn normalize_list<P: Polynomial>(
    factors: Vec<(P, u32)>,
    constant: &mut Rational,
    sign: i64,
) -> Vec<(P, u32)> {
    let mut out: Vec<(P, u32)> = Vec::new();
    for (p, m) in factors {
        if m == 0 {
            continue;
        }
        if let Some(c) = p.as_constant() {
            *constant *= rational::pow(&c, sign * m as i64);
            continue;
        }
        let c = p.normalizing_coeff();
        let p = p.scale(&c.recip());
        *constant *= rational::pow(&c, sign * m as i64);
        match out.iter_mut().find(|(q, _)| *q == p) {
            Some((_, k)) => *k += m,
            None => out.push((p, m)),
        }
    }
    out
}

type FactorList<P> = Vec<(P, u32)>;

fn cancel<P: Polynomial>(
    mut numer: FactorList<P>,
    mut denom: FactorList<P>,
) -> (FactorList<P>, FactorList<P>) {
    for (p, m) in numer.iter_mut() {
        if let Some((_, k)) = denom.iter_mut().find(|(q, _)| q == p) {
            let c = (*m).min(*k);
            *m -= c;
            *k -= c;
        }
    }
    numer.retain(|(_, m)| *m > 0);
    denom.retain(|(_, m)| *m > 0);
    (numer, denom)
}

impl FactoredRatFunc<UniPoly> {
    pub fn var(&self) -> Var {
        self.vars
    }

    /// Single reduced fraction: gcd divided out, denominator scaled to
    /// constant term 1 (or leading coefficient 1 when the constant term is 0).
    pub fn reduced(&self) -> Result<(UniPoly, UniPoly)> {
        let (n, d) = self.expand_to_single_fraction();
        if n.is_zero() {
            return Ok((n, UniPoly::one(self.vars)));
        }
        let g = n.gcd(&d)?;
        let n = n.exact_div(&g)?;
        let d = d.exact_div(&g)?;
        let c = if d.coeff(0).is_zero() {
            d.leading_coeff()
        } else {
            d.coeff(0)
        };
        let inv = c.recip();
        Ok((n.scale(&inv), d.scale(&inv)))
    }

    /// [`reduced`](Self::reduced) wrapped back into a two-factor function.
    pub fn reduced_form(&self) -> Result<Self> {
        let (n, d) = self.reduced()?;
        Self::from_fraction(n, d)
    }
}

/// Substitutes `w = s_numer / s_denom` into a univariate `f(w)`.
///
/// A degree-`d` factor `g` becomes `s_denom^d * g(s_numer / s_denom)`, and the
/// leftover powers of `s_denom` are appended as their own factor so the
/// result evaluates to `f(s_numer / s_denom)` wherever that is defined.
pub fn compose_rational<P: Polynomial>(
    f: &FactoredRatFunc<UniPoly>,
    s_numer: &P,
    s_denom: &P,
) -> Result<FactoredRatFunc<P>> {
    if s_denom.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let vars = s_numer.vars();
    if s_denom.vars() != vars {
        return Err(Error::VariableMismatch(
            format!("{:?}", vars),
            format!("{:?}", s_denom.vars()),
        ));
    }
    if f.is_zero() {
        return Ok(FactoredRatFunc::zero(vars));
    }
    let homogenize = |g: &UniPoly| -> Result<(P, i64)> {
        let d = g.degree().unwrap_or(0);
        let mut acc = P::constant_poly(vars, Rational::zero());
        for (i, c) in g.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = s_numer
                .pow(i as u32)
                .checked_mul(&s_denom.pow((d - i) as u32))?
                .scale(c);
            acc = acc.checked_add(&term)?;
        }
        Ok((acc, d as i64))
    };
    // net power of s_denom that must go into the denominator
    let mut balance: i64 = 0;
    let mut numer = Vec::new();
    for (g, m) in f.numer_factors() {
        let (h, d) = homogenize(g)?;
        balance += d * *m as i64;
        numer.push((h, *m));
    }
    let mut denom = Vec::new();
    for (g, m) in f.denom_factors() {
        let (h, d) = homogenize(g)?;
        balance -= d * *m as i64;
        denom.push((h, *m));
    }
    if balance > 0 {
        denom.push((s_denom.clone(), balance as u32));
    } else if balance < 0 {
        numer.push((s_denom.clone(), (-balance) as u32));
    }
    FactoredRatFunc::new(vars, f.constant_factor().clone(), numer, denom)
}

fn write_factor<P: Polynomial>(out: &mut String, p: &P, m: u32) {
    out.push('(');
    out.push_str(&p.to_string());
    out.push(')');
    if m > 1 {
        out.push_str(&format!("^{m}"));
    }
}

impl<P: Polynomial> fmt::Display for FactoredRatFunc<P> {
    /// Text form that parses back to the same canonical value, e.g.
    /// `2*(z^2)/((1 - z)*(1 - 2*z - 4*z^2))`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        let c = rational::format_rational(&self.constant);
        if self.numer.is_empty() {
            out.push_str(&c);
        } else {
            if !self.constant.is_one() {
                out.push_str(&c);
                out.push('*');
            }
            for (k, (p, m)) in self.numer.iter().enumerate() {
                if k > 0 {
                    out.push('*');
                }
                write_factor(&mut out, p, *m);
            }
        }
        if !self.denom.is_empty() {
            out.push('/');
            let single = self.denom.len() == 1 && self.denom[0].1 == 1;
            if !single {
                out.push('(');
            }
            for (k, (p, m)) in self.denom.iter().enumerate() {
                if k > 0 {
                    out.push('*');
                }
                write_factor(&mut out, p, *m);
            }
            if !single {
                out.push(')');
            }
        }
        f.write_str(&out)
    }
}
