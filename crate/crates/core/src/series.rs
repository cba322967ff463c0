//! Truncated power series, sequence generation and the brute-force
//! convolution oracles.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::ratfunc::FactoredRatFunc;
use crate::rational::Rational;
use crate::var::Var;

/// The first `len()` Taylor coefficients of a series in `var`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesTruncated {
    pub var: Var,
    pub coeffs: Vec<Rational>,
}

impl SeriesTruncated {
    pub fn new(var: Var, coeffs: Vec<Rational>) -> Self {
        SeriesTruncated { var, coeffs }
    }

    /// Truncation order.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn get(&self, n: usize) -> Option<&Rational> {
        self.coeffs.get(n)
    }
}

/// Divides the polynomial `numer` by `denom` as power series, producing `n`
/// coefficients. `denom[0]` must be nonzero.
fn divide_series(numer: &[Rational], denom: &[Rational], n: usize) -> Vec<Rational> {
    let d0_inv = denom[0].recip();
    let mut out: Vec<Rational> = Vec::with_capacity(n);
    for k in 0..n {
        let mut acc = numer.get(k).cloned().unwrap_or_else(Rational::zero);
        for (j, dj) in denom.iter().enumerate().skip(1).take(k) {
            if !dj.is_zero() {
                acc -= dj * &out[k - j];
            }
        }
        out.push(acc * &d0_inv);
    }
    out
}

/// Taylor coefficients of a univariate rational function at 0.
///
/// A removable singularity at the origin (equal powers of the variable
/// above and below) is tolerated; a genuine pole is an error.
pub fn series_of_rational(f: &FactoredRatFunc<UniPoly>, n: usize) -> Result<SeriesTruncated> {
    let (numer, denom) = f.expand_to_single_fraction();
    let v = denom.valuation().expect("denominator is nonzero");
    if numer.valuation().is_some_and(|nv| nv < v) {
        return Err(Error::PoleAtOrigin);
    }
    let numer = numer.shift_down(v);
    let denom = denom.shift_down(v);
    Ok(SeriesTruncated::new(
        f.var(),
        divide_series(numer.coeffs(), denom.coeffs(), n),
    ))
}

/// Coefficient grid `c[n][m]` of `x^n y^m` (outer, inner) for `n < nx`,
/// `m < ny`.
///
/// Writes `F = N / D` with `D = sum_j D_j(y) x^j` and solves
/// `E_n = (N_n - sum_(j>=1) D_j E_(n-j)) / D_0` row by row, each row a
/// truncated series in `y`.
pub fn bivariate_series(
    f: &FactoredRatFunc<BiPoly>,
    nx: usize,
    ny: usize,
) -> Result<Vec<Vec<Rational>>> {
    let (numer, denom) = f.expand_to_single_fraction();
    let d00 = denom.coeff(0).coeff(0);
    if d00.is_zero() {
        return Err(Error::PoleAtOrigin);
    }
    // Clear denominators; when the constant term becomes a unit the whole
    // recursion stays in the integers.
    let (num_int, num_den) = integer_rows(&numer);
    let (den_int, _) = integer_rows(&denom);
    let lead = den_int[0][0].clone();
    if lead.is_one() || (-&lead).is_one() {
        let rows = grid_rows(&num_int, &den_int, nx, ny, |v: BigInt| &v * &lead);
        let scale = Rational::new(denominator_scale(&denom, &den_int), num_den);
        return Ok(rows
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|c| Rational::from_integer(c) * &scale)
                    .collect()
            })
            .collect());
    }
    let to_rows = |p: &BiPoly| -> Vec<Vec<Rational>> {
        p.coeffs().iter().map(|c| c.coeffs().to_vec()).collect()
    };
    let inv = d00.recip();
    Ok(grid_rows(&to_rows(&numer), &to_rows(&denom), nx, ny, |v| {
        v * &inv
    }))
}

/// Coefficient rows scaled to integers, with the common denominator.
fn integer_rows(p: &BiPoly) -> (Vec<Vec<BigInt>>, BigInt) {
    use num_integer::Integer;
    let lcm = p
        .coeffs()
        .iter()
        .flat_map(|row| row.coeffs().iter())
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let rows = p
        .coeffs()
        .iter()
        .map(|row| {
            row.coeffs()
                .iter()
                .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
                .collect()
        })
        .collect();
    (rows, lcm)
}

/// The factor by which the integer denominator exceeds the true one.
fn denominator_scale(denom: &BiPoly, den_int: &[Vec<BigInt>]) -> BigInt {
    (Rational::from_integer(den_int[0][0].clone()) / denom.coeff(0).coeff(0)).to_integer()
}

/// Row recursion `E_n = (N_n - sum_j D_j E_(n-j)) / D_0`, each row a
/// truncated series in the inner variable. `div_lead` divides by the
/// constant term of `D_0`.
fn grid_rows<T>(
    numer: &[Vec<T>],
    denom: &[Vec<T>],
    nx: usize,
    ny: usize,
    div_lead: impl Fn(T) -> T,
) -> Vec<Vec<T>>
where
    T: Clone + Zero + for<'a> std::ops::SubAssign<&'a T>,
    for<'a> &'a T: std::ops::Mul<&'a T, Output = T>,
{
    let mut rows: Vec<Vec<T>> = Vec::with_capacity(nx);
    for n in 0..nx {
        let mut acc: Vec<T> = numer
            .get(n)
            .map(|r| r.iter().take(ny).cloned().collect())
            .unwrap_or_default();
        acc.resize(ny, T::zero());
        for (j, dj) in denom.iter().enumerate().take(n + 1).skip(1) {
            let prev = &rows[n - j];
            for (a, c) in dj.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for m in a..ny {
                    let p: &T = &prev[m - a];
                    if !p.is_zero() {
                        acc[m] -= &(c * p);
                    }
                }
            }
        }
        // divide by the inner series D_0
        let d0 = &denom[0];
        let mut row: Vec<T> = Vec::with_capacity(ny);
        for k in 0..ny {
            let mut v = acc[k].clone();
            for (j, dj) in d0.iter().enumerate().skip(1).take(k) {
                if !dj.is_zero() {
                    v -= &(dj * &row[k - j]);
                }
            }
            row.push(div_lead(v));
        }
        rows.push(row);
    }
    rows
}

/// The diagonal `[x^n y^n] F` for `n < n_terms`, as a series in `z`.
pub fn diagonal_series(f: &FactoredRatFunc<BiPoly>, n_terms: usize) -> Result<SeriesTruncated> {
    let grid = bivariate_series(f, n_terms, n_terms)?;
    Ok(SeriesTruncated::new(
        Var::Z,
        grid.into_iter()
            .enumerate()
            .map(|(n, mut row)| row.swap_remove(n))
            .collect(),
    ))
}

/// A constant-coefficient linear recurrence with its initial terms:
/// `a_n = sum_i coeffs[i] * a_(n-1-i)` for `n >= k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceSpec {
    coeffs: Vec<Rational>,
    initial: Vec<Rational>,
}

/// How a k-step Fibonacci family is anchored.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum Convention {
    /// Generating function `1/(1 - z - ... - z^k)`, so `a_0 = 1`.
    A,
    /// Generating function `z/(1 - z - ... - z^k)`, so `a_0 = 0`.
    B,
}

impl Convention {
    pub const BOTH: [Convention; 2] = [Convention::A, Convention::B];
}

impl std::fmt::Display for Convention {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Convention::A => f.write_str("A"),
            Convention::B => f.write_str("B"),
        }
    }
}

impl SequenceSpec {
    pub fn new(coeffs: Vec<Rational>, initial: Vec<Rational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidSequence("order must be at least 1".into()));
        }
        if coeffs.len() != initial.len() {
            return Err(Error::InvalidSequence(format!(
                "order {} needs {} initial terms, got {}",
                coeffs.len(),
                coeffs.len(),
                initial.len()
            )));
        }
        Ok(SequenceSpec { coeffs, initial })
    }

    /// All-ones recurrence of order `initial.len()`.
    pub fn k_bonacci(initial: Vec<Rational>) -> Result<Self> {
        Self::new(vec![Rational::one(); initial.len()], initial)
    }

    /// The k-step Fibonacci sequence under the given anchoring.
    pub fn k_bonacci_convention(k: usize, convention: Convention) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidSequence("order must be at least 1".into()));
        }
        if k == 1 && convention == Convention::B {
            // 0, 1, 1, 1, ... needs an order-2 recurrence
            return Err(Error::InvalidSequence(
                "the shifted order-1 family is not an order-1 recurrence".into(),
            ));
        }
        // 1/(1 - z - ... - z^k) starts 1, 1, 2, 4, ...; the z/(...) variant is
        // the same shifted right by one.
        let mut a: Vec<Rational> = vec![Rational::one()];
        while a.len() < k {
            let s = a
                .iter()
                .rev()
                .take(k)
                .fold(Rational::zero(), |acc, x| acc + x);
            a.push(s);
        }
        if convention == Convention::B {
            a.insert(0, Rational::zero());
            a.truncate(k);
        }
        Self::k_bonacci(a)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn initial(&self) -> &[Rational] {
        &self.initial
    }

    pub fn scale_initial(&self, c: &Rational) -> Self {
        SequenceSpec {
            coeffs: self.coeffs.clone(),
            initial: self.initial.iter().map(|a| a * c).collect(),
        }
    }
}

pub fn generate_sequence(spec: &SequenceSpec, n: usize) -> SeriesTruncated {
    let k = spec.order();
    let mut a: Vec<Rational> = spec.initial.iter().take(n).cloned().collect();
    while a.len() < n {
        let len = a.len();
        let next = spec
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(Rational::zero(), |acc, (i, c)| acc + c * &a[len - 1 - i]);
        a.push(next);
    }
    debug_assert!(a.len() == n || n < k);
    SeriesTruncated::new(Var::Z, a)
}

/// Row `n` of Pascal's triangle.
pub fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for _ in 0..n {
        row = next_pascal_row(&row);
    }
    row
}

fn next_pascal_row(row: &[BigInt]) -> Vec<BigInt> {
    let mut next = Vec::with_capacity(row.len() + 1);
    next.push(BigInt::one());
    for w in row.windows(2) {
        next.push(&w[0] + &w[1]);
    }
    next.push(BigInt::one());
    next
}

fn need(s: &SeriesTruncated, n: usize) -> Result<()> {
    if s.len() < n {
        Err(Error::InsufficientTerms {
            needed: n,
            have: s.len(),
        })
    } else {
        Ok(())
    }
}

fn convolve_row(row: &[BigInt], a: &[Rational], b: &[Rational], n: usize) -> Rational {
    (0..=n).fold(Rational::zero(), |acc, k| {
        if a[k].is_zero() || b[n - k].is_zero() {
            acc
        } else {
            acc + Rational::from_integer(row[k].clone()) * &a[k] * &b[n - k]
        }
    })
}

/// `sum_k C(n,k) a_k b_(n-k)`.
pub fn binomial_convolution(
    a: &SeriesTruncated,
    b: &SeriesTruncated,
    n: usize,
) -> Result<Rational> {
    need(a, n + 1)?;
    need(b, n + 1)?;
    Ok(convolve_row(&binomial_row(n), &a.coeffs, &b.coeffs, n))
}

/// `binomial_convolution(a, b, n)` for every `n < count`, sharing the Pascal
/// rows.
pub fn binomial_convolutions(
    a: &SeriesTruncated,
    b: &SeriesTruncated,
    count: usize,
) -> Result<Vec<Rational>> {
    need(a, count)?;
    need(b, count)?;
    let mut row = vec![BigInt::one()];
    let mut out = Vec::with_capacity(count);
    for n in 0..count {
        if n > 0 {
            row = next_pascal_row(&row);
        }
        out.push(convolve_row(&row, &a.coeffs, &b.coeffs, n));
    }
    Ok(out)
}

/// `h[n][m] = sum_k C(n,k) a_k b_(m-k)`, terms with `m < k` omitted.
pub fn convolution_grid(
    a: &SeriesTruncated,
    b: &SeriesTruncated,
    nn: usize,
    nm: usize,
) -> Result<Vec<Vec<Rational>>> {
    need(a, nn)?;
    need(b, nm)?;
    let mut row = vec![BigInt::one()];
    let mut grid = Vec::with_capacity(nn);
    for n in 0..nn {
        if n > 0 {
            row = next_pascal_row(&row);
        }
        let line = (0..nm)
            .map(|m| {
                (0..=n.min(m)).fold(Rational::zero(), |acc, k| {
                    if a.coeffs[k].is_zero() || b.coeffs[m - k].is_zero() {
                        acc
                    } else {
                        acc + Rational::from_integer(row[k].clone())
                            * &a.coeffs[k]
                            * &b.coeffs[m - k]
                    }
                })
            })
            .collect();
        grid.push(line);
    }
    Ok(grid)
}
