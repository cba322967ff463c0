//! The substitution `F(x, y) -> F(zt, 1/t) / t` and pole classification.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::bipoly::BiPoly;
use crate::poly::UniPoly;
use crate::ratfunc::{BiRatFunc, Polynomial};
use crate::rational::{self, Rational};
use crate::var::Var;

/// `F(zt, 1/t) / t` as `numerator / prod(denom_factors)`, every piece a
/// polynomial in `t` (outer) and `z` (inner).
#[derive(Debug, Clone, PartialEq)]
pub struct HKTransformed {
    /// Includes the constant of `F` and any surplus power of `t`.
    pub numerator: BiPoly,
    pub denom_factors: Vec<(BiPoly, u32)>,
    /// Power of `t` pulled out of each numerator factor of `F`:
    /// `P(zt, 1/t) = t^shift * P~(t, z)`.
    pub numer_shifts: Vec<i64>,
    /// Same for each denominator factor of `F`.
    pub denom_shifts: Vec<i64>,
    /// Net power of `t` left after balancing, including the `1/t`.
    /// Positive powers sit in `numerator`, negative ones form the last
    /// denominator factor `t^(-t_power)`.
    pub t_power: i64,
}

fn tz_vars() -> (Var, Var) {
    (Var::T, Var::Z)
}

/// `P(zt, 1/t) = t^m * P~(t, z)` with `P~` a polynomial not divisible by `t`.
fn substitute(p: &BiPoly) -> (BiPoly, i64) {
    let m = p
        .terms()
        .map(|(i, j, _)| i as i64 - j as i64)
        .min()
        .unwrap_or(0);
    let terms = p
        .terms()
        .map(|(i, j, c)| ((i as i64 - j as i64 - m) as usize, i, c.clone()));
    let (t, z) = tz_vars();
    (BiPoly::from_terms(t, z, terms), m)
}

fn t_monomial(k: usize) -> BiPoly {
    let (t, z) = tz_vars();
    BiPoly::from_terms(t, z, [(k, 0, Rational::one())])
}

/// `x -> z*t`, `y -> 1/t`, divide by `t`, clear powers of `t` factor by
/// factor. `F` must be in `(x, y)` with `x` outer.
pub fn hk_transform(f: &BiRatFunc) -> HKTransformed {
    let (t, z) = tz_vars();
    let mut numerator = BiPoly::constant(t, z, f.constant_factor().clone());
    let mut t_power: i64 = -1;
    let mut numer_shifts = Vec::new();
    for (p, m) in f.numer_factors() {
        let (q, shift) = substitute(p);
        numerator = &numerator * &q.pow(*m);
        t_power += shift * *m as i64;
        numer_shifts.push(shift);
    }
    let mut denom_factors = Vec::new();
    let mut denom_shifts = Vec::new();
    for (p, m) in f.denom_factors() {
        let (q, shift) = substitute(p);
        t_power -= shift * *m as i64;
        denom_shifts.push(shift);
        match q.as_constant() {
            Some(c) => numerator = numerator.scale(&rational::pow(&c, -(*m as i64))),
            None => denom_factors.push((q, *m)),
        }
    }
    if f.is_zero() {
        numerator = BiPoly::zero(t, z);
    }
    if t_power > 0 {
        numerator = &numerator * &t_monomial(t_power as usize);
    } else if t_power < 0 {
        denom_factors.push((t_monomial(1), (-t_power) as u32));
    }
    HKTransformed {
        numerator,
        denom_factors,
        numer_shifts,
        denom_shifts,
        t_power,
    }
}

impl HKTransformed {
    pub fn denominator(&self) -> BiPoly {
        let (t, z) = tz_vars();
        self.denom_factors
            .iter()
            .fold(BiPoly::constant(t, z, Rational::one()), |acc, (p, m)| {
                &acc * &p.pow(*m)
            })
    }

    /// The transform as a factored function of `(t, z)`.
    pub fn to_ratfunc(&self) -> BiRatFunc {
        BiRatFunc::new(
            tz_vars(),
            Rational::one(),
            vec![(self.numerator.clone(), 1)],
            self.denom_factors.clone(),
        )
        .expect("transform factors are nonzero and share variables")
    }

    /// Value at `(t, z)`, or `None` at a pole.
    pub fn eval(&self, t: &Rational, z: &Rational) -> Option<Rational> {
        let d = self.denominator().eval(t, z);
        if d.is_zero() {
            None
        } else {
            Some(self.numerator.eval(t, z) / d)
        }
    }
}

impl std::fmt::Display for HKTransformed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({})", self.numerator)?;
        if !self.denom_factors.is_empty() {
            f.write_str("/(")?;
            for (k, (p, m)) in self.denom_factors.iter().enumerate() {
                if k > 0 {
                    f.write_str("*")?;
                }
                write!(f, "({p})")?;
                if *m > 1 {
                    write!(f, "^{m}")?;
                }
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Whether a denominator factor's roots in `t` contribute to the diagonal.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PoleClass {
    /// Index into [`HKTransformed::denom_factors`].
    pub index: usize,
    #[serde(serialize_with = "display_string")]
    pub factor: BiPoly,
    pub multiplicity: u32,
    pub degree_in_t: usize,
    /// Leading `t`-coefficient evaluated at `z = 0`.
    #[serde(serialize_with = "rational_string")]
    pub reason: Rational,
    /// Number of roots (with multiplicity) that stay bounded as `z -> 0`,
    /// i.e. the `t`-degree of `factor(t, 0)`.
    pub bounded_roots: usize,
    pub kept: bool,
}

impl PoleClass {
    /// Some but not all roots stay bounded. The keep/discard rule cannot
    /// separate them without factoring.
    pub fn is_mixed(&self) -> bool {
        self.bounded_roots > 0 && self.bounded_roots < self.degree_in_t
    }
}

fn display_string<S: serde::Serializer, T: std::fmt::Display>(
    v: &T,
    s: S,
) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn rational_string<S: serde::Serializer>(v: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&rational::format_rational(v))
}

/// A factor is kept iff it has positive degree in `t` and its leading
/// coefficient in `t` does not vanish at `z = 0`; then all its roots stay
/// bounded as `z -> 0`. This includes the factor `t` itself. Factors free of
/// `t` have no poles in `t` and are never kept.
pub fn classify_poles(h: &HKTransformed) -> Vec<PoleClass> {
    h.denom_factors
        .iter()
        .enumerate()
        .map(|(index, (p, m))| {
            let reason = p.leading_coeff().coeff(0);
            let at_zero: UniPoly = p.eval_inner(&Rational::zero());
            let degree_in_t = p.degree_outer().unwrap_or(0);
            PoleClass {
                index,
                factor: p.clone(),
                multiplicity: *m,
                degree_in_t,
                kept: degree_in_t > 0 && !reason.is_zero(),
                reason,
                bounded_roots: at_zero.degree().unwrap_or(0),
            }
        })
        .collect()
}
