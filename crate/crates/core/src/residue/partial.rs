//! Partial fractions over the rationals for already-factored denominators.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field;
use crate::poly::UniPoly;
use crate::ratfunc::{FactoredRatFunc, UniRatFunc};

/// `numerator / factor^power` with `deg numerator < power * deg factor`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialFraction {
    pub numerator: UniPoly,
    pub factor: UniPoly,
    pub power: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialFractions {
    pub polynomial: UniPoly,
    pub parts: Vec<PartialFraction>,
}

impl PartialFractions {
    /// Adds the parts back into one factored function.
    pub fn resum(&self) -> Result<UniRatFunc> {
        let var = self.polynomial.var();
        let mut acc = FactoredRatFunc::from_poly(self.polynomial.clone());
        for part in &self.parts {
            let term = FactoredRatFunc::new(
                var,
                crate::rational::int(1),
                vec![(part.numerator.clone(), 1)],
                vec![(part.factor.clone(), part.power)],
            )?;
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }
}

#[derive(Serialize)]
struct PartText {
    numerator: String,
    factor: String,
    power: u32,
}

impl Serialize for PartialFractions {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let parts: Vec<PartText> = self
            .parts
            .iter()
            .map(|p| PartText {
                numerator: p.numerator.to_string(),
                factor: p.factor.to_string(),
                power: p.power,
            })
            .collect();
        let mut st = s.serialize_struct("PartialFractions", 2)?;
        st.serialize_field("polynomial", &self.polynomial.to_string())?;
        st.serialize_field("parts", &parts)?;
        st.end()
    }
}

/// Decomposes over the supplied denominator factors, which must be pairwise
/// coprime. No further factorization is attempted.
pub fn partial_fractions_q(f: &UniRatFunc) -> Result<PartialFractions> {
    let var = f.var();
    let dens = f.denom_factors();
    for (i, (a, _)) in dens.iter().enumerate() {
        for (b, _) in &dens[i + 1..] {
            if a.gcd(b)?.degree() != Some(0) {
                return Err(Error::NotCoprime);
            }
        }
    }
    let (numer, denom) = f.expand_to_single_fraction();
    let (polynomial, rem) = numer.divrem(&denom)?;
    let mut parts = Vec::with_capacity(dens.len());
    for (i, (q, m)) in dens.iter().enumerate() {
        let di = q.pow(*m);
        let others = dens
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .fold(UniPoly::one(var), |acc, (_, (p, k))| &acc * &p.pow(*k));
        let inv = field::inverse_mod(others.coeffs(), di.coeffs()).ok_or(Error::NotCoprime)?;
        let num = field::mul_mod(rem.coeffs(), &inv, di.coeffs());
        parts.push(PartialFraction {
            numerator: UniPoly::new(var, num),
            factor: q.clone(),
            power: *m,
        });
    }
    Ok(PartialFractions { polynomial, parts })
}
