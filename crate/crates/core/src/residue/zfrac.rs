//! The field of rational functions in `z`, used as the coefficient field of
//! the quotient ring `Q(z)[t] / p(t, z)`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::field::Field;
use crate::poly::UniPoly;
use crate::ratfunc::UniRatFunc;
use crate::rational::Rational;
use crate::var::Var;

/// `num / den` in lowest terms with `den` monic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZFrac {
    num: UniPoly,
    den: UniPoly,
}

impl ZFrac {
    pub fn new(num: UniPoly, den: UniPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator in Q(z)");
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den).expect("both in z");
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.divrem(&g).expect("z").0, den.divrem(&g).expect("z").0)
        };
        let lc = den.leading_coeff().recip();
        ZFrac {
            num: num.scale(&lc),
            den: den.scale(&lc),
        }
    }

    pub fn from_poly(p: UniPoly) -> Self {
        ZFrac {
            num: p,
            den: UniPoly::one(Var::Z),
        }
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::from_poly(UniPoly::constant(Var::Z, c))
    }

    pub fn numer(&self) -> &UniPoly {
        &self.num
    }

    pub fn denom(&self) -> &UniPoly {
        &self.den
    }

    pub fn to_ratfunc(&self) -> UniRatFunc {
        UniRatFunc::from_fraction(self.num.clone(), self.den.clone()).expect("nonzero denominator")
    }

    fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }
}

impl fmt::Display for ZFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_ratfunc())
    }
}

impl Zero for ZFrac {
    fn zero() -> Self {
        Self::from_poly(UniPoly::zero(Var::Z))
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for ZFrac {
    fn one() -> Self {
        Self::from_poly(UniPoly::one(Var::Z))
    }
}

impl Add for ZFrac {
    type Output = ZFrac;
    fn add(self, rhs: ZFrac) -> ZFrac {
        if self.is_zero() {
            return rhs;
        }
        if rhs.is_zero() {
            return self;
        }
        if self.is_polynomial() && rhs.is_polynomial() {
            return Self::from_poly(&self.num + &rhs.num);
        }
        if self.den == rhs.den {
            return ZFrac::new(&self.num + &rhs.num, self.den);
        }
        ZFrac::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Neg for ZFrac {
    type Output = ZFrac;
    fn neg(self) -> ZFrac {
        ZFrac {
            num: -&self.num,
            den: self.den,
        }
    }
}

impl Sub for ZFrac {
    type Output = ZFrac;
    fn sub(self, rhs: ZFrac) -> ZFrac {
        self + (-rhs)
    }
}

impl Mul for ZFrac {
    type Output = ZFrac;
    fn mul(self, rhs: ZFrac) -> ZFrac {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if self.is_polynomial() && rhs.is_polynomial() {
            return Self::from_poly(&self.num * &rhs.num);
        }
        ZFrac::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for ZFrac {
    type Output = ZFrac;
    fn div(self, rhs: ZFrac) -> ZFrac {
        assert!(!rhs.is_zero(), "division by zero in Q(z)");
        ZFrac::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Field for ZFrac {
    fn from_i64(n: i64) -> Self {
        Self::from_rational(crate::rational::int(n))
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
    fn reduces_to_lowest_terms() {
        // (z - z^2) / (2 - 2z) = z / 2
        let f = ZFrac::new(z(&[0, 1, -1]), z(&[2, -2]));
        assert_eq!(f.numer(), &UniPoly::new(Var::Z, vec![int(0), rat(1, 2)]));
        assert_eq!(f.denom(), &z(&[1]));
    }

    #[test]
    fn field_identities() {
        let a = ZFrac::new(z(&[1, 2]), z(&[1, -1, -1]));
        let b = ZFrac::new(z(&[3]), z(&[0, 1]));
        assert_eq!((a.clone() + b.clone()) - b.clone(), a);
        assert_eq!((a.clone() * b.clone()) / b.clone(), a);
        assert!((a.clone() - a.clone()).is_zero());
        assert_eq!(a.clone() / a, ZFrac::one());
    }
}
