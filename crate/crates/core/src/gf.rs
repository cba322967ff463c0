//! Bivariate generating functions for binomial convolutions.
//!
//! For sequences `a`, `b` with rational generating functions `A`, `B`,
//!
//! ```text
//! sum_(n,m) x^n y^m sum_k C(n,k) a_k b_(m-k) = B(y) * 1/(1-x) * A(xy/(1-x))
//! ```
//!
//! because `sum_n C(n,k) x^n = x^k / (1-x)^(k+1)`.

use num_traits::One;
use serde::Serialize;

use crate::bipoly::BiPoly;
use crate::poly::UniPoly;
use crate::ratfunc::{compose_rational, BiRatFunc, FactoredRatFunc, UniRatFunc};
use crate::rational::Rational;
use crate::series::SequenceSpec;
use crate::var::Var;

/// `P(v) / (1 - sum_i c_i v^i)` where `P` is fixed by the initial terms.
/// Only the numerator depends on the initial terms.
pub fn sequence_gf(spec: &SequenceSpec, var: Var) -> UniRatFunc {
    let k = spec.order();
    let mut q = vec![Rational::one()];
    q.extend(spec.coeffs().iter().map(|c| -c.clone()));
    let q = UniPoly::new(var, q);
    let init = UniPoly::new(var, spec.initial().to_vec());
    let p = (&q * &init).truncate(k);
    if p.is_zero() {
        return FactoredRatFunc::zero(var);
    }
    FactoredRatFunc::from_fraction(p, q).expect("constant term 1")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Derived,
    Printed,
}

/// A convolution generating function together with the sequences it encodes.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvolutionGF {
    /// Function of `x` (outer) and `y` (inner).
    pub gf: BiRatFunc,
    /// Sequence indexed by `k` (substituted through `w = xy/(1-x)`).
    pub a: SequenceSpec,
    /// Sequence indexed by `m - k` (the plain `y` factor).
    pub b: SequenceSpec,
    pub provenance: Provenance,
}

/// `B(y) * 1/(1-x) * A(w)` at `w = xy/(1-x)`, kept factored.
pub fn build_convolution_gf(a: &SequenceSpec, b: &SequenceSpec) -> ConvolutionGF {
    let vars = (Var::X, Var::Y);
    let lift_y = |f: &UniRatFunc| -> BiRatFunc {
        let lift = |v: &[(UniPoly, u32)]| {
            v.iter()
                .map(|(p, m)| (BiPoly::from_inner(Var::X, p), *m))
                .collect()
        };
        FactoredRatFunc::new(
            vars,
            f.constant_factor().clone(),
            lift(f.numer_factors()),
            lift(f.denom_factors()),
        )
        .expect("lifted factors share variables")
    };
    let b_of_y = lift_y(&sequence_gf(b, Var::Y));
    let one_minus_x = BiPoly::from_terms(
        Var::X,
        Var::Y,
        [(0, 0, Rational::one()), (1, 0, -Rational::one())],
    );
    let xy = BiPoly::from_terms(Var::X, Var::Y, [(1, 1, Rational::one())]);
    let a_of_w = compose_rational(&sequence_gf(a, Var::W), &xy, &one_minus_x)
        .expect("nonzero substitution denominator");
    let geometric = FactoredRatFunc::new(vars, Rational::one(), vec![], vec![(one_minus_x, 1)])
        .expect("nonzero");
    let gf = if b_of_y.is_zero() || a_of_w.is_zero() {
        FactoredRatFunc::zero(vars)
    } else {
        b_of_y
            .mul(&geometric)
            .and_then(|f| f.mul(&a_of_w))
            .expect("same variables")
    };
    ConvolutionGF {
        gf,
        a: a.clone(),
        b: b.clone(),
        provenance: Provenance::Derived,
    }
}
