mod common;

use common::*;
use gfdiag::ratfunc::{compose_rational, BiRatFunc, UniRatFunc};
use gfdiag::{Error, Polynomial, Rational, UniPoly, Var};
use num_traits::Zero;
use proptest::prelude::*;

fn uni_ratfunc() -> impl Strategy<Value = UniRatFunc> {
    (
        nonzero_rational(),
        prop::collection::vec((nonzero_poly(Var::Z, 2), 1u32..=2), 0..=2),
        prop::collection::vec((nonzero_poly(Var::Z, 2), 1u32..=2), 1..=2),
    )
        .prop_map(|(c, n, d)| UniRatFunc::new(Var::Z, c, n, d).expect("nonzero factors"))
}

fn bi_ratfunc() -> impl Strategy<Value = BiRatFunc> {
    (
        nonzero_rational(),
        prop::collection::vec((nonzero_bipoly(2, 2), 1u32..=2), 0..=2),
        prop::collection::vec((nonzero_bipoly(2, 2), 1u32..=2), 1..=2),
    )
        .prop_map(|(c, n, d)| BiRatFunc::new((Var::X, Var::Y), c, n, d).expect("nonzero factors"))
}

fn value_of_expansion<P: Polynomial>(n: &P, d: &P, at: &P::Point) -> Option<Rational> {
    let dv = d.eval_at(at);
    (!dv.is_zero()).then(|| n.eval_at(at) / dv)
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn factored_evaluation_matches_expansion(f in uni_ratfunc(), x in small_rational()) {
        let (n, d) = f.expand_to_single_fraction();
        match f.eval(&x) {
            Ok(v) => prop_assert_eq!(Some(v), value_of_expansion(&n, &d, &x)),
            Err(e) => {
                prop_assert_eq!(e, Error::PoleAtPoint);
                prop_assert!(d.eval(&x).is_zero());
            }
        }
    }

    #[test]
    fn bivariate_evaluation_matches_expansion(
        f in bi_ratfunc(),
        x in small_rational(),
        y in small_rational(),
    ) {
        let (n, d) = f.expand_to_single_fraction();
        let at = [x, y];
        match f.eval(&at) {
            Ok(v) => prop_assert_eq!(Some(v), value_of_expansion(&n, &d, &at)),
            Err(_) => prop_assert!(d.eval_at(&at).is_zero()),
        }
    }

    #[test]
    fn divrem_round_trip(a in poly(Var::Z, 6), b in nonzero_poly(Var::Z, 3)) {
        let (q, r) = a.divrem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn gcd_scales_with_common_factor(
        a in nonzero_poly(Var::Z, 3),
        b in nonzero_poly(Var::Z, 3),
        g in monic_poly(Var::Z, 2),
    ) {
        let lhs = (&a * &g).gcd(&(&b * &g)).unwrap();
        let rhs = (&g * &a.gcd(&b).unwrap()).monic();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn gcd_divides_both(a in nonzero_poly(Var::Z, 4), b in nonzero_poly(Var::Z, 4)) {
        let g = a.gcd(&b).unwrap();
        prop_assert!(a.divrem(&g).unwrap().1.is_zero());
        prop_assert!(b.divrem(&g).unwrap().1.is_zero());
        prop_assert_eq!(g.leading_coeff(), Rational::from_integer(1.into()));
    }

    #[test]
    fn composition_commutes_with_evaluation(
        f in uni_ratfunc(),
        s_numer in poly(Var::X, 2),
        s_denom in nonzero_poly(Var::X, 2),
        x in small_rational(),
    ) {
        let sd = s_denom.eval(&x);
        prop_assume!(!sd.is_zero());
        let w = s_numer.eval(&x) / sd;
        let composed = match compose_rational(&f, &s_numer, &s_denom) {
            Ok(c) => c,
            // a denominator factor vanishes identically on the substitution
            Err(Error::ZeroDenominator) => {
                prop_assert!(f.eval(&w).is_err());
                return Ok(());
            }
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        };
        match (f.eval(&w), composed.eval(&x)) {
            (Ok(a), Ok(b)) => prop_assert_eq!(a, b),
            // a pole of f at w is a pole of the composition at x
            (Err(_), r) => prop_assert!(r.is_err()),
            (Ok(_), Err(_)) => prop_assert!(false, "spurious pole"),
        }
    }

    #[test]
    fn text_round_trip(f in uni_ratfunc()) {
        let back: UniRatFunc = gfdiag::parse::parse_univariate_in(&f.to_string(), Var::Z).unwrap();
        prop_assert!(back.identical_to(&f).unwrap());
    }

    #[test]
    fn polynomial_text_round_trip(p in poly(Var::Z, 5)) {
        let back: UniPoly = p.to_string().parse().unwrap();
        prop_assert_eq!(back.with_var(Var::Z), p);
    }
}
