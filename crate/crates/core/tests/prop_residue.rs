mod common;

use common::*;
use gfdiag::catalog::convolution_gf;
use gfdiag::gf::build_convolution_gf;
use gfdiag::ratfunc::{BiRatFunc, UniRatFunc};
use gfdiag::rational::rat;
use gfdiag::residue::{
    classify_poles, diagonal_rational, hk_transform, partial_fractions_q, residue_trace_qz,
    DiagonalStatus, HKTransformed, PoleClass,
};
use gfdiag::series::{Convention, SequenceSpec};
use gfdiag::{BiPoly, Error, Rational, UniPoly, Var};
use proptest::prelude::*;

fn tz_poly(max_t: usize, max_z: usize) -> impl Strategy<Value = BiPoly> {
    prop::collection::vec((0..=max_t, 0..=max_z, small_int()), 0..=6)
        .prop_map(|terms| BiPoly::from_terms(Var::T, Var::Z, terms))
}

/// `N(x, y) / ((1 - a x)(1 - b y - d x y)(1 - c x y))`; its diagonal is
/// rational. With `d != 0` the kept factor `(1 - d z) t - b` has a leading
/// coefficient depending on `z`.
fn separable() -> impl Strategy<Value = BiRatFunc> {
    (
        bipoly(2, 2),
        nonzero_rational(),
        nonzero_rational(),
        small_rational(),
        nonzero_rational(),
    )
        .prop_map(|(n, a, b, d, c)| {
            let one = (0, 0, rat(1, 1));
            let factor = |terms: Vec<(usize, usize, Rational)>| {
                (BiPoly::from_terms(Var::X, Var::Y, terms), 1)
            };
            let numer = if n.is_zero() { vec![] } else { vec![(n, 1)] };
            BiRatFunc::new(
                (Var::X, Var::Y),
                rat(1, 1),
                numer,
                vec![
                    factor(vec![one.clone(), (1, 0, -a)]),
                    factor(vec![one.clone(), (0, 1, -b), (1, 1, -d)]),
                    factor(vec![one, (1, 1, -c)]),
                ],
            )
            .unwrap()
        })
}

fn any_rational_diagonal() -> impl Strategy<Value = BiRatFunc> {
    prop_oneof![convolution(), separable()]
}

/// `1 - c_1 v - ... - c_k v^k` has no repeated root: repeated kept poles
/// are outside the method's scope.
fn squarefree_recurrence(spec: &SequenceSpec) -> bool {
    let mut q = vec![rat(1, 1)];
    q.extend(spec.coeffs().iter().map(|c| -c.clone()));
    let q = UniPoly::new(Var::Z, q);
    q.degree() == Some(0) || q.gcd(&q.derivative()).unwrap().degree() == Some(0)
}

fn convolution() -> impl Strategy<Value = BiRatFunc> {
    (
        sequence_spec(3),
        sequence_spec(3).prop_filter("squarefree", squarefree_recurrence),
    )
        .prop_map(|(a, b)| build_convolution_gf(&a, &b).gf)
}

fn kept(h: &HKTransformed) -> Vec<PoleClass> {
    classify_poles(h).into_iter().filter(|p| p.kept).collect()
}

fn with_numerator(h: &HKTransformed, numerator: BiPoly) -> HKTransformed {
    HKTransformed {
        numerator,
        ..h.clone()
    }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn convolution_diagonals_verify(f in convolution()) {
        let (_, report) = diagonal_rational(&f, 30).unwrap();
        prop_assert_eq!(report.status, DiagonalStatus::Verified, "{}", f);
    }

    #[test]
    fn separable_diagonals_verify(f in separable()) {
        match diagonal_rational(&f, 30) {
            Ok((_, report)) => prop_assert_eq!(report.status, DiagonalStatus::Verified, "{}", f),
            // coinciding poles are rejected, not mis-summed
            Err(Error::DegeneratePole(_)) | Err(Error::RepeatedPole(_)) => {}
            Err(e) => prop_assert!(false, "{}: {}", f, e),
        }
    }

    #[test]
    fn trace_is_additive_in_the_numerator(
        f in any_rational_diagonal(),
        n1 in tz_poly(3, 3),
        n2 in tz_poly(3, 3),
    ) {
        let h = hk_transform(&f);
        for pole in kept(&h) {
            let r1 = residue_trace_qz(&with_numerator(&h, n1.clone()), &pole);
            let r2 = residue_trace_qz(&with_numerator(&h, n2.clone()), &pole);
            let sum = residue_trace_qz(&with_numerator(&h, &n1 + &n2), &pole);
            match (r1, r2, sum) {
                (Ok(a), Ok(b), Ok(s)) => prop_assert_eq!(a + b, s),
                (Err(_), Err(_), Err(_)) => {}
                other => prop_assert!(false, "inconsistent outcomes {:?}", other),
            }
        }
    }

    #[test]
    fn trace_ignores_a_common_coprime_factor(f in any_rational_diagonal(), g in tz_poly(2, 2)) {
        prop_assume!(!g.is_zero() && g.degree_outer().is_some());
        let h = hk_transform(&f);
        for pole in kept(&h) {
            let Ok(base) = residue_trace_qz(&h, &pole) else { continue };
            let mut extended = with_numerator(&h, &h.numerator * &g);
            extended.denom_factors.push((g.clone(), 1));
            match residue_trace_qz(&extended, &pole) {
                Ok(r) => prop_assert_eq!(r, base),
                // g shares a root with the pole factor
                Err(Error::DegeneratePole(_)) => {}
                Err(e) => prop_assert!(false, "{}", e),
            }
        }
    }

    #[test]
    fn partial_fractions_resum(
        roots in prop::collection::btree_set(-4i64..=4, 1..=3),
        powers in prop::collection::vec(1u32..=2, 3),
        with_quadratic in any::<bool>(),
        numer in poly(Var::Z, 6),
    ) {
        let mut factors: Vec<(UniPoly, u32)> = roots
            .iter()
            .filter(|&&r| r != 0)
            .zip(&powers)
            .map(|(&r, &m)| (UniPoly::from_ints(Var::Z, &[1, -r]), m))
            .collect();
        if with_quadratic {
            factors.push((UniPoly::from_ints(Var::Z, &[1, 1, 1]), 1));
        }
        prop_assume!(!factors.is_empty());
        let numer = if numer.is_zero() { vec![] } else { vec![(numer, 1)] };
        let f = UniRatFunc::new(Var::Z, rat(1, 1), numer, factors.clone()).unwrap();
        let parts = partial_fractions_q(&f).unwrap();
        prop_assert!(parts.resum().unwrap().identical_to(&f).unwrap());
        for part in &parts.parts {
            let bound = part.factor.degree().unwrap() * part.power as usize;
            prop_assert!(part.numerator.is_zero() || part.numerator.degree().unwrap() < bound);
        }
    }
}

fn kept_degree(f: &BiRatFunc) -> usize {
    kept(&hk_transform(f)).iter().map(|p| p.degree_in_t).sum()
}

#[test]
fn fibonacci_keeps_two_poles() {
    assert_eq!(kept_degree(&convolution_gf(2, Convention::B).unwrap()), 2);
}

#[test]
fn tribonacci_keeps_three_poles() {
    assert_eq!(kept_degree(&convolution_gf(3, Convention::B).unwrap()), 3);
}
