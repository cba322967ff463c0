mod common;

use common::*;
use gfdiag::gf::{build_convolution_gf, sequence_gf};
use gfdiag::ratfunc::{BiRatFunc, UniRatFunc};
use gfdiag::rational::{int, rat};
use gfdiag::series::{
    binomial_convolution, bivariate_series, convolution_grid, diagonal_series, generate_sequence,
    series_of_rational, Convention, SequenceSpec,
};
use gfdiag::{Rational, Var};
use num_traits::Zero;
use proptest::prelude::*;

fn expandable() -> impl Strategy<Value = UniRatFunc> {
    (
        poly(Var::Z, 4),
        prop::collection::vec(unit_constant_poly(Var::Z, 3), 1..=2),
    )
        .prop_map(|(n, d)| {
            let numer = if n.is_zero() { vec![] } else { vec![(n, 1)] };
            UniRatFunc::new(
                Var::Z,
                rat(1, 1),
                numer,
                d.into_iter().map(|p| (p, 1)).collect(),
            )
            .unwrap()
        })
}

fn expandable_bivariate() -> impl Strategy<Value = BiRatFunc> {
    (
        bipoly(2, 2),
        prop::collection::vec(unit_constant_bipoly(2, 2), 1..=2),
    )
        .prop_map(|(n, d)| {
            let numer = if n.is_zero() { vec![] } else { vec![(n, 1)] };
            BiRatFunc::new(
                (Var::X, Var::Y),
                rat(1, 1),
                numer,
                d.into_iter().map(|p| (p, 1)).collect(),
            )
            .unwrap()
        })
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn series_obeys_denominator_recurrence(f in expandable()) {
        let (n, d) = f.expand_to_single_fraction();
        let s = series_of_rational(&f, 30).unwrap().coeffs;
        let start = n.degree().map_or(0, |k| k + 1);
        for i in start.max(d.degree().unwrap_or(0))..s.len() {
            let lhs = d
                .coeffs()
                .iter()
                .enumerate()
                .fold(Rational::zero(), |acc, (j, c)| acc + c * &s[i - j]);
            prop_assert!(lhs.is_zero(), "index {}", i);
        }
    }

    #[test]
    fn diagonal_is_the_grid_diagonal(f in expandable_bivariate()) {
        let n = 12;
        let grid = bivariate_series(&f, n, n).unwrap();
        let diag = diagonal_series(&f, n).unwrap();
        for i in 0..n {
            prop_assert_eq!(&diag.coeffs[i], &grid[i][i]);
        }
    }

    #[test]
    fn k_bonacci_matches_its_generating_function(k in 2usize..=6) {
        let spec = SequenceSpec::k_bonacci_convention(k, Convention::B).unwrap();
        let mut denom = vec![1i64];
        denom.extend(std::iter::repeat_n(-1, k));
        let gf = UniRatFunc::from_fraction(
            gfdiag::UniPoly::from_ints(Var::Z, &[0, 1]),
            gfdiag::UniPoly::from_ints(Var::Z, &denom),
        )
        .unwrap();
        prop_assert_eq!(
            generate_sequence(&spec, 60).coeffs,
            series_of_rational(&gf, 60).unwrap().coeffs
        );
    }

    #[test]
    fn unshifted_k_bonacci_matches_its_generating_function(k in 1usize..=6) {
        let spec = SequenceSpec::k_bonacci_convention(k, Convention::A).unwrap();
        let mut denom = vec![1i64];
        denom.extend(std::iter::repeat_n(-1, k));
        let gf = UniRatFunc::from_fraction(
            gfdiag::UniPoly::from_ints(Var::Z, &[1]),
            gfdiag::UniPoly::from_ints(Var::Z, &denom),
        )
        .unwrap();
        prop_assert_eq!(
            generate_sequence(&spec, 60).coeffs,
            series_of_rational(&gf, 60).unwrap().coeffs
        );
    }

    #[test]
    fn sequence_matches_its_generating_function(spec in sequence_spec(4)) {
        let gf = sequence_gf(&spec, Var::Z);
        prop_assert_eq!(
            generate_sequence(&spec, 40).coeffs,
            series_of_rational(&gf, 40).unwrap().coeffs
        );
    }

    #[test]
    fn binomial_convolution_is_symmetric(a in sequence_spec(3), b in sequence_spec(3), n in 0usize..40) {
        let sa = generate_sequence(&a, 40);
        let sb = generate_sequence(&b, 40);
        prop_assert_eq!(
            binomial_convolution(&sa, &sb, n).unwrap(),
            binomial_convolution(&sb, &sa, n).unwrap()
        );
    }

    #[test]
    fn convolution_gf_matches_grid(a in sequence_spec(3), b in sequence_spec(3)) {
        let n = 40;
        let gf = build_convolution_gf(&a, &b).gf;
        let grid = bivariate_series(&gf, n, n).unwrap();
        let brute = convolution_grid(&generate_sequence(&a, n), &generate_sequence(&b, n), n, n).unwrap();
        prop_assert_eq!(grid, brute);
    }

    #[test]
    fn convolution_gf_is_linear_in_each_sequence(
        a in sequence_spec(3),
        b in sequence_spec(3),
        c in nonzero_rational(),
    ) {
        let n = 15;
        let base = bivariate_series(&build_convolution_gf(&a, &b).gf, n, n).unwrap();
        let scaled_a = bivariate_series(&build_convolution_gf(&a.scale_initial(&c), &b).gf, n, n).unwrap();
        let scaled_b = bivariate_series(&build_convolution_gf(&a, &b.scale_initial(&c)).gf, n, n).unwrap();
        for i in 0..n {
            for j in 0..n {
                prop_assert_eq!(&scaled_a[i][j], &(&base[i][j] * &c));
                prop_assert_eq!(&scaled_b[i][j], &(&base[i][j] * &c));
            }
        }
    }

    #[test]
    fn convolution_gf_is_additive_in_initial_terms(
        k in 1usize..=3,
        b in sequence_spec(3),
        u in prop::collection::vec(small_int(), 3),
        v in prop::collection::vec(small_int(), 3),
    ) {
        let n = 12;
        let coeffs = vec![int(1); k];
        let spec = |init: Vec<Rational>| SequenceSpec::new(coeffs.clone(), init).unwrap();
        let u = u[..k].to_vec();
        let v = v[..k].to_vec();
        let sum: Vec<Rational> = u.iter().zip(&v).map(|(x, y)| x + y).collect();
        let grid = |a: SequenceSpec| bivariate_series(&build_convolution_gf(&a, &b).gf, n, n).unwrap();
        let (gu, gv, gs) = (grid(spec(u)), grid(spec(v)), grid(spec(sum)));
        for i in 0..n {
            for j in 0..n {
                prop_assert_eq!(&gs[i][j], &(&gu[i][j] + &gv[i][j]));
            }
        }
    }
}
