//! Exact-arithmetic toolkit for binomial convolutions of k-step Fibonacci
//! sequences.
//!
//! The crate builds bivariate ordinary generating functions
//! `F(x, y) = sum h[n][m] x^n y^m` for `h[n][m] = sum_k C(n,k) a_k b_(m-k)`,
//! extracts their diagonals both by residue summation over the bounded poles
//! of `F(zt, 1/t)/t` and by plain series expansion, and checks a catalog of
//! published identities against brute-force oracles.
//!
//! Everything is exact: scalars are arbitrary-precision rationals, and sums of
//! residues over the roots of a polynomial are computed as traces in a
//! quotient ring, so no algebraic numbers or floats ever appear.

pub mod bipoly;
pub mod catalog;
pub mod error;
pub mod field;
pub mod gf;
pub mod parse;
pub mod poly;
pub mod ratfunc;
pub mod rational;
pub mod recurrence;
pub mod residue;
pub mod series;
pub mod var;
pub mod verify;

pub use bipoly::BiPoly;
pub use error::{Error, Result};
pub use poly::UniPoly;
pub use ratfunc::{BiRatFunc, FactoredRatFunc, Polynomial, UniRatFunc};
pub use rational::Rational;
pub use var::Var;

/// Truncation used by every verification entry point unless overridden.
pub const DEFAULT_TRUNCATION: usize = 200;

/// Number of terms the residue extractor cross-checks against the series
/// diagonal by default.
pub const DEFAULT_CROSS_CHECK_TERMS: usize = 100;
