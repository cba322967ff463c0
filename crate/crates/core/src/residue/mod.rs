//! Diagonal extraction by residues.
//!
//! The diagonal of `F(x, y)` is the sum of residues of `F(zt, 1/t)/t` at the
//! poles in `t` that stay bounded as `z -> 0`. Each such sum over the roots of
//! one polynomial factor is computed as a trace, so the result is an exact
//! rational function of `z` without ever naming a root.

mod hk;
mod partial;
mod trace;
mod zfrac;

pub use hk::{classify_poles, hk_transform, HKTransformed, PoleClass};
pub use partial::{partial_fractions_q, PartialFraction, PartialFractions};
pub use trace::{residue_trace, residue_trace_qz};
pub use zfrac::ZFrac;

use num_traits::Zero;
use serde::Serialize;

use crate::error::Result;
use crate::ratfunc::{BiRatFunc, UniRatFunc};
use crate::rational::format_rational;
use crate::series::{diagonal_series, series_of_rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DiagonalStatus {
    /// Series of the residue result matched the series diagonal.
    Verified,
    /// No cross-check was requested.
    Unchecked,
    MethodAssumptionViolated,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiagnosticReport {
    /// `F(zt, 1/t)/t` in the text format.
    pub transform: String,
    pub poles: Vec<PoleClass>,
    /// Residue sum per kept factor, indexed like `poles`.
    pub residues: Vec<Option<String>>,
    pub cross_check_terms: usize,
    pub status: DiagonalStatus,
    pub first_mismatch: Option<usize>,
    /// Residue-side coefficient at the first mismatch.
    pub residue_value: Option<String>,
    /// Series-side coefficient at the first mismatch.
    pub series_value: Option<String>,
    /// Kept factors whose roots are only partly bounded.
    pub mixed_factors: Vec<usize>,
}

/// Sum of residues over all kept factors, reduced, with the denominator's
/// constant term scaled to 1. The result is cross-checked against the series
/// diagonal for `check_terms` coefficients (0 skips the check).
pub fn diagonal_rational(
    f: &BiRatFunc,
    check_terms: usize,
) -> Result<(UniRatFunc, DiagnosticReport)> {
    let h = hk_transform(f);
    let poles = classify_poles(&h);
    let mut total = ZFrac::zero();
    let mut residues = Vec::with_capacity(poles.len());
    for pole in &poles {
        if pole.kept {
            let r = residue_trace_qz(&h, pole)?;
            residues.push(Some(r.to_string()));
            total = total + r;
        } else {
            residues.push(None);
        }
    }
    let result = total.to_ratfunc().reduced_form()?;
    let mut report = DiagnosticReport {
        transform: h.to_string(),
        mixed_factors: poles
            .iter()
            .filter(|p| p.is_mixed())
            .map(|p| p.index)
            .collect(),
        poles,
        residues,
        cross_check_terms: check_terms,
        status: DiagonalStatus::Unchecked,
        first_mismatch: None,
        residue_value: None,
        series_value: None,
    };
    if check_terms > 0 {
        let expected = diagonal_series(f, check_terms)?;
        let got = series_of_rational(&result, check_terms);
        match got {
            Ok(got) => {
                match got
                    .coeffs
                    .iter()
                    .zip(&expected.coeffs)
                    .position(|(a, b)| a != b)
                {
                    None => report.status = DiagonalStatus::Verified,
                    Some(i) => {
                        report.status = DiagonalStatus::MethodAssumptionViolated;
                        report.first_mismatch = Some(i);
                        report.residue_value = Some(format_rational(&got.coeffs[i]));
                        report.series_value = Some(format_rational(&expected.coeffs[i]));
                    }
                }
            }
            Err(_) => {
                // the residue sum has a pole at z = 0, which no diagonal can
                report.status = DiagonalStatus::MethodAssumptionViolated;
                report.first_mismatch = Some(0);
                report.series_value = expected.coeffs.first().map(format_rational);
            }
        }
    }
    Ok((result, report))
}
