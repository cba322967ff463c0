//! Named generating functions: printed displays transcribed verbatim and
//! their counterparts built from the sequences.

use crate::error::{Error, Result};
use crate::gf::build_convolution_gf;
use crate::parse::{parse_bivariate, parse_univariate_in};
use crate::ratfunc::{BiRatFunc, UniRatFunc};
use crate::series::{Convention, SequenceSpec};
use crate::var::Var;

#[derive(Debug, Clone, PartialEq)]
pub enum CatalogGf {
    Univariate(UniRatFunc),
    Bivariate(BiRatFunc),
}

impl std::fmt::Display for CatalogGf {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CatalogGf::Univariate(g) => g.fmt(f),
            CatalogGf::Bivariate(g) => g.fmt(f),
        }
    }
}

enum Source {
    Bivariate(&'static str, Var, Var),
    Univariate(&'static str, Var),
    /// Convolution GF of the order-`k` family with itself.
    Convolution(usize, Convention),
}

pub struct CatalogEntry {
    pub id: &'static str,
    pub description: &'static str,
    source: Source,
}

const ENTRIES: &[CatalogEntry] = &[
    CatalogEntry {
        id: "fib.H.derived",
        description: "Fibonacci convolution GF built from the sequence GF z/(1-z-z^2)",
        source: Source::Convolution(2, Convention::B),
    },
    CatalogEntry {
        id: "fib.H.printed",
        description: "Fibonacci convolution GF as printed",
        source: Source::Bivariate(
            "x*y^2/((1-2*x+x^2-x*y-x^2*y+x^2*y^2)*(1-y-y^2))",
            Var::X,
            Var::Y,
        ),
    },
    CatalogEntry {
        id: "fib.transform.printed",
        description: "printed H(zt, 1/t)/t for the Fibonacci case",
        source: Source::Bivariate(
            "z/((1-2*z*t+z^2*t^2-z+t*z^2-z^2)*(t^2-t-1))",
            Var::T,
            Var::Z,
        ),
    },
    CatalogEntry {
        id: "fib.diag.printed",
        description: "printed Fibonacci diagonal",
        source: Source::Univariate("z^2/((1-z)*(1-2*z-4*z^2))", Var::Z),
    },
    CatalogEntry {
        id: "fib.decomposition",
        description: "printed partial fractions with the alpha/beta pair recombined over Q",
        source: Source::Univariate("-2/5/(1-z) + 1/5*(2-2*z)/(1-2*z-4*z^2)", Var::Z),
    },
    CatalogEntry {
        id: "trib.G",
        description: "Tribonacci convolution GF from z/(1-z-z^2-z^3)",
        source: Source::Convolution(3, Convention::B),
    },
    CatalogEntry {
        id: "trib.G.unshifted",
        description: "Tribonacci convolution GF from 1/(1-z-z^2-z^3)",
        source: Source::Convolution(3, Convention::A),
    },
    CatalogEntry {
        id: "trib.diag.printed",
        description: "printed two-term Tribonacci diagonal",
        source: Source::Univariate(
            "1/11*(1+z+10*z^2)/(1-2*z-4*z^2-8*z^3) - 1/11*(1+z-8*z^2)/(1-2*z+2*z^3)",
            Var::Z,
        ),
    },
    CatalogEntry {
        id: "trib.first_term",
        description: "first term of the printed Tribonacci diagonal",
        source: Source::Univariate("1/11*(1+z+10*z^2)/(1-2*z-4*z^2-8*z^3)", Var::Z),
    },
    CatalogEntry {
        id: "trib.second_term",
        description: "second term of the printed Tribonacci diagonal",
        source: Source::Univariate("-1/11*(1+z-8*z^2)/(1-2*z+2*z^3)", Var::Z),
    },
    CatalogEntry {
        id: "trib.U",
        description: "generating function of the U sequence",
        source: Source::Univariate("1/(1-2*z+2*z^3)", Var::Z),
    },
    CatalogEntry {
        id: "trib.subst.lhs",
        description: "z^3/(1-z-z^2-z^3), before substituting z = -x/(1-x)",
        source: Source::Univariate("z^3/(1-z-z^2-z^3)", Var::Z),
    },
    CatalogEntry {
        id: "trib.subst.rhs",
        description: "printed result of the substitution",
        source: Source::Univariate("-x^3/(1-2*x+2*x^3)", Var::X),
    },
    CatalogEntry {
        id: "tetra.G",
        description: "Tetranacci convolution GF from z/(1-z-z^2-z^3-z^4)",
        source: Source::Convolution(4, Convention::B),
    },
    CatalogEntry {
        id: "tetra.diag.printed",
        description: "printed Tetranacci diagonal",
        source: Source::Univariate(
            "2*z^2*(-z^3-2*z^4+8*z^5+6*z^6+4*z^7+1-2*z-z^2)\
             /((16*z^4+8*z^3+4*z^2+2*z-1)*(z^6+6*z^5-4*z^4-3*z^3-z^2+3*z-1))",
            Var::Z,
        ),
    },
    CatalogEntry {
        id: "penta.G",
        description: "Pentanacci convolution GF from z/(1-z-z^2-z^3-z^4-z^5)",
        source: Source::Convolution(5, Convention::B),
    },
    CatalogEntry {
        id: "penta.diag.printed",
        description: "printed Pentanacci diagonal",
        source: Source::Univariate(
            "-2*z^2*(-z^3-z^4-25*z^6+19*z^8+52*z^10+40*z^9-1+3*z)\
             /((32*z^5+16*z^4+8*z^3+4*z^2+2*z-1)\
             *(4*z^10-4*z^9-15*z^8-12*z^7+25*z^6-2*z^4-4*z^3-3*z^2+4*z-1))",
            Var::Z,
        ),
    },
];

pub fn entries() -> &'static [CatalogEntry] {
    ENTRIES
}

pub fn printed_gf(id: &str) -> Result<CatalogGf> {
    let entry = ENTRIES
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::UnknownCatalogId(id.to_string()))?;
    entry.build()
}

/// Like [`printed_gf`] but for entries known to be univariate.
pub fn univariate(id: &str) -> Result<UniRatFunc> {
    match printed_gf(id)? {
        CatalogGf::Univariate(f) => Ok(f),
        CatalogGf::Bivariate(_) => Err(Error::WrongArity {
            expected: "univariate",
        }),
    }
}

pub fn bivariate(id: &str) -> Result<BiRatFunc> {
    match printed_gf(id)? {
        CatalogGf::Bivariate(f) => Ok(f),
        CatalogGf::Univariate(_) => Err(Error::WrongArity {
            expected: "bivariate",
        }),
    }
}

/// Convolution GF of the order-`k` family under `convention`, in `(x, y)`.
pub fn convolution_gf(k: usize, convention: Convention) -> Result<BiRatFunc> {
    let spec = SequenceSpec::k_bonacci_convention(k, convention)?;
    Ok(build_convolution_gf(&spec, &spec).gf)
}

impl CatalogEntry {
    pub fn build(&self) -> Result<CatalogGf> {
        Ok(match self.source {
            Source::Bivariate(text, outer, inner) => {
                CatalogGf::Bivariate(parse_bivariate(text, outer, inner)?)
            }
            Source::Univariate(text, var) => CatalogGf::Univariate(parse_univariate_in(text, var)?),
            Source::Convolution(k, convention) => {
                CatalogGf::Bivariate(convolution_gf(k, convention)?)
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_builds() {
        for e in entries() {
            e.build().unwrap_or_else(|err| panic!("{}: {err}", e.id));
        }
    }

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<_> = entries().iter().map(|e| e.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), entries().len());
    }

    #[test]
    fn unknown_id() {
        assert!(matches!(
            printed_gf("no.such"),
            Err(Error::UnknownCatalogId(_))
        ));
    }

    #[test]
    fn printed_h_has_the_printed_denominator() {
        let h = bivariate("fib.H.printed").unwrap();
        assert_eq!(h.denom_factors().len(), 2);
    }
}
