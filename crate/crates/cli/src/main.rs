use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gfdiag::catalog::{self, CatalogGf};
use gfdiag::parse::{parse_bivariate, parse_rational_list, parse_univariate};
use gfdiag::rational::format_rational;
use gfdiag::recurrence::{certify_agreement, confidence, find_min_recurrence, recurrence_to_gf};
use gfdiag::residue::{diagonal_rational, DiagonalStatus};
use gfdiag::series::{
    binomial_convolutions, diagonal_series, generate_sequence, series_of_rational, SequenceSpec,
};
use gfdiag::verify::{self, ClaimReport, Status};
use gfdiag::{BiRatFunc, Error, Rational, UniRatFunc, Var};

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_DOMAIN: u8 = 3;
const EXIT_METHOD: u8 = 4;

#[derive(Parser)]
#[command(
    name = "gfdiag",
    version,
    about = "Exact generating functions for binomial convolutions"
)]
struct Cli {
    /// Emit a JSON envelope instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Truncation {
    /// Number of terms.
    #[arg(long, env = "GFDIAG_N", default_value_t = gfdiag::DEFAULT_TRUNCATION)]
    n: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Taylor coefficients of a rational function of one variable.
    Expand {
        gf: String,
        #[command(flatten)]
        n: Truncation,
    },
    /// sum_k C(n,k) a_k a_(n-k) for a k-step Fibonacci-type sequence.
    Convolve {
        /// Recurrence order.
        #[arg(long)]
        k: usize,
        /// Initial terms, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        init: String,
        #[command(flatten)]
        n: Truncation,
    },
    /// Diagonal of a bivariate rational function in x and y.
    Diagonal {
        /// Catalog id of the input.
        #[arg(long, conflicts_with = "gf_text", required_unless_present = "gf_text")]
        catalog: Option<String>,
        /// Input written out, e.g. "1/((1-x)*(1-y))".
        #[arg(long)]
        gf_text: Option<String>,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
        #[command(flatten)]
        n: Truncation,
    },
    /// Minimal recurrence and generating function for a list of terms.
    GuessGf {
        /// Terms, comma or space separated.
        terms: String,
    },
    /// List catalog entries, or print one.
    Catalog { id: Option<String> },
    /// Check claims against exact computations.
    Verify {
        /// Run every registered claim.
        #[arg(long, conflicts_with = "claim")]
        all: bool,
        /// Claim id; repeatable.
        #[arg(long, required_unless_present = "all")]
        claim: Vec<String>,
        #[command(flatten)]
        n: Truncation,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Series,
    Residue,
    Both,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Series => "series",
            Method::Residue => "residue",
            Method::Both => "both",
        }
    }
}

/// What a command produced: text for humans, a value for `--json`, and the
/// exit code.
struct Output {
    text: String,
    result: Value,
    code: u8,
    status: &'static str,
}

impl Output {
    fn ok(text: String, result: Value) -> Self {
        Output {
            text,
            result,
            code: 0,
            status: "ok",
        }
    }
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. }
            | Error::UnknownClaim(_)
            | Error::UnknownCatalogId(_)
            | Error::InvalidSequence(_)
            | Error::WrongArity { .. }
            | Error::UnexpectedVariable(_)
            | Error::VariableMismatch(..) => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = command_name(&cli.command);
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let outcome = run(&cli.command);
    let (code, envelope, text) = match outcome {
        Ok(out) => (
            out.code,
            json!({ "command": name, "args": argv, "status": out.status, "result": out.result }),
            out.text,
        ),
        Err(f) => {
            let (code, msg) = match f {
                Failure::Usage(m) => (EXIT_USAGE, m),
                Failure::Domain(m) => (EXIT_DOMAIN, m),
            };
            let envelope =
                json!({ "command": name, "args": argv, "status": "error", "error": msg });
            (code, envelope, format!("error: {msg}"))
        }
    };
    // a closed pipe (`| head`) is not an error worth reporting
    let _ = if cli.json {
        let body = serde_json::to_string_pretty(&envelope).expect("json values serialize");
        writeln!(std::io::stdout(), "{body}")
    } else if code == EXIT_USAGE || code == EXIT_DOMAIN {
        writeln!(std::io::stderr(), "{text}")
    } else {
        writeln!(std::io::stdout(), "{text}")
    };
    ExitCode::from(code)
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Expand { .. } => "expand",
        Command::Convolve { .. } => "convolve",
        Command::Diagonal { .. } => "diagonal",
        Command::GuessGf { .. } => "guess-gf",
        Command::Catalog { .. } => "catalog",
        Command::Verify { .. } => "verify",
    }
}

fn run(c: &Command) -> Result<Output, Failure> {
    match c {
        Command::Expand { gf, n } => expand(gf, n.n),
        Command::Convolve { k, init, n } => convolve(*k, init, n.n),
        Command::Diagonal {
            catalog,
            gf_text,
            method,
            n,
        } => diagonal(catalog.as_deref(), gf_text.as_deref(), *method, n.n),
        Command::GuessGf { terms } => guess_gf(terms),
        Command::Catalog { id } => show_catalog(id.as_deref()),
        Command::Verify { all, claim, n } => run_verify(*all, claim, n.n),
    }
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn listing(v: &[Rational]) -> String {
    strings(v).join(" ")
}

fn expand(gf: &str, n: usize) -> Result<Output, Failure> {
    let f = parse_univariate(gf)?;
    let s = series_of_rational(&f, n)?;
    Ok(Output::ok(
        listing(&s.coeffs),
        json!({ "gf": f.to_string(), "var": s.var.name(), "coeffs": strings(&s.coeffs) }),
    ))
}

fn convolve(k: usize, init: &str, n: usize) -> Result<Output, Failure> {
    let initial = parse_rational_list(init)?;
    if initial.len() != k {
        return Err(Failure::Usage(format!(
            "--init has {} terms but --k is {k}",
            initial.len()
        )));
    }
    let spec = SequenceSpec::k_bonacci(initial)?;
    let s = generate_sequence(&spec, n);
    let conv = binomial_convolutions(&s, &s, n)?;
    Ok(Output::ok(
        listing(&conv),
        json!({ "k": k, "init": strings(spec.initial()), "values": strings(&conv) }),
    ))
}

fn diagonal_input(catalog_id: Option<&str>, gf_text: Option<&str>) -> Result<BiRatFunc, Failure> {
    let f = match (catalog_id, gf_text) {
        (Some(id), _) => match catalog::printed_gf(id)? {
            CatalogGf::Bivariate(f) => f,
            CatalogGf::Univariate(_) => {
                return Err(Failure::Usage(format!(
                    "catalog entry `{id}` is not bivariate"
                )))
            }
        },
        (None, Some(text)) => parse_bivariate(text, Var::X, Var::Y)?,
        (None, None) => return Err(Failure::Usage("give --catalog or --gf-text".into())),
    };
    if f.vars() != (Var::X, Var::Y) {
        return Err(Failure::Usage(
            "the diagonal needs a function of x and y".into(),
        ));
    }
    Ok(f)
}

/// Diagonal by guessing from the series: Berlekamp-Massey on `n` terms.
fn series_diagonal(f: &BiRatFunc, n: usize) -> Result<UniRatFunc, Failure> {
    let d = diagonal_series(f, n)?;
    let rec = find_min_recurrence(&d.coeffs).ok_or_else(|| {
        Failure::Domain(format!(
            "no recurrence of order at most {} found in {n} terms",
            n / 2
        ))
    })?;
    Ok(recurrence_to_gf(&rec).reduced_form()?)
}

fn diagonal(
    catalog_id: Option<&str>,
    gf_text: Option<&str>,
    method: Method,
    n: usize,
) -> Result<Output, Failure> {
    let f = diagonal_input(catalog_id, gf_text)?;
    let mut result = json!({ "input": f.to_string(), "method": method.name() });
    let mut lines = Vec::new();
    let mut code = 0;
    let mut status = "ok";
    let series_gf = match method {
        Method::Series | Method::Both => Some(series_diagonal(&f, n)?),
        Method::Residue => None,
    };
    let residue = match method {
        Method::Residue => Some(diagonal_rational(&f, 0)?),
        Method::Both => Some(diagonal_rational(&f, n)?),
        Method::Series => None,
    };
    if let Some(g) = &series_gf {
        lines.push(format!("series: {g}"));
        result["series"] = json!(g.to_string());
    }
    if let Some((g, report)) = &residue {
        lines.push(format!("residue: {g}"));
        result["residue"] = json!(g.to_string());
        result["report"] = serde_json::to_value(report).expect("report serializes");
        if method == Method::Both {
            let agree = series_gf
                .as_ref()
                .map(|s| s.identical_to(g))
                .transpose()?
                .unwrap_or(false);
            result["methods_agree"] = json!(agree);
            match report.status {
                DiagonalStatus::Verified => {
                    lines.push(format!("cross-check: verified against {n} series terms"))
                }
                _ => {
                    code = EXIT_METHOD;
                    status = "method-assumption-violated";
                    lines.push(format!(
                        "cross-check: method assumption violated at n = {} (residue {}, series {})",
                        report.first_mismatch.unwrap_or(0),
                        report.residue_value.as_deref().unwrap_or("pole"),
                        report.series_value.as_deref().unwrap_or("?"),
                    ));
                    lines.push(format!("transform: {}", report.transform));
                    for p in &report.poles {
                        lines.push(format!(
                            "  factor {}: {} kept={} degree={} bounded={}",
                            p.index, p.factor, p.kept, p.degree_in_t, p.bounded_roots
                        ));
                    }
                }
            }
            if code == 0 && !agree {
                code = EXIT_METHOD;
                status = "method-assumption-violated";
                lines.push("series and residue results differ".into());
            }
        }
    }
    Ok(Output {
        text: lines.join("\n"),
        result,
        code,
        status,
    })
}

fn guess_gf(terms: &str) -> Result<Output, Failure> {
    let terms = parse_rational_list(terms)?;
    let rec = find_min_recurrence(&terms).ok_or_else(|| {
        Failure::Domain(format!(
            "no recurrence of order at most {} fits {} terms",
            terms.len() / 2,
            terms.len()
        ))
    })?;
    let gf = recurrence_to_gf(&rec).reduced_form()?;
    let agreement = certify_agreement(&gf, &terms)?;
    let conf = confidence(&rec, terms.len());
    let text = format!(
        "order: {}\ncoefficients: {}\ngf: {gf}\nconfidence: {conf}",
        rec.order(),
        listing(&rec.coeffs)
    );
    Ok(Output::ok(
        text,
        json!({
            "order": rec.order(),
            "coefficients": strings(&rec.coeffs),
            "initial": strings(&rec.initial),
            "gf": gf.to_string(),
            "confidence": conf,
            "agrees": agreement.agrees,
        }),
    ))
}

fn show_catalog(id: Option<&str>) -> Result<Output, Failure> {
    match id {
        None => {
            let entries = catalog::entries();
            let width = entries.iter().map(|e| e.id.len()).max().unwrap_or(0);
            let text = entries
                .iter()
                .map(|e| format!("{:width$}  {}", e.id, e.description))
                .collect::<Vec<_>>()
                .join("\n");
            let list: Vec<Value> = entries
                .iter()
                .map(|e| json!({ "id": e.id, "description": e.description }))
                .collect();
            Ok(Output::ok(text, json!(list)))
        }
        Some(id) => {
            let gf = catalog::printed_gf(id)?;
            let entry = catalog::entries()
                .iter()
                .find(|e| e.id == id)
                .expect("printed_gf found it");
            Ok(Output::ok(
                gf.to_string(),
                json!({ "id": id, "description": entry.description, "gf": gf.to_string() }),
            ))
        }
    }
}

fn claim_line(r: &ClaimReport) -> String {
    let mut line = format!(
        "{}  {:22} expected {:6} {}",
        r.status,
        r.id,
        r.expected,
        if r.matches_expected {
            "ok"
        } else {
            "UNEXPECTED"
        }
    );
    if let Some(c) = r.convention {
        line.push_str(&format!("  convention {c}"));
    }
    if r.status == Status::Fail {
        line.push_str(&format!(
            "\n      first mismatch {}: {} vs {}",
            r.first_mismatch.map_or("-".into(), |i| i.to_string()),
            r.lhs,
            r.rhs
        ));
    }
    if !r.detail.is_empty() {
        line.push_str(&format!("\n      {}", r.detail));
    }
    line
}

fn run_verify(all: bool, ids: &[String], n: usize) -> Result<Output, Failure> {
    let reports = if all {
        verify::run_all(n)?
    } else {
        let mut v = ids
            .iter()
            .map(|id| verify::run_claim(id, n))
            .collect::<Result<Vec<_>, _>>()?;
        v.sort_by(|a, b| a.id.cmp(&b.id));
        v
    };
    let matched = reports.iter().all(|r| r.matches_expected);
    let text = reports
        .iter()
        .map(claim_line)
        .collect::<Vec<_>>()
        .join("\n");
    Ok(Output {
        text,
        result: serde_json::to_value(&reports).expect("reports serialize"),
        code: if matched { 0 } else { EXIT_MISMATCH },
        status: if matched { "ok" } else { "unexpected-outcome" },
    })
}
