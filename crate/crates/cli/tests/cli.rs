use std::process::{Command, Output};

use serde_json::Value;

fn gfdiag(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gfdiag"))
        .args(args)
        .env_remove("GFDIAG_N")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim().to_string()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let o = gfdiag(&all);
    let v = serde_json::from_slice(&o.stdout).expect("valid JSON");
    (o.status.code().unwrap(), v)
}

fn has_float(v: &Value) -> bool {
    match v {
        Value::Number(n) => n.is_f64(),
        Value::Array(a) => a.iter().any(has_float),
        Value::Object(m) => m.values().any(has_float),
        _ => false,
    }
}

#[test]
fn expand_u_sequence() {
    let o = gfdiag(&["expand", "1/(1-2*z+2*z^3)", "--n", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1 2 4 6 8 8");
}

#[test]
fn expand_geometric() {
    assert_eq!(stdout(&gfdiag(&["expand", "1/(1-z)", "--n", "3"])), "1 1 1");
}

#[test]
fn expand_pole_at_origin_is_a_domain_error() {
    assert_eq!(gfdiag(&["expand", "1/z"]).status.code(), Some(3));
}

#[test]
fn expand_parse_error_is_usage() {
    assert_eq!(gfdiag(&["expand", "1/(1-"]).status.code(), Some(2));
}

#[test]
fn truncation_from_environment_and_flag() {
    let run = |args: &[&str]| {
        let o = Command::new(env!("CARGO_BIN_EXE_gfdiag"))
            .args(args)
            .env("GFDIAG_N", "4")
            .output()
            .unwrap();
        stdout(&o)
    };
    assert_eq!(run(&["expand", "1/(1-z)"]), "1 1 1 1");
    assert_eq!(run(&["expand", "1/(1-z)", "--n", "2"]), "1 1");
}

#[test]
fn default_truncation_is_200() {
    let o = gfdiag(&["expand", "1/(1-z)"]);
    assert_eq!(stdout(&o).split(' ').count(), 200);
}

#[test]
fn convolve_examples() {
    assert_eq!(
        stdout(&gfdiag(&[
            "convolve", "--k", "2", "--init", "0,1", "--n", "4"
        ])),
        "0 0 2 6"
    );
    assert_eq!(
        stdout(&gfdiag(&[
            "convolve", "--k", "3", "--init", "0,1,1", "--n", "6"
        ])),
        "0 0 2 6 22 80"
    );
    assert_eq!(
        stdout(&gfdiag(&[
            "convolve", "--k", "3", "--init", "0,0,0", "--n", "5"
        ])),
        "0 0 0 0 0"
    );
}

#[test]
fn convolve_malformed_init() {
    assert_eq!(
        gfdiag(&["convolve", "--k", "2", "--init", "0,x"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        gfdiag(&["convolve", "--k", "3", "--init", "0,1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn diagonal_tribonacci_both_methods() {
    let (code, v) = json(&[
        "diagonal",
        "--catalog",
        "trib.G",
        "--method",
        "both",
        "--n",
        "100",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "ok");
    assert_eq!(v["result"]["report"]["status"], "verified");
    assert_eq!(v["result"]["methods_agree"], true);
    assert_eq!(
        v["result"]["residue"],
        "2*(z^2 - z^3 - z^4 - 2*z^5)/(1 - 4*z + 2*z^3 + 12*z^4 - 8*z^5 - 16*z^6)"
    );
}

#[test]
fn diagonal_product_of_geometrics() {
    let o = gfdiag(&[
        "diagonal",
        "--gf-text",
        "1/((1-x)*(1-y))",
        "--method",
        "series",
        "--n",
        "20",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "series: 1/(1 - z)");
}

#[test]
fn diagonal_fibonacci_residue() {
    let o = gfdiag(&[
        "diagonal",
        "--catalog",
        "fib.H.derived",
        "--method",
        "residue",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "residue: 2*(z^2)/(1 - 3*z - 2*z^2 + 4*z^3)");
}

#[test]
fn diagonal_violation_exits_4() {
    let o = gfdiag(&[
        "diagonal",
        "--gf-text",
        "1/(1-x-y)",
        "--method",
        "both",
        "--n",
        "20",
    ]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stdout(&o).contains("method assumption violated"));
}

#[test]
fn diagonal_rejects_univariate_catalog_entry() {
    assert_eq!(
        gfdiag(&["diagonal", "--catalog", "trib.U"]).status.code(),
        Some(2)
    );
}

#[test]
fn guess_fibonacci() {
    let (code, v) = json(&["guess-gf", "0,1,1,2,3,5,8,13,21,34"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["order"], 2);
    assert_eq!(v["result"]["gf"], "(z)/(1 - z - z^2)");
}

#[test]
fn guess_with_too_few_terms() {
    assert_eq!(gfdiag(&["guess-gf", "1,2"]).status.code(), Some(3));
}

#[test]
fn catalog_listing_and_entry() {
    let o = gfdiag(&["catalog"]);
    assert!(stdout(&o)
        .lines()
        .any(|l| l.starts_with("trib.diag.printed")));
    let o = gfdiag(&["catalog", "trib.U"]);
    assert_eq!(stdout(&o), "1/(1 - 2*z + 2*z^3)");
    assert_eq!(gfdiag(&["catalog", "nope"]).status.code(), Some(2));
}

#[test]
fn verify_single_claim() {
    let o = gfdiag(&["verify", "--claim", "fib.closed_form", "--n", "200"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS"));
}

#[test]
fn verify_unknown_claim() {
    assert_eq!(
        gfdiag(&["verify", "--claim", "no.such"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_all_json_is_exact_and_ordered() {
    let (code, v) = json(&["verify", "--all", "--n", "40"]);
    assert_eq!(code, 0);
    assert!(!has_float(&v));
    let reports = v["result"].as_array().unwrap();
    let ids: Vec<&str> = reports.iter().map(|r| r["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort_unstable();
    assert_eq!(ids, sorted);
    for r in reports {
        assert_eq!(r["matches_expected"], true, "{}", r["id"]);
        if r["status"] == "fail" {
            assert!(r["first_mismatch"].is_u64(), "{}", r["id"]);
        }
    }
}

#[test]
fn json_values_round_trip() {
    let (_, v) = json(&["expand", "1/(3-z)", "--n", "4"]);
    let coeffs: Vec<&str> = v["result"]["coeffs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap())
        .collect();
    assert_eq!(coeffs, ["1/3", "1/9", "1/27", "1/81"]);
    let gf = v["result"]["gf"].as_str().unwrap();
    assert_eq!(
        stdout(&gfdiag(&["expand", gf, "--n", "4"])),
        "1/3 1/9 1/27 1/81"
    );
}
