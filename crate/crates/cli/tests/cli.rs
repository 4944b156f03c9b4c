use std::process::Command;

use affine_eulerian::{FlagPolynomial, Polynomial, Subset};
use affine_eulerian_cli::output::{flag_json, parse_flag, parse_polynomial, polynomial_json};
use proptest::prelude::*;
use serde_json::Value;

fn affeuler(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_affeuler"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).unwrap(),
        out.status.code().unwrap(),
    )
}

#[test]
fn compute_prints_polynomials() {
    let (out, code) = affeuler(&[
        "compute", "--family", "B", "--rank", "3", "--method", "diagram",
    ]);
    assert_eq!((out.as_str(), code), ("10t + 28t^2 + 10t^3\n", 0));
    let (out, code) = affeuler(&["compute", "--family", "C", "--rank", "1", "--method", "egf"]);
    assert_eq!((out.as_str(), code), ("2t\n", 0));
    let (out, _) = affeuler(&[
        "compute",
        "--family",
        "A",
        "--rank",
        "2",
        "--form",
        "flag",
        "--method",
        "enumerate",
    ]);
    assert_eq!(out, "t0 + t1 + t2 + t0t1 + t0t2 + t1t2\n");
}

#[test]
fn json_output_round_trips() {
    let (out, code) = affeuler(&[
        "--output", "json", "compute", "--family", "E7", "--method", "diagram",
    ]);
    assert_eq!(code, 0);
    let p = parse_polynomial(&out).unwrap();
    assert_eq!(p.coeff(4), 1243232.into());
    assert_eq!(format!("{}\n", polynomial_json(&p)), out);

    let (out, _) = affeuler(&[
        "--output", "json", "compute", "--family", "D", "--rank", "4", "--form", "flag",
    ]);
    let f = parse_flag(&out).unwrap();
    assert_eq!(f.univariate(), Polynomial::from_coeffs([0, 16, 80, 80, 16]));
    assert_eq!(format!("{}\n", flag_json(&f)), out);
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["compute", "--family", "E6", "--method", "enumerate"][..],
        &[
            "compute", "--family", "B", "--rank", "3", "--form", "flag", "--method", "egf",
        ],
        &[
            "compute",
            "--family",
            "B",
            "--rank",
            "3",
            "--statistic",
            "ordinary",
            "--method",
            "diagram",
        ],
        &["compute", "--family", "H3"],
        &["compute", "--family", "G2", "--rank", "3"],
        &["verify", "bogus"],
    ] {
        assert_eq!(affeuler(args).1, 2, "{args:?}");
    }
}

#[test]
fn table1_reports_every_row() {
    let (out, code) = affeuler(&["--output", "json", "table1"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 14);
    assert!(rows.iter().all(|r| r["pass"] == Value::Bool(true)));
    let g2 = rows.iter().find(|r| r["type"] == "G2").unwrap();
    assert_eq!(
        parse_polynomial(&g2["polynomial"].to_string())
            .unwrap()
            .to_string(),
        "6t + 6t^2"
    );
}

#[test]
fn verify_is_deterministic() {
    let args = [
        "--output",
        "json",
        "verify",
        "identities",
        "--max-rank",
        "5",
    ];
    let (first, code) = affeuler(&args);
    assert_eq!(code, 0);
    assert_eq!(affeuler(&args).0, first);
    let v: Value = serde_json::from_str(&first).unwrap();
    assert_eq!(v["ok"], Value::Bool(true));
    assert!(v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["residual"].is_null()));
}

#[test]
fn verify_beyond_the_enumeration_ceiling() {
    let (out, code) = affeuler(&[
        "verify",
        "identities",
        "--max-rank",
        "9",
        "--max-elements",
        "1000",
    ]);
    assert_eq!(code, 0, "{out}");
    assert!(out.ends_with("identities: 41 of 41 passed\n"), "{out}");
}

#[test]
fn torus_suite_passes() {
    let (out, code) = affeuler(&["--output", "csv", "verify", "torus", "--max-rank", "4"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("kind,name,ok,residual\n"));
    assert!(out.lines().skip(1).all(|l| l.contains(",true,")));
}

fn arb_poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(any::<i64>(), 0..12).prop_map(Polynomial::from_coeffs)
}

fn arb_flag() -> impl Strategy<Value = FlagPolynomial> {
    (0usize..6).prop_flat_map(|n| {
        prop::collection::vec((0u64..1 << (n + 1), any::<i64>()), 0..20).prop_map(move |terms| {
            FlagPolynomial::from_terms(n, terms.into_iter().map(|(m, c)| (Subset(m), c))).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn polynomial_json_round_trip(p in arb_poly()) {
        prop_assert_eq!(parse_polynomial(&polynomial_json(&p).to_string()).unwrap(), p);
    }

    #[test]
    fn flag_json_round_trip(p in arb_flag()) {
        prop_assert_eq!(parse_flag(&flag_json(&p).to_string()).unwrap(), p);
    }
}
