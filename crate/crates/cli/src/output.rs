//! Text, JSON and CSV renderings of polynomials and check results.

use std::str::FromStr;

use affine_eulerian::verify::{CheckResult, Residual, RootReport, SuiteReport};
use affine_eulerian::{FlagPolynomial, Polynomial, Subset};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

pub fn polynomial_json(p: &Polynomial) -> Value {
    let coefficients: Vec<String> = if p.is_zero() {
        vec!["0".into()]
    } else {
        p.coeffs().iter().map(BigInt::to_string).collect()
    };
    json!({ "variable": "t", "coefficients": coefficients })
}

pub fn flag_json(p: &FlagPolynomial) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(s, c)| json!({ "subset": s.iter().collect::<Vec<_>>(), "coefficient": c.to_string() }))
        .collect();
    json!({ "n": p.n(), "terms": terms })
}

fn bad(msg: impl Into<String>) -> CliError {
    CliError::Json(msg.into())
}

fn big(v: &Value) -> Result<BigInt, CliError> {
    let s = v
        .as_str()
        .ok_or_else(|| bad("coefficients must be decimal strings"))?;
    BigInt::from_str(s).map_err(|_| bad(format!("{s:?} is not an integer")))
}

pub fn parse_polynomial(text: &str) -> Result<Polynomial, CliError> {
    let v: Value = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
    if v.get("variable").and_then(Value::as_str) != Some("t") {
        return Err(bad("expected \"variable\": \"t\""));
    }
    let cs = v
        .get("coefficients")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing \"coefficients\" array"))?;
    Ok(Polynomial::new(
        cs.iter().map(big).collect::<Result<_, _>>()?,
    ))
}

pub fn parse_flag(text: &str) -> Result<FlagPolynomial, CliError> {
    let v: Value = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
    let n = v
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| bad("missing \"n\""))? as usize;
    let terms = v
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing \"terms\" array"))?;
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let subset = t
            .get("subset")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("term without \"subset\""))?
            .iter()
            .map(|x| {
                x.as_u64()
                    .map(|j| j as usize)
                    .ok_or_else(|| bad("subset entries must be integers"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let s: Subset = subset.iter().copied().collect();
        if s.len() != subset.len() {
            return Err(bad("repeated color in subset"));
        }
        out.push((
            s,
            big(t
                .get("coefficient")
                .ok_or_else(|| bad("term without \"coefficient\""))?)?,
        ));
    }
    Ok(FlagPolynomial::from_terms(n, out)?)
}

fn csv_escape(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn render_polynomial(p: &Polynomial, format: Format) -> String {
    match format {
        Format::Text => format!("{p}\n"),
        Format::Json => format!("{}\n", polynomial_json(p)),
        Format::Csv => {
            let mut out = String::from("degree,coefficient\n");
            for (k, c) in p.coeffs().iter().enumerate() {
                out += &format!("{k},{c}\n");
            }
            out
        }
    }
}

pub fn render_flag(p: &FlagPolynomial, format: Format) -> String {
    match format {
        Format::Text => format!("{p}\n"),
        Format::Json => format!("{}\n", flag_json(p)),
        Format::Csv => {
            let mut out = String::from("subset,coefficient\n");
            for (s, c) in p.terms() {
                let colors: Vec<String> = s.iter().map(|j| j.to_string()).collect();
                out += &format!("{},{c}\n", colors.join(" "));
            }
            out
        }
    }
}

pub fn residual_json(r: &Residual) -> Value {
    match r {
        Residual::Univariate(p) => polynomial_json(p),
        Residual::Flag(p) => flag_json(p),
        Residual::Series(s) => json!({
            "variable": "z",
            "egf_coefficients": s.egf_coeffs().iter().map(polynomial_json).collect::<Vec<_>>(),
        }),
    }
}

pub fn residual_text(r: &Residual) -> String {
    match r {
        Residual::Univariate(p) => p.to_string(),
        Residual::Flag(p) => p.to_string(),
        Residual::Series(s) => s
            .egf_coeffs()
            .iter()
            .enumerate()
            .find(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("first difference at z^{k}: ({c}) / {k}!"))
            .unwrap_or_else(|| "0".into()),
    }
}

fn check_json(c: &CheckResult, timings: bool) -> Value {
    let mut v = json!({
        "name": c.name,
        "ok": c.ok,
        "residual": c.residual.as_ref().map(residual_json),
    });
    if timings {
        v["elapsed_ms"] = json!(c.elapsed.as_secs_f64() * 1e3);
    }
    v
}

fn roots_json(r: &RootReport, timings: bool) -> Value {
    let mut v = json!({
        "series": r.name.to_string(),
        "max_index": r.results.last().map(|(n, _)| *n),
        "ok": r.ok(),
        "failures": r.failures(),
    });
    if timings {
        v["elapsed_ms"] = json!(r.elapsed.as_secs_f64() * 1e3);
    }
    v
}

fn check_line(tag: &str, c: &CheckResult, timings: bool) -> String {
    let mut line = format!("{tag} {}", c.name);
    if timings {
        line += &format!(" ({:.1} ms)", c.elapsed.as_secs_f64() * 1e3);
    }
    if let Some(r) = &c.residual {
        line += &format!("  residual: {}", residual_text(r));
    }
    line + "\n"
}

pub fn render_report(suite: &str, report: &SuiteReport, format: Format, timings: bool) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            for c in &report.checks {
                out += &check_line(if c.ok { "PASS" } else { "FAIL" }, c, timings);
            }
            for c in &report.records {
                let tag = if c.ok {
                    "RECORD (holds)"
                } else {
                    "RECORD (fails)"
                };
                out += &check_line(tag, c, timings);
            }
            for r in &report.roots {
                let last = r.results.last().map_or(0, |(n, _)| *n);
                let tag = if r.ok() { "PASS" } else { "FAIL" };
                out += &format!("{tag} real-rooted {} n<={last}", r.name);
                if !r.ok() {
                    out += &format!("  failures: {:?}", r.failures());
                }
                if timings {
                    out += &format!(" ({:.1} ms)", r.elapsed.as_secs_f64() * 1e3);
                }
                out += "\n";
            }
            let failed = report.failures().len() + report.roots.iter().filter(|r| !r.ok()).count();
            let total = report.checks.len() + report.roots.len();
            out += &format!("{suite}: {} of {total} passed\n", total - failed);
            out
        }
        Format::Json => {
            let v = json!({
                "suite": suite,
                "ok": report.ok(),
                "checks": report.checks.iter().map(|c| check_json(c, timings)).collect::<Vec<_>>(),
                "records": report.records.iter().map(|c| check_json(c, timings)).collect::<Vec<_>>(),
                "roots": report.roots.iter().map(|r| roots_json(r, timings)).collect::<Vec<_>>(),
            });
            format!("{v}\n")
        }
        Format::Csv => {
            let mut out = String::from("kind,name,ok,residual");
            out += if timings { ",elapsed_ms\n" } else { "\n" };
            let mut row = |kind: &str, name: &str, ok: bool, residual: String, ms: f64| {
                out += &format!("{kind},{},{ok},{}", csv_escape(name), csv_escape(&residual));
                if timings {
                    out += &format!(",{ms:.3}");
                }
                out += "\n";
            };
            for c in &report.checks {
                let r = c.residual.as_ref().map(residual_text).unwrap_or_default();
                row("check", &c.name, c.ok, r, c.elapsed.as_secs_f64() * 1e3);
            }
            for c in &report.records {
                let r = c.residual.as_ref().map(residual_text).unwrap_or_default();
                row("record", &c.name, c.ok, r, c.elapsed.as_secs_f64() * 1e3);
            }
            for r in &report.roots {
                let failures: Vec<String> = r.failures().iter().map(|n| n.to_string()).collect();
                row(
                    "roots",
                    &r.name.to_string(),
                    r.ok(),
                    failures.join(" "),
                    r.elapsed.as_secs_f64() * 1e3,
                );
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_json_shape() {
        let p = Polynomial::from_coeffs([0, 10, 28, 10]);
        assert_eq!(
            polynomial_json(&p).to_string(),
            r#"{"variable":"t","coefficients":["0","10","28","10"]}"#
        );
        assert_eq!(
            parse_polynomial(&polynomial_json(&p).to_string()).unwrap(),
            p
        );
        assert_eq!(
            parse_polynomial(&polynomial_json(&Polynomial::zero()).to_string()).unwrap(),
            Polynomial::zero()
        );
    }

    #[test]
    fn flag_json_shape() {
        let p = FlagPolynomial::from_terms(
            2,
            [
                (Subset::EMPTY, 1),
                (Subset::from_iter([0, 1]), 2),
                (Subset::from_iter([2]), -1),
            ],
        )
        .unwrap();
        assert_eq!(
            flag_json(&p).to_string(),
            r#"{"n":2,"terms":[{"subset":[],"coefficient":"1"},{"subset":[2],"coefficient":"-1"},{"subset":[0,1],"coefficient":"2"}]}"#
        );
        assert_eq!(parse_flag(&flag_json(&p).to_string()).unwrap(), p);
    }

    #[test]
    fn malformed_json_is_rejected() {
        assert!(parse_polynomial(r#"{"variable":"x","coefficients":["1"]}"#).is_err());
        assert!(parse_polynomial(r#"{"variable":"t","coefficients":[1]}"#).is_err());
        assert!(parse_flag(r#"{"n":1,"terms":[{"subset":[0,0],"coefficient":"1"}]}"#).is_err());
        assert!(parse_flag(r#"{"n":1,"terms":[{"subset":[5],"coefficient":"1"}]}"#).is_err());
    }

    #[test]
    fn csv_escaping() {
        assert_eq!(csv_escape("a,b"), "\"a,b\"");
        assert_eq!(csv_escape("plain"), "plain");
    }
}
