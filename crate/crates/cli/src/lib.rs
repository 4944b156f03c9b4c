//! Command implementations behind the `affeuler` binary. Each command
//! returns its full output so it can be tested without spawning a process.

use affine_eulerian::diagram::affine_eulerian_formula;
use affine_eulerian::groups;
use affine_eulerian::series::{closed_form, extract_from};
use affine_eulerian::verify::{run_suite, table1, Ceiling, Suite, SuiteOptions};
use affine_eulerian::{Error, Family, SeriesName};
use serde_json::json;

pub mod output;

use output::{polynomial_json, render_flag, render_polynomial, render_report, Format};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("malformed JSON: {0}")]
    Json(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::Internal(_) | Error::NotSymmetric { .. }) => 1,
            _ => 2,
        }
    }
}

/// Output text and process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn success(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Statistic {
    Ordinary,
    Affine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Form {
    Univariate,
    Flag,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    Enumerate,
    Diagram,
    Egf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComputeRequest {
    pub family: Family,
    /// Coxeter rank; `None` only for exceptional types.
    pub rank: Option<usize>,
    pub statistic: Statistic,
    pub form: Form,
    pub method: Method,
    pub order: usize,
    pub max_elements: u64,
    pub output: Format,
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn resolve_rank(family: Family, rank: Option<usize>) -> Result<usize, CliError> {
    match (family.fixed_rank(), rank) {
        (Some(r), None) => Ok(r),
        (Some(r), Some(k)) if r == k => Ok(r),
        (Some(r), Some(k)) => Err(usage(format!("{family} has rank {r}, not {k}"))),
        (None, Some(k)) if k >= 1 => Ok(k),
        (None, _) => Err(usage(format!(
            "--rank (at least 1) is required for {family}"
        ))),
    }
}

pub fn compute(req: &ComputeRequest) -> Result<Outcome, CliError> {
    let rank = resolve_rank(req.family, req.rank)?;
    let affine = req.statistic == Statistic::Affine;
    let degree = if req.family == Family::A {
        rank + 1
    } else {
        rank
    };
    let render = |p| Outcome::success(render_polynomial(&p, req.output));
    match req.method {
        Method::Enumerate => {
            if !req.family.is_classical() {
                return Err(usage(
                    "enumeration covers the classical families A, B, C, D only",
                ));
            }
            if !Ceiling::new(req.max_elements).enumerable(req.family, degree) {
                return Err(usage(format!(
                    "{}{rank} has more than {} elements; raise --max-elements or use another method",
                    req.family, req.max_elements
                )));
            }
            Ok(match req.form {
                Form::Univariate => render(groups::brute_eulerian(req.family, degree, affine)?),
                Form::Flag => Outcome::success(render_flag(
                    &groups::brute_flag_eulerian(req.family, degree, affine)?,
                    req.output,
                )),
            })
        }
        Method::Diagram => {
            if !affine {
                return Err(usage(
                    "the diagram method computes the affine statistic only",
                ));
            }
            let flag = affine_eulerian_formula(req.family, rank)?;
            Ok(match req.form {
                Form::Univariate => render(flag.univariate()),
                Form::Flag => Outcome::success(render_flag(&flag, req.output)),
            })
        }
        Method::Egf => {
            if req.form == Form::Flag {
                return Err(usage("the egf method computes univariate polynomials only"));
            }
            if !req.family.is_classical() {
                return Err(usage(
                    "generating functions cover the classical families A, B, C, D only",
                ));
            }
            let name = SeriesName::for_family(req.family, affine)?;
            if degree > req.order {
                return Err(usage(format!(
                    "index {degree} exceeds the series truncation --order {}",
                    req.order
                )));
            }
            Ok(render(extract_from(
                name,
                &closed_form(name, req.order),
                degree,
            )?))
        }
    }
}

pub fn table1(format: Format) -> Result<Outcome, CliError> {
    let mut results = Vec::new();
    for row in table1::rows() {
        let (computed, check) = table1::check_row(&row)?;
        results.push((row, computed, check));
    }
    let all_ok = results.iter().all(|(_, _, c)| c.ok);
    let stdout = match format {
        Format::Text => {
            let mut out = String::new();
            for (row, computed, check) in &results {
                let status = if check.ok { "pass" } else { "FAIL" };
                out += &format!("{:<4} {status}  {computed}\n", row.label());
                if !check.ok {
                    out += &format!("     expected {}\n", row.expected);
                }
            }
            out
        }
        Format::Json => {
            let rows: Vec<_> = results
                .iter()
                .map(|(row, computed, check)| {
                    json!({
                        "type": row.label(),
                        "rank": row.rank,
                        "polynomial": polynomial_json(computed),
                        "expected": polynomial_json(&row.expected),
                        "pass": check.ok,
                    })
                })
                .collect();
            format!("{}\n", json!({ "rows": rows, "ok": all_ok }))
        }
        Format::Csv => {
            let mut out = String::from("type,rank,polynomial,expected,pass\n");
            for (row, computed, check) in &results {
                out += &format!(
                    "{},{},{computed},{},{}\n",
                    row.label(),
                    row.rank,
                    row.expected,
                    check.ok
                );
            }
            out
        }
    };
    Ok(Outcome {
        stdout,
        code: if all_ok { 0 } else { 1 },
    })
}

pub fn verify(
    suite: Suite,
    options: &SuiteOptions,
    format: Format,
    timings: bool,
) -> Result<Outcome, CliError> {
    let report = run_suite(suite, options)?;
    Ok(Outcome {
        stdout: render_report(&suite.to_string(), &report, format, timings),
        code: if report.ok() { 0 } else { 1 },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn req(
        family: Family,
        rank: Option<usize>,
        statistic: Statistic,
        form: Form,
        method: Method,
    ) -> ComputeRequest {
        ComputeRequest {
            family,
            rank,
            statistic,
            form,
            method,
            order: 40,
            max_elements: 10_000_000,
            output: Format::Text,
        }
    }

    #[test]
    fn compute_examples() {
        let out = compute(&req(
            Family::B,
            Some(3),
            Statistic::Affine,
            Form::Univariate,
            Method::Diagram,
        ))
        .unwrap();
        assert_eq!(out.stdout, "10t + 28t^2 + 10t^3\n");
        let out = compute(&req(
            Family::A,
            Some(2),
            Statistic::Affine,
            Form::Flag,
            Method::Enumerate,
        ))
        .unwrap();
        assert_eq!(out.stdout, "t0 + t1 + t2 + t0t1 + t0t2 + t1t2\n");
        let out = compute(&req(
            Family::C,
            Some(1),
            Statistic::Affine,
            Form::Univariate,
            Method::Egf,
        ))
        .unwrap();
        assert_eq!(out.stdout, "2t\n");
        let out = compute(&req(
            Family::E8,
            None,
            Statistic::Affine,
            Form::Univariate,
            Method::Diagram,
        ))
        .unwrap();
        assert!(out.stdout.starts_with("157200t + "));
    }

    #[test]
    fn methods_agree() {
        for family in Family::CLASSICAL {
            for rank in 3..=5 {
                let get = |statistic, method| {
                    compute(&req(
                        family,
                        Some(rank),
                        statistic,
                        Form::Univariate,
                        method,
                    ))
                    .unwrap()
                    .stdout
                };
                let e = get(Statistic::Affine, Method::Enumerate);
                assert_eq!(e, get(Statistic::Affine, Method::Diagram), "{family}{rank}");
                assert_eq!(e, get(Statistic::Affine, Method::Egf), "{family}{rank}");
                assert_eq!(
                    get(Statistic::Ordinary, Method::Enumerate),
                    get(Statistic::Ordinary, Method::Egf)
                );
            }
        }
    }

    #[test]
    fn invalid_combinations_are_usage_errors() {
        let bad = [
            req(
                Family::E6,
                None,
                Statistic::Affine,
                Form::Univariate,
                Method::Enumerate,
            ),
            req(
                Family::B,
                Some(3),
                Statistic::Ordinary,
                Form::Univariate,
                Method::Diagram,
            ),
            req(
                Family::B,
                Some(3),
                Statistic::Affine,
                Form::Flag,
                Method::Egf,
            ),
            req(
                Family::B,
                None,
                Statistic::Affine,
                Form::Univariate,
                Method::Diagram,
            ),
            req(
                Family::F4,
                Some(5),
                Statistic::Affine,
                Form::Univariate,
                Method::Diagram,
            ),
            req(
                Family::B,
                Some(9),
                Statistic::Affine,
                Form::Univariate,
                Method::Enumerate,
            ),
            req(
                Family::D,
                Some(2),
                Statistic::Affine,
                Form::Univariate,
                Method::Diagram,
            ),
        ];
        for r in bad {
            let err = compute(&r).unwrap_err();
            assert_eq!(err.exit_code(), 2, "{r:?}: {err}");
        }
    }

    #[test]
    fn table_passes() {
        let out = table1(Format::Csv).unwrap();
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("G2,2,6t + 6t^2,6t + 6t^2,true"));
        assert!(out
            .stdout
            .contains("D5,5,44t + 464t^2 + 904t^3 + 464t^4 + 44t^5"));
    }
}
