//! Named groups of checks, run in parallel.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::family::Family;
use crate::series::{extract, SeriesName};
use crate::verify::egf::{self, check_egf, check_realrooted, check_series_identities, RootReport};
use crate::verify::expansions::{self, FlagFormula, GammaExpansion};
use crate::verify::identities::{check_cyclic, check_identity, Cyclic, Identity};
use crate::verify::{table1, timed, torus_checks, Ceiling, CheckResult, Residual};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Identities,
    Flags,
    Gamma,
    Egf,
    Torus,
    Roots,
    All,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Identities,
        Suite::Flags,
        Suite::Gamma,
        Suite::Egf,
        Suite::Torus,
        Suite::Roots,
        Suite::All,
    ];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Identities => "identities",
            Suite::Flags => "flags",
            Suite::Gamma => "gamma",
            Suite::Egf => "egf",
            Suite::Torus => "torus",
            Suite::Roots => "roots",
            Suite::All => "all",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Input(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteOptions {
    /// Largest `n` for every statement in the suite.
    pub max_rank: usize,
    /// Series truncation for the generating-function identities.
    pub order: usize,
    pub ceiling: Ceiling,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            max_rank: 7,
            order: 40,
            ceiling: Ceiling::default(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SuiteReport {
    /// Checks that must pass.
    pub checks: Vec<CheckResult>,
    /// Outcomes reported without being asserted.
    pub records: Vec<CheckResult>,
    pub roots: Vec<RootReport>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok) && self.roots.iter().all(RootReport::ok)
    }

    pub fn failures(&self) -> Vec<&CheckResult> {
        self.checks.iter().filter(|c| !c.ok).collect()
    }

    fn extend(&mut self, other: SuiteReport) {
        self.checks.extend(other.checks);
        self.records.extend(other.records);
        self.roots.extend(other.roots);
    }
}

type Task<'a> = Box<dyn Fn() -> Result<Vec<CheckResult>> + Send + Sync + 'a>;

fn run_tasks(tasks: Vec<Task<'_>>) -> Result<Vec<CheckResult>> {
    let nested = tasks.par_iter().map(|t| t()).collect::<Result<Vec<_>>>()?;
    Ok(nested.into_iter().flatten().collect())
}

fn identity_tasks(o: &SuiteOptions) -> Vec<Task<'static>> {
    let mut tasks: Vec<Task> = Vec::new();
    let c = o.ceiling;
    for which in Identity::ALL {
        for n in which.min_n()..=o.max_rank {
            tasks.push(Box::new(move || Ok(vec![check_identity(which, n, c)?])));
        }
    }
    for which in [Cyclic::A, Cyclic::C] {
        for n in 1..=o.max_rank {
            tasks.push(Box::new(move || Ok(vec![check_cyclic(which, n, c)?])));
        }
    }
    tasks
}

fn flag_tasks(o: &SuiteOptions) -> Vec<Task<'static>> {
    let mut tasks: Vec<Task> = Vec::new();
    let c = o.ceiling;
    for formula in FlagFormula::ALL {
        for n in formula.min_n()..=o.max_rank {
            tasks.push(Box::new(move || {
                Ok(vec![expansions::check_flag_formula(formula, n, c)?])
            }));
        }
    }
    tasks
}

fn gamma_tasks(o: &SuiteOptions) -> Vec<Task<'static>> {
    let mut tasks: Vec<Task> = Vec::new();
    let c = o.ceiling;
    for which in GammaExpansion::ALL {
        for n in which.min_n()..=o.max_rank {
            tasks.push(Box::new(move || {
                Ok(vec![expansions::check_gamma_expansion(which, n, c)?])
            }));
        }
    }
    let max = o.max_rank;
    for name in [
        SeriesName::AffA,
        SeriesName::AffB,
        SeriesName::AffC,
        SeriesName::AffD,
    ] {
        tasks.push(Box::new(move || egf::check_series_gamma(name, max)));
    }
    tasks.push(Box::new(|| {
        table1::rows()
            .iter()
            .filter(|r| !r.family.is_classical())
            .map(|r| {
                egf::check_gamma_nonnegative(
                    format!("gamma>=0 {}", r.label()),
                    &table1::compute_row(r)?,
                    r.rank + 1,
                )
            })
            .collect()
    }));
    tasks
}

fn egf_tasks(o: &SuiteOptions) -> Vec<Task<'static>> {
    let mut tasks: Vec<Task> = Vec::new();
    let (c, max, order) = (o.ceiling, o.max_rank, o.order);
    for name in SeriesName::ALL {
        tasks.push(Box::new(move || check_egf(name, max, c)));
    }
    tasks.push(Box::new(move || check_series_identities(order)));
    tasks.push(Box::new(|| {
        table1::rows()
            .iter()
            .filter(|r| matches!(r.family, Family::B | Family::D))
            .map(|r| {
                let name = SeriesName::for_family(r.family, true)?;
                timed(format!("egf {name} n={} vs table", r.rank), || {
                    Ok(Residual::Univariate(
                        extract(name, r.rank)? - r.expected.clone(),
                    ))
                })
            })
            .collect()
    }));
    tasks
}

fn torus_tasks(o: &SuiteOptions) -> Vec<Task<'static>> {
    let mut tasks: Vec<Task> = Vec::new();
    let c = o.ceiling;
    for (family, lo) in [
        (Family::A, 1),
        (Family::B, 2),
        (Family::C, 1),
        (Family::D, 3),
    ] {
        for rank in lo..=o.max_rank {
            tasks.push(Box::new(move || torus_checks::check_torus(family, rank, c)));
        }
    }
    for family in Family::EXCEPTIONAL {
        let rank = family
            .fixed_rank()
            .expect("exceptional families have a fixed rank");
        tasks.push(Box::new(move || torus_checks::check_torus(family, rank, c)));
    }
    tasks
}

fn roots(o: &SuiteOptions) -> Result<Vec<RootReport>> {
    [
        SeriesName::AffB,
        SeriesName::AffD,
        SeriesName::D,
        SeriesName::A,
    ]
    .into_par_iter()
    .map(|name| check_realrooted(name, o.max_rank))
    .collect()
}

pub fn run_suite(suite: Suite, options: &SuiteOptions) -> Result<SuiteReport> {
    let tasks = match suite {
        Suite::Identities => identity_tasks(options),
        Suite::Flags => flag_tasks(options),
        Suite::Gamma => gamma_tasks(options),
        Suite::Egf => egf_tasks(options),
        Suite::Torus => torus_tasks(options),
        Suite::Roots => {
            return Ok(SuiteReport {
                roots: roots(options)?,
                ..Default::default()
            })
        }
        Suite::All => {
            let mut report = SuiteReport::default();
            for s in &Suite::ALL[..Suite::ALL.len() - 1] {
                report.extend(run_suite(*s, options)?);
            }
            return Ok(report);
        }
    };
    let mut report = SuiteReport {
        checks: run_tasks(tasks)?,
        ..Default::default()
    };
    if suite == Suite::Gamma && options.max_rank >= 3 {
        report
            .records
            .push(expansions::probe_gamma_d(3, options.ceiling)?);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        let options = SuiteOptions {
            max_rank: 5,
            order: 12,
            ceiling: Ceiling::default(),
        };
        let report = run_suite(Suite::All, &options).unwrap();
        assert!(report.ok(), "{:?}", report.failures());
        assert_eq!(report.records.len(), 1);
        assert_eq!(report.roots.len(), 4);
    }

    #[test]
    fn suite_names_parse() {
        for s in Suite::ALL {
            assert_eq!(s.to_string().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }
}
