//! Exact verification of identities and expansions.
//!
//! Every check compares two independently computed sides and reports the
//! difference `lhs - rhs`; a check passes when that residual vanishes.

use std::time::{Duration, Instant};

use num_bigint::BigInt;

use crate::diagram::affine_eulerian_formula;
use crate::error::Result;
use crate::family::Family;
use crate::flag::{FlagPolynomial, Subset};
use crate::groups;
use crate::poly::Polynomial;
use crate::series::{self, SeriesName, TruncatedSeries};

pub mod egf;
pub mod expansions;
pub mod identities;
pub mod suite;
pub mod table1;
pub mod torus_checks;

pub use egf::{check_egf, check_realrooted, check_series_identities, RootReport};
pub use expansions::{check_flag_formula, check_gamma_expansion, FlagFormula, GammaExpansion};
pub use identities::{check_cyclic, check_identity, Cyclic, Identity};
pub use suite::{run_suite, Suite, SuiteOptions, SuiteReport};

/// Largest group enumerated by default.
pub const DEFAULT_MAX_ELEMENTS: u64 = 10_000_000;

/// Difference of the two sides of a failed check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Residual {
    Univariate(Polynomial),
    Flag(FlagPolynomial),
    Series(TruncatedSeries),
}

impl Residual {
    pub fn is_zero(&self) -> bool {
        match self {
            Residual::Univariate(p) => p.is_zero(),
            Residual::Flag(p) => p.is_zero(),
            Residual::Series(s) => s.egf_coeffs().iter().all(Polynomial::is_zero),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub ok: bool,
    /// `lhs - rhs` when the check failed.
    pub residual: Option<Residual>,
    pub elapsed: Duration,
}

impl CheckResult {
    pub fn passed(name: impl Into<String>, ok: bool, elapsed: Duration) -> Self {
        CheckResult {
            name: name.into(),
            ok,
            residual: None,
            elapsed,
        }
    }
}

/// Time `f` and turn its residual into a result.
pub(crate) fn timed(name: String, f: impl FnOnce() -> Result<Residual>) -> Result<CheckResult> {
    let start = Instant::now();
    let residual = f()?;
    let ok = residual.is_zero();
    Ok(CheckResult {
        name,
        ok,
        residual: (!ok).then_some(residual),
        elapsed: start.elapsed(),
    })
}

/// Size bound for brute-force enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ceiling {
    pub max_elements: u64,
}

impl Default for Ceiling {
    fn default() -> Self {
        Ceiling {
            max_elements: DEFAULT_MAX_ELEMENTS,
        }
    }
}

impl Ceiling {
    pub fn new(max_elements: u64) -> Self {
        Ceiling { max_elements }
    }

    /// Whether the group with [`crate::groups`] parameter `n` may be enumerated.
    pub fn enumerable(&self, family: Family, n: usize) -> bool {
        family.is_classical()
            && n <= groups::MAX_DEGREE
            && groups::order(family, n) <= BigInt::from(self.max_elements)
    }
}

/// Univariate (affine) Eulerian polynomial, indexed as in [`crate::groups`]:
/// by enumeration inside the ceiling, otherwise from the generating function.
pub fn eulerian(family: Family, n: usize, affine: bool, ceiling: Ceiling) -> Result<Polynomial> {
    if ceiling.enumerable(family, n) {
        groups::brute_eulerian(family, n, affine)
    } else {
        series::extract(SeriesName::for_family(family, affine)?, n)
    }
}

/// Flag (affine) Eulerian polynomial: by enumeration inside the ceiling,
/// otherwise from the extended diagram.
pub fn flag_eulerian(
    family: Family,
    n: usize,
    affine: bool,
    ceiling: Ceiling,
) -> Result<FlagPolynomial> {
    if ceiling.enumerable(family, n) {
        return groups::brute_flag_eulerian(family, n, affine);
    }
    let rank = groups::flag_rank(family, n);
    let full = affine_eulerian_formula(family, rank)?;
    if affine {
        return Ok(full);
    }
    let zero = Subset::singleton(0);
    FlagPolynomial::from_terms(
        rank,
        full.terms().map(|(s, c)| (s.difference(zero), c.clone())),
    )
}
