//! Checks driven by the generating functions.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::diagram::affine_eulerian_formula;
use crate::error::Result;
use crate::family::Family;
use crate::poly::{gamma_extract, is_real_rooted, is_unimodal, Polynomial};
use crate::series::{closed_form, extract_from, SeriesName, TruncatedSeries};
use crate::verify::{timed, Ceiling, CheckResult, Residual};

/// Enumeration is used for comparison up to this index.
pub const EGF_ENUMERATION_MAX: usize = 8;
/// Largest Coxeter rank at which the diagram formula is expanded for comparison.
pub const EGF_DIAGRAM_MAX_RANK: usize = 12;

/// Group family and statistic carried by a series.
pub fn series_target(name: SeriesName) -> (Family, bool) {
    match name {
        SeriesName::A => (Family::A, false),
        SeriesName::AffA => (Family::A, true),
        SeriesName::BC => (Family::B, false),
        SeriesName::D => (Family::D, false),
        SeriesName::AffC => (Family::C, true),
        SeriesName::AffB => (Family::B, true),
        SeriesName::AffD => (Family::D, true),
    }
}

/// Symmetry center of the extracted polynomial at index `n`.
pub fn series_center(name: SeriesName, n: usize) -> usize {
    match name {
        SeriesName::A => n - 1,
        SeriesName::AffA | SeriesName::BC | SeriesName::D => n,
        SeriesName::AffC | SeriesName::AffB | SeriesName::AffD => n + 1,
    }
}

/// Extracted polynomials compared against enumeration (for `n <= 8` inside
/// the ceiling) and, for affine series, against the diagram formula.
pub fn check_egf(name: SeriesName, n_max: usize, ceiling: Ceiling) -> Result<Vec<CheckResult>> {
    let series = closed_form(name, n_max.max(name.min_index()));
    let (family, affine) = series_target(name);
    let mut out = Vec::new();
    for n in name.min_index()..=n_max {
        if n <= EGF_ENUMERATION_MAX && ceiling.enumerable(family, n) {
            out.push(timed(format!("egf {name} n={n} vs enumeration"), || {
                let brute = crate::groups::brute_eulerian(family, n, affine)?;
                Ok(Residual::Univariate(
                    extract_from(name, &series, n)? - brute,
                ))
            })?);
        }
        let rank = crate::groups::flag_rank(family, n);
        if affine && rank <= EGF_DIAGRAM_MAX_RANK {
            out.push(timed(format!("egf {name} n={n} vs diagram"), || {
                let formula = affine_eulerian_formula(family, rank)?.univariate();
                Ok(Residual::Univariate(
                    extract_from(name, &series, n)? - formula,
                ))
            })?);
        }
    }
    Ok(out)
}

/// Series-level relations among the generating functions, through `z^order`.
pub fn check_series_identities(order: usize) -> Result<Vec<CheckResult>> {
    let start = Instant::now();
    let f = |name| closed_form(name, order);
    let (a, bc, d) = (f(SeriesName::A), f(SeriesName::BC), f(SeriesName::D));
    let (aff_a, aff_b, aff_c, aff_d) = (
        f(SeriesName::AffA),
        f(SeriesName::AffB),
        f(SeriesName::AffC),
        f(SeriesName::AffD),
    );
    let base = start.elapsed();
    let two_t = Polynomial::monomial(2, 1);
    let a2z = a.scale_z(&BigInt::from(2));
    let cases: Vec<(&str, TruncatedSeries, TruncatedSeries)> = vec![
        ("B = D + z A(t,2z)", bc.clone(), &d + &a2z.mul_z()),
        (
            "2 affC = affB + 2tz C",
            aff_c.mul_poly(&Polynomial::constant(2)),
            &aff_b + &bc.mul_z().mul_poly(&two_t),
        ),
        (
            "affB = affD + 2tz D",
            aff_b.clone(),
            &aff_d + &d.mul_z().mul_poly(&two_t),
        ),
        ("affA = z A", aff_a, a.mul_z()),
        ("affC = A(t,2z)", aff_c, a2z),
    ];
    cases
        .into_iter()
        .map(|(label, lhs, rhs)| {
            let mut r = timed(format!("series {label} through z^{order}"), || {
                Ok(Residual::Series(&lhs - &rhs))
            })?;
            r.elapsed += base;
            Ok(r)
        })
        .collect()
}

/// Per-index real-rootedness of the polynomials carried by one series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootReport {
    pub name: SeriesName,
    pub results: Vec<(usize, bool)>,
    pub elapsed: Duration,
}

impl RootReport {
    pub fn failures(&self) -> Vec<usize> {
        self.results
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|(n, _)| *n)
            .collect()
    }

    pub fn ok(&self) -> bool {
        self.results.iter().all(|(_, ok)| *ok)
    }
}

pub fn check_realrooted(name: SeriesName, n_max: usize) -> Result<RootReport> {
    let start = Instant::now();
    let series = closed_form(name, n_max.max(name.min_index()));
    let results = (name.min_index()..=n_max)
        .into_par_iter()
        .map(|n| Ok((n, is_real_rooted(&extract_from(name, &series, n)?)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(RootReport {
        name,
        results,
        elapsed: start.elapsed(),
    })
}

/// Symmetric about `m`, nonnegative gamma-vector and unimodal coefficients.
/// A failure carries the gamma-vector as the coefficients of its residual.
pub fn check_gamma_nonnegative(label: String, p: &Polynomial, m: usize) -> Result<CheckResult> {
    let start = Instant::now();
    let gamma = gamma_extract(p, m)?;
    let ok = gamma.is_nonnegative() && is_unimodal(p);
    Ok(CheckResult {
        name: label,
        ok,
        residual: (!ok).then(|| Residual::Univariate(Polynomial::new(gamma.entries))),
        elapsed: start.elapsed(),
    })
}

/// Gamma-nonnegativity of the affine series at every index up to `n_max`.
pub fn check_series_gamma(name: SeriesName, n_max: usize) -> Result<Vec<CheckResult>> {
    let series = closed_form(name, n_max.max(name.min_index()));
    (name.min_index()..=n_max)
        .map(|n| {
            let p = extract_from(name, &series, n)?;
            check_gamma_nonnegative(format!("gamma>=0 {name} n={n}"), &p, series_center(name, n))
        })
        .collect()
}
