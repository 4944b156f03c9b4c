//! Affine Eulerian polynomials of the classical types of small rank and of
//! every exceptional type.

use std::time::Instant;

use crate::diagram::affine_eulerian_formula;
use crate::error::Result;
use crate::family::Family;
use crate::poly::Polynomial;
use crate::verify::{CheckResult, Residual};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub family: Family,
    pub rank: usize,
    pub expected: Polynomial,
}

impl TableRow {
    pub fn label(&self) -> String {
        if self.family.is_classical() {
            format!("{}{}", self.family, self.rank)
        } else {
            self.family.to_string()
        }
    }
}

/// Coefficients of `t^1, t^2, ...` (the constant term is always 0).
const ROWS: &[(Family, usize, &[u64])] = &[
    (Family::B, 3, &[10, 28, 10]),
    (Family::B, 4, &[24, 168, 168, 24]),
    (Family::B, 5, &[54, 904, 1924, 904, 54]),
    (Family::B, 6, &[116, 4452, 18472, 18472, 4452, 116]),
    (
        Family::B,
        7,
        &[242, 20612, 157294, 288824, 157294, 20612, 242],
    ),
    (Family::D, 4, &[16, 80, 80, 16]),
    (Family::D, 5, &[44, 464, 904, 464, 44]),
    (Family::D, 6, &[104, 2568, 8848, 8848, 2568, 104]),
    (
        Family::D,
        7,
        &[228, 13192, 79580, 136560, 79580, 13192, 228],
    ),
    (Family::E6, 6, &[351, 5427, 20142, 20142, 5427, 351]),
    (
        Family::E7,
        7,
        &[4064, 115728, 710112, 1243232, 710112, 115728, 4064],
    ),
    (
        Family::E8,
        8,
        &[
            157200, 9253680, 87417360, 251536560, 251536560, 87417360, 9253680, 157200,
        ],
    ),
    (Family::F4, 4, &[72, 504, 504, 72]),
    (Family::G2, 2, &[6, 6]),
];

pub fn rows() -> Vec<TableRow> {
    ROWS.iter()
        .map(|&(family, rank, cs)| TableRow {
            family,
            rank,
            expected: Polynomial::from_coeffs(std::iter::once(0).chain(cs.iter().copied())),
        })
        .collect()
}

/// Univariate affine Eulerian polynomial from the extended diagram.
pub fn compute_row(row: &TableRow) -> Result<Polynomial> {
    Ok(affine_eulerian_formula(row.family, row.rank)?.univariate())
}

pub fn check_row(row: &TableRow) -> Result<(Polynomial, CheckResult)> {
    let start = Instant::now();
    let computed = compute_row(row)?;
    let residual = &computed - &row.expected;
    let ok = residual.is_zero();
    let result = CheckResult {
        name: format!("table {}", row.label()),
        ok,
        residual: (!ok).then_some(Residual::Univariate(residual)),
        elapsed: start.elapsed(),
    };
    Ok((computed, result))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::brute_eulerian;

    #[test]
    fn every_row_matches() {
        for row in rows() {
            let (_, r) = check_row(&row).unwrap();
            assert!(r.ok, "{} {:?}", r.name, r.residual);
        }
    }

    #[test]
    fn classical_rows_match_enumeration() {
        for row in rows()
            .into_iter()
            .filter(|r| r.family.is_classical() && r.rank <= 5)
        {
            assert_eq!(
                brute_eulerian(row.family, row.rank, true).unwrap(),
                row.expected
            );
        }
    }

    #[test]
    fn row_sums_are_group_orders() {
        for row in rows() {
            assert_eq!(
                row.expected.sum(),
                crate::diagram::group_order(row.family, row.rank).unwrap(),
                "{}",
                row.label()
            );
        }
    }
}
