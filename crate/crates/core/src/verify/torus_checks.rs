//! Checks on the flag vectors of the reduced torus.

use std::time::Instant;

use crate::error::Result;
use crate::family::Family;
use crate::flag::FlagPolynomial;
use crate::poly::Polynomial;
use crate::torus::{self, group_degree, TorusModel};
use crate::verify::{timed, Ceiling, CheckResult, Residual};

fn label(family: Family, rank: usize) -> String {
    if family.is_classical() {
        format!("{family}{rank}")
    } else {
        family.to_string()
    }
}

/// `h_J - h_{J^c}` for every `J`.
pub fn dehn_sommerville_residual(h: &FlagPolynomial) -> FlagPolynomial {
    let n = h.n();
    let mut mirrored = FlagPolynomial::zero(n);
    for (s, c) in h.terms() {
        mirrored.add_term(s.complement(n), c.clone());
    }
    h - &mirrored
}

fn model_checks(m: &TorusModel) -> Result<Vec<CheckResult>> {
    let name = label(m.family, m.rank);
    Ok(vec![
        timed(format!("torus {name} euler characteristic"), || {
            Ok(Residual::Univariate(Polynomial::constant(
                torus::euler_characteristic(m),
            )))
        })?,
        timed(format!("torus {name} dehn-sommerville"), || {
            Ok(Residual::Flag(dehn_sommerville_residual(&m.flag_h)))
        })?,
    ])
}

/// Euler characteristic and Dehn–Sommerville for any type; for classical
/// types inside the ceiling also the enumeration identities for `f` and the
/// cell count, and the coset-partition certificate.
pub fn check_torus(family: Family, rank: usize, ceiling: Ceiling) -> Result<Vec<CheckResult>> {
    let m = torus::build(family, rank)?;
    let mut out = model_checks(&m)?;
    if !(family.is_classical() && ceiling.enumerable(family, group_degree(family, rank))) {
        return Ok(out);
    }
    let name = label(family, rank);
    out.push(timed(
        format!("torus {name} flag f by enumeration"),
        || {
            Ok(Residual::Flag(
                &m.flag_f - &torus::flag_f_by_enumeration(family, rank)?,
            ))
        },
    )?);
    out.push(timed(format!("torus {name} cell count"), || {
        Ok(Residual::Univariate(Polynomial::constant(
            torus::cell_count(&m) - torus::cell_count_by_enumeration(family, rank)?,
        )))
    })?);
    let start = Instant::now();
    let ok = torus::partition_certificate(family, rank)?;
    out.push(CheckResult::passed(
        format!("torus {name} partition certificate"),
        ok,
        start.elapsed(),
    ));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_tori() {
        for (family, rank) in [
            (Family::A, 1),
            (Family::A, 3),
            (Family::B, 2),
            (Family::C, 3),
            (Family::D, 4),
            (Family::G2, 2),
            (Family::F4, 4),
        ] {
            for r in check_torus(family, rank, Ceiling::default()).unwrap() {
                assert!(r.ok, "{} {:?}", r.name, r.residual);
            }
        }
    }

    #[test]
    fn mirror_residual_detects_asymmetry() {
        let h = FlagPolynomial::monomial(2, crate::flag::Subset::singleton(0), 1);
        assert!(!dehn_sommerville_residual(&h).is_zero());
    }
}
