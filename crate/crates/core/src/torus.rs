//! The reduced Steinberg torus, modeled by its flag f-vector.
//!
//! Cells with color set `J` are the cosets `W / W_{J^c}`, so
//! `f_J = |W| / |W_{J^c}|` for nonempty `J`; the reduced complex has no
//! empty face (`f_{} = 0`). The unreduced torus differs only in `f_{} = 1`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::diagram::{extended_diagram, subgroup_order};
use crate::error::{Error, Result};
use crate::family::Family;
use crate::flag::{FlagPolynomial, Subset};
use crate::groups;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusModel {
    pub family: Family,
    /// Coxeter rank (for type A, the group is `A_rank = S_{rank+1}`).
    pub rank: usize,
    pub flag_f: FlagPolynomial,
    pub flag_h: FlagPolynomial,
}

fn flag_f(family: Family, n: usize, reduced: bool) -> Result<FlagPolynomial> {
    let d = extended_diagram(family, n)?;
    let all = Subset::full(n);
    let order = subgroup_order(&d, Subset::range(1, n))?;
    let mut f = FlagPolynomial::zero(n);
    for j in all.subsets().filter(|j| !j.is_empty()) {
        f.add_term(j, &order / subgroup_order(&d, j.complement(n))?);
    }
    if !reduced {
        f.add_term(Subset::EMPTY, BigInt::one());
    }
    Ok(f)
}

/// Flag f- and h-vectors of the reduced torus of type `family`, rank `n`.
pub fn build(family: Family, n: usize) -> Result<TorusModel> {
    let flag_f = flag_f(family, n, true)?;
    let flag_h = flag_f.f_to_h();
    Ok(TorusModel {
        family,
        rank: n,
        flag_f,
        flag_h,
    })
}

/// Same as [`build`] but keeping the empty face.
pub fn build_unreduced(family: Family, n: usize) -> Result<TorusModel> {
    let flag_f = flag_f(family, n, false)?;
    let flag_h = flag_f.f_to_h();
    Ok(TorusModel {
        family,
        rank: n,
        flag_f,
        flag_h,
    })
}

/// `sum_{J nonempty} (-1)^{|J|-1} f_J`.
pub fn euler_characteristic(m: &TorusModel) -> BigInt {
    m.flag_f
        .terms()
        .filter(|(j, _)| !j.is_empty())
        .map(|(j, c)| if j.len() % 2 == 1 { c.clone() } else { -c })
        .sum()
}

/// Total number of cells (nonempty faces).
pub fn cell_count(m: &TorusModel) -> BigInt {
    m.flag_f
        .terms()
        .filter(|(j, _)| !j.is_empty())
        .map(|(_, c)| c.clone())
        .sum()
}

/// Group degree parameter of [`crate::groups`] for a Coxeter rank.
pub fn group_degree(family: Family, rank: usize) -> usize {
    if family == Family::A {
        rank + 1
    } else {
        rank
    }
}

fn classical_histogram(family: Family, n: usize) -> Result<Vec<u64>> {
    if !family.is_classical() {
        return Err(Error::Unsupported(format!(
            "enumeration is only available for classical families, not {family}"
        )));
    }
    groups::descent_histogram(family, group_degree(family, n), true)
}

/// Coset-representative count: for every proper `J`, the number of `w` with
/// affine descent set disjoint from `J` equals `|W| / |W_J|`.
pub fn partition_certificate(family: Family, n: usize) -> Result<bool> {
    let hist = classical_histogram(family, n)?;
    let d = extended_diagram(family, n)?;
    let all = Subset::full(n);
    let order = subgroup_order(&d, Subset::range(1, n))?;
    for j in all.subsets().filter(|&j| j != all) {
        let count: u64 = hist
            .iter()
            .enumerate()
            .filter(|(mask, _)| Subset(*mask as u64).is_disjoint(j))
            .map(|(_, c)| c)
            .sum();
        if BigInt::from(count) != &order / subgroup_order(&d, j)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `f_J = #{w : affine descent set of w inside J}` for every `J`, counted by enumeration.
pub fn flag_f_by_enumeration(family: Family, n: usize) -> Result<FlagPolynomial> {
    let hist = classical_histogram(family, n)?;
    let mut f = FlagPolynomial::zero(n);
    for j in Subset::full(n).subsets() {
        let count: u64 = hist
            .iter()
            .enumerate()
            .filter(|(mask, _)| Subset(*mask as u64).is_subset_of(j))
            .map(|(_, c)| c)
            .sum();
        f.add_term(j, BigInt::from(count));
    }
    Ok(f)
}

/// `sum_w 2^{(n+1) - affine d(w)}`, the number of pairs `(w, J)` with `J`
/// disjoint from the affine descent set of `w`. Each such pair is exactly one
/// cell (of color set `J^c`, which is never empty).
pub fn cell_count_by_enumeration(family: Family, n: usize) -> Result<BigInt> {
    let hist = classical_histogram(family, n)?;
    let mut total = BigInt::zero();
    for (mask, c) in hist.iter().enumerate() {
        if *c > 0 {
            total += BigInt::from(*c) << (n + 1 - mask.count_ones() as usize);
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Polynomial;

    fn s(xs: &[usize]) -> Subset {
        xs.iter().copied().collect()
    }

    #[test]
    fn worked_tori() {
        let a2 = build(Family::A, 2).unwrap();
        assert_eq!(
            a2.flag_f.to_string(),
            "t0 + t1 + t2 + 3t0t1 + 3t0t2 + 3t1t2 + 6t0t1t2"
        );
        assert_eq!(a2.flag_h.to_string(), "t0 + t1 + t2 + t0t1 + t0t2 + t1t2");
        let c2 = build(Family::C, 2).unwrap();
        assert_eq!(c2.flag_f.coeff(s(&[2])), 2.into());
        assert_eq!(
            c2.flag_f.to_string(),
            "t0 + t1 + 2t2 + 4t0t1 + 4t0t2 + 4t1t2 + 8t0t1t2"
        );
        let b3 = build(Family::B, 3).unwrap();
        assert_eq!(
            b3.flag_h.univariate(),
            Polynomial::from_coeffs([0, 10, 28, 10])
        );
    }

    #[test]
    fn unreduced_a2_has_negative_h() {
        let a2 = build_unreduced(Family::A, 2).unwrap();
        assert_eq!(a2.flag_h.to_string(), "1 + 2t0t1 + 2t0t2 + 2t1t2 - t0t1t2");
    }

    #[test]
    fn euler_characteristics_vanish() {
        assert_eq!(
            euler_characteristic(&build(Family::A, 2).unwrap()),
            0.into()
        );
        assert_eq!(
            euler_characteristic(&build(Family::C, 2).unwrap()),
            0.into()
        );
        assert_eq!(
            euler_characteristic(&build(Family::E8, 8).unwrap()),
            0.into()
        );
    }

    #[test]
    fn partition_certificates() {
        assert!(partition_certificate(Family::A, 2).unwrap());
        assert!(partition_certificate(Family::C, 2).unwrap());
        assert!(partition_certificate(Family::D, 4).unwrap());
        assert!(matches!(
            partition_certificate(Family::F4, 4),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn cell_counts_agree() {
        for (family, n) in [
            (Family::A, 3),
            (Family::B, 3),
            (Family::C, 3),
            (Family::D, 4),
        ] {
            let m = build(family, n).unwrap();
            assert_eq!(
                cell_count(&m),
                cell_count_by_enumeration(family, n).unwrap()
            );
            assert_eq!(m.flag_f, flag_f_by_enumeration(family, n).unwrap());
        }
    }
}
