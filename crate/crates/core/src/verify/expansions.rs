//! Product expansions over `S_n` of the flag polynomials, and the peak
//! expansions of their univariate specializations.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::family::Family;
use crate::flag::{FlagPolynomial, Subset};
use crate::groups::{self, par_fold_permutations, peak_stats, phi, PeakStats};
use crate::poly::Polynomial;
use crate::verify::{eulerian, flag_eulerian, timed, Ceiling, CheckResult, Residual};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FlagFormula {
    /// cyclic sum of shifted type A flag polynomials
    AffA,
    C,
    B,
    D,
}

impl FlagFormula {
    pub const ALL: [FlagFormula; 4] = [
        FlagFormula::AffA,
        FlagFormula::C,
        FlagFormula::B,
        FlagFormula::D,
    ];

    pub fn min_n(self) -> usize {
        match self {
            FlagFormula::C => 1,
            FlagFormula::AffA | FlagFormula::B => 2,
            FlagFormula::D => 4,
        }
    }

    fn family(self) -> Family {
        match self {
            FlagFormula::AffA => Family::A,
            FlagFormula::C => Family::C,
            FlagFormula::B => Family::B,
            FlagFormula::D => Family::D,
        }
    }
}

impl fmt::Display for FlagFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FlagFormula::AffA => "flag-affA",
            FlagFormula::C => "flag-C",
            FlagFormula::B => "flag-B",
            FlagFormula::D => "flag-D",
        })
    }
}

fn require(n: usize, lo: usize, what: impl fmt::Display) -> Result<()> {
    if n < lo {
        Err(Error::Domain(format!("{what} needs n >= {lo}, got {n}")))
    } else {
        Ok(())
    }
}

/// Each factor is a sum of two monomials, given as color bitmasks.
type Factor = (u64, u64);

/// Factors `c_1(u), ..., c_n(u)` with color `n + 1` written as `0`.
fn c_factors(u: &[i32], out: &mut Vec<Factor>) {
    let n = u.len();
    let at = |i: usize| if i == 0 || i > n { 0 } else { u[i - 1] };
    let bit = |i: usize| if i == n + 1 { 1u64 } else { 1u64 << i };
    out.clear();
    for j in 1..=n {
        let a = if at(j - 1) < at(j) { bit(j) } else { 0 };
        let b = if at(j) > at(j + 1) { bit(j + 1) } else { 0 };
        out.push((a, b));
    }
}

fn b_factors(u: &[i32], out: &mut Vec<Factor>) {
    let n = u.len();
    c_factors(u, out);
    let at = |i: usize| if i == 0 { 0 } else { u[i - 1] };
    let a = if at(n - 2) < at(n - 1) {
        1 << (n - 1)
    } else {
        0
    };
    let b = if at(n - 1) > at(n) { 1 | 1 << n } else { 0 };
    out[n - 2] = (a, b);
    out[n - 1] = if at(n - 1) < at(n) {
        (1 << n, 1)
    } else {
        (0, 0)
    };
}

fn d_factors(u: &[i32], out: &mut Vec<Factor>) {
    b_factors(u, out);
    out[0] = if u[0] > u[1] {
        (1 << 1, 1 << 2)
    } else {
        (0, 0)
    };
    out[1] = (
        if u[0] < u[1] { 1 << 1 | 1 << 2 } else { 0 },
        if u[1] > u[2] { 1 << 3 } else { 0 },
    );
}

/// `sum_u prod_j factor_j(u)` as a dense histogram over color masks.
/// Errors if some product is not square-free.
fn expand(n: usize, factors: fn(&[i32], &mut Vec<Factor>)) -> Result<Vec<u64>> {
    let size = 1usize << (n + 1);
    let (hist, clash) = par_fold_permutations(
        n,
        || (vec![0u64; size], false),
        |(hist, clash), u| {
            let mut fs = Vec::with_capacity(n);
            factors(u, &mut fs);
            for choice in 0u64..1 << n {
                let mut mask = 0u64;
                let mut len = 0;
                for (j, &(a, b)) in fs.iter().enumerate() {
                    let m = if choice >> j & 1 == 1 { b } else { a };
                    mask |= m;
                    len += m.count_ones();
                }
                *clash |= mask.count_ones() != len;
                hist[mask as usize] += 1;
            }
        },
        |(mut a, ca), (b, cb)| {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            (a, ca || cb)
        },
    );
    if clash {
        return Err(Error::Internal(
            "product expansion produced a repeated color".into(),
        ));
    }
    Ok(hist)
}

/// The product-expansion side of a flag formula. For `D` the result is the
/// undivided sum, i.e. twice the flag polynomial.
pub fn flag_expansion(formula: FlagFormula, n: usize) -> Result<FlagPolynomial> {
    require(n, formula.min_n(), formula)?;
    if n > groups::MAX_DEGREE {
        return Err(Error::Domain(format!(
            "n = {n} exceeds {}",
            groups::MAX_DEGREE
        )));
    }
    let hist = match formula {
        FlagFormula::AffA => return cyclic_a_expansion(n, Ceiling::default()),
        FlagFormula::C => expand(n, c_factors)?,
        FlagFormula::B => expand(n, b_factors)?,
        FlagFormula::D => expand(n, d_factors)?,
    };
    Ok(FlagPolynomial::from_dense(n, &hist))
}

/// `sum_j t_j A_{n-2}(t_{j+1}, ..., t_{j+n-1})`, indices mod `n`.
fn cyclic_a_expansion(n: usize, ceiling: Ceiling) -> Result<FlagPolynomial> {
    let inner = flag_eulerian(Family::A, n - 1, false, ceiling)?;
    let mut out = FlagPolynomial::zero(n - 1);
    for j in 0..n {
        let shifted = inner.relabel(n - 1, |i| (i + j) % n)?;
        let tj = FlagPolynomial::monomial(n - 1, Subset::singleton(j), 1);
        out = &out + &shifted.try_mul(&tj)?;
    }
    Ok(out)
}

/// Product expansion against the flag polynomial of the group. `n` is the
/// degree of `S_n`, which is the rank for `B`, `C`, `D`.
pub fn check_flag_formula(formula: FlagFormula, n: usize, ceiling: Ceiling) -> Result<CheckResult> {
    require(n, formula.min_n(), formula)?;
    timed(format!("{formula} n={n}"), || {
        let family = formula.family();
        let lhs = flag_eulerian(family, n, true, ceiling)?;
        let residual = match formula {
            FlagFormula::AffA => &lhs - &cyclic_a_expansion(n, ceiling)?,
            FlagFormula::D => &lhs.scale(&BigInt::from(2)) - &flag_expansion(formula, n)?,
            _ => &lhs - &flag_expansion(formula, n)?,
        };
        Ok(Residual::Flag(residual))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GammaExpansion {
    /// extended peaks, affine type C
    AffC,
    /// left peaks, type C
    C,
    /// interior peaks, type A (`n` is the degree of `S_n`)
    A,
    AffB,
    AffD,
    D,
}

impl GammaExpansion {
    pub const ALL: [GammaExpansion; 6] = [
        GammaExpansion::AffC,
        GammaExpansion::C,
        GammaExpansion::A,
        GammaExpansion::AffB,
        GammaExpansion::AffD,
        GammaExpansion::D,
    ];

    pub fn min_n(self) -> usize {
        match self {
            GammaExpansion::AffC | GammaExpansion::C | GammaExpansion::A => 1,
            GammaExpansion::AffB => 2,
            GammaExpansion::AffD | GammaExpansion::D => 4,
        }
    }

    fn target(self) -> (Family, bool) {
        match self {
            GammaExpansion::AffC => (Family::C, true),
            GammaExpansion::C => (Family::C, false),
            GammaExpansion::A => (Family::A, false),
            GammaExpansion::AffB => (Family::B, true),
            GammaExpansion::AffD => (Family::D, true),
            GammaExpansion::D => (Family::D, false),
        }
    }
}

impl fmt::Display for GammaExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GammaExpansion::AffC => "gamma-affC",
            GammaExpansion::C => "gamma-C",
            GammaExpansion::A => "gamma-A",
            GammaExpansion::AffB => "gamma-affB",
            GammaExpansion::AffD => "gamma-affD",
            GammaExpansion::D => "gamma-D",
        })
    }
}

fn reversed(u: &[i32]) -> Vec<i32> {
    u.iter().rev().copied().collect()
}

/// Integer weight, peak statistic and `(1+t)` budget of `u`. Weights are
/// scaled so that [`gamma_scale`] times the target polynomial is the sum.
fn gamma_term(which: GammaExpansion, u: &[i32]) -> (u64, usize, usize) {
    let n = u.len();
    let PeakStats { pk, lpe, xpe } = peak_stats(u);
    let phi2 = |v: &[i32]| phi(v).map(|p| p.doubled() as u64).unwrap_or(1);
    match which {
        GammaExpansion::AffC => (1, xpe, n + 1),
        GammaExpansion::C => (1, lpe, n),
        GammaExpansion::A => (1, pk, n - 1),
        GammaExpansion::AffB => (phi2(u), xpe, n + 1),
        GammaExpansion::AffD => (phi2(u) * phi2(&reversed(u)), xpe, n + 1),
        GammaExpansion::D => (phi2(&reversed(u)), lpe, n),
    }
}

/// Multiplier relating the integer-weight sum to the target polynomial.
fn gamma_scale(which: GammaExpansion, n: usize) -> BigInt {
    match which {
        GammaExpansion::AffC | GammaExpansion::AffB | GammaExpansion::D => 2.into(),
        GammaExpansion::C => 1.into(),
        GammaExpansion::A => BigInt::from(1) << (n - 1),
        GammaExpansion::AffD => 4.into(),
    }
}

/// `sum_u weight(u) (4t)^{stat(u)} (1+t)^{m - 2 stat(u)}` with integer weights.
fn gamma_sum(which: GammaExpansion, n: usize) -> Result<Polynomial> {
    if n > groups::MAX_DEGREE {
        return Err(Error::Domain(format!(
            "n = {n} exceeds {}",
            groups::MAX_DEGREE
        )));
    }
    if matches!(
        which,
        GammaExpansion::AffB | GammaExpansion::AffD | GammaExpansion::D
    ) && n < 2
    {
        return Err(Error::Domain(format!("{which} needs n >= 2")));
    }
    let (_, _, m) = gamma_term(which, &(1..=n as i32).collect::<Vec<_>>());
    let counts = par_fold_permutations(
        n,
        || vec![0u64; n + 2],
        |acc, u| {
            let (w, s, _) = gamma_term(which, u);
            acc[s] += w;
        },
        |mut a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            a
        },
    );
    Ok(counts
        .iter()
        .enumerate()
        .filter(|(_, c)| **c > 0)
        .map(|(s, &c)| {
            &Polynomial::linear_power(0, 4, s).scale(&BigInt::from(c))
                * &Polynomial::linear_power(1, 1, m - 2 * s)
        })
        .sum())
}

/// The peak-sum side of a gamma expansion, divided out to the target scale.
pub fn gamma_expansion(which: GammaExpansion, n: usize) -> Result<Polynomial> {
    require(n, which.min_n(), which)?;
    gamma_sum(which, n)?
        .div_exact_scalar(&gamma_scale(which, n))
        .ok_or_else(|| Error::Internal(format!("{which} n={n}: peak sum is not divisible")))
}

fn gamma_check(which: GammaExpansion, n: usize, ceiling: Ceiling) -> Result<CheckResult> {
    timed(format!("{which} n={n}"), || {
        let (family, affine) = which.target();
        let lhs = eulerian(family, n, affine, ceiling)?.scale(&gamma_scale(which, n));
        Ok(Residual::Univariate(lhs - gamma_sum(which, n)?))
    })
}

/// Peak expansion against the (affine) Eulerian polynomial, compared at the
/// integer scale so that half weights stay exact.
pub fn check_gamma_expansion(
    which: GammaExpansion,
    n: usize,
    ceiling: Ceiling,
) -> Result<CheckResult> {
    require(n, which.min_n(), which)?;
    gamma_check(which, n, ceiling)
}

/// The type D left-peak expansion evaluated below its stated range
/// (`n >= 2`). The outcome is reported, not asserted.
pub fn probe_gamma_d(n: usize, ceiling: Ceiling) -> Result<CheckResult> {
    require(n, 2, GammaExpansion::D)?;
    gamma_check(GammaExpansion::D, n, ceiling)
}

/// Swapping the last two letters maps `{phi = 1}` onto `{phi = 0}` and keeps
/// the left peaks of the word without its last letter.
pub fn phi_pairing_holds(n: usize) -> Result<bool> {
    require(n, 3, "phi pairing")?;
    let mut ones = Vec::new();
    let mut zeros = std::collections::HashSet::new();
    for u in groups::permutations(n) {
        match phi(&u)? {
            groups::Phi::One => ones.push(u),
            groups::Phi::Zero => {
                zeros.insert(u);
            }
            groups::Phi::Half => {}
        }
    }
    if ones.len() != zeros.len() {
        return Ok(false);
    }
    Ok(ones.iter().all(|u| {
        let mut v = u.clone();
        v.swap(n - 2, n - 1);
        zeros.contains(&v) && peak_stats(&u[..n - 1]).lpe == peak_stats(&v[..n - 1]).lpe
    }))
}

/// `xpe(u) = lpe(u_1 ... u_{n-1}) + 1` whenever `phi(u) != 1`.
pub fn xpe_trim_holds(n: usize) -> Result<bool> {
    require(n, 2, "xpe trim")?;
    for u in groups::permutations(n) {
        if phi(&u)? != groups::Phi::One && peak_stats(&u).xpe != peak_stats(&u[..n - 1]).lpe + 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> Polynomial {
        Polynomial::from_coeffs(cs.iter().copied())
    }

    #[test]
    fn flag_formula_examples() {
        let c2 = flag_expansion(FlagFormula::C, 2).unwrap();
        assert_eq!(c2, groups::brute_flag_eulerian(Family::C, 2, true).unwrap());
        let b3 = flag_expansion(FlagFormula::B, 3).unwrap();
        assert_eq!(b3.univariate(), p(&[0, 10, 28, 10]));
        let d4 = flag_expansion(FlagFormula::D, 4).unwrap();
        assert_eq!(d4.univariate(), p(&[0, 32, 160, 160, 32]));
        let a2 = flag_expansion(FlagFormula::AffA, 3).unwrap();
        assert_eq!(a2.to_string(), "t0 + t1 + t2 + t0t1 + t0t2 + t1t2");
    }

    #[test]
    fn flag_formulas_hold() {
        let ceiling = Ceiling::default();
        for formula in FlagFormula::ALL {
            for n in formula.min_n()..=6 {
                let r = check_flag_formula(formula, n, ceiling).unwrap();
                assert!(r.ok, "{} {:?}", r.name, r.residual);
            }
        }
        assert!(matches!(
            check_flag_formula(FlagFormula::D, 3, ceiling),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(
            gamma_expansion(GammaExpansion::A, 3).unwrap(),
            p(&[1, 4, 1])
        );
        assert_eq!(
            gamma_expansion(GammaExpansion::AffC, 2).unwrap(),
            p(&[0, 4, 4])
        );
        assert_eq!(
            gamma_expansion(GammaExpansion::AffB, 3).unwrap(),
            p(&[0, 10, 28, 10])
        );
        assert_eq!(
            gamma_expansion(GammaExpansion::AffB, 2).unwrap(),
            p(&[0, 4, 4])
        );
    }

    #[test]
    fn gamma_expansions_hold() {
        let ceiling = Ceiling::default();
        for which in GammaExpansion::ALL {
            for n in which.min_n()..=7 {
                let r = check_gamma_expansion(which, n, ceiling).unwrap();
                assert!(r.ok, "{} {:?}", r.name, r.residual);
            }
        }
        assert!(check_gamma_expansion(GammaExpansion::AffD, 3, ceiling).is_err());
        assert!(probe_gamma_d(3, ceiling).is_ok());
    }

    #[test]
    fn peak_lemmas() {
        for n in 3..=7 {
            assert!(phi_pairing_holds(n).unwrap());
        }
        for n in 2..=7 {
            assert!(xpe_trim_holds(n).unwrap());
        }
    }
}
