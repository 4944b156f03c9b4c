//! Signed-permutation models of the classical Weyl groups and their
//! descent statistics.
//!
//! Rank conventions: family `A` is parameterized here by the degree `n` of
//! the symmetric group `S_n` (the Weyl group `A_{n-1}`, colors `[0, n-1]`).
//! Families `B`, `C`, `D` are parameterized by their rank `n` (colors `[0, n]`).
//! [`flag_rank`] converts to the color-set bound used by [`FlagPolynomial`].
//!
//! Simple roots follow the one-line conventions: type A uses
//! `e_{i+1} - e_i` with lowest root `e_1 - e_n`; type C uses `2e_1` and
//! `e_i - e_{i-1}` with lowest root `-2e_n`; type B rescales the first root to
//! `e_1` and has lowest root `-e_{n-1} - e_n`; type D uses `e_2 + e_1` and
//! `e_i - e_{i-1}` with the same lowest root as B.

use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::family::Family;
use crate::flag::{FlagPolynomial, Subset};
use crate::poly::Polynomial;

/// Descent sets are subsets of the color set.
pub type DescentSet = Subset;

/// Largest degree accepted by the enumerators (windows fit in a fixed buffer).
pub const MAX_DEGREE: usize = 16;

fn require_classical(family: Family) -> Result<()> {
    if family.is_classical() {
        Ok(())
    } else {
        Err(Error::Unsupported(format!(
            "{family} is not modeled by signed permutations"
        )))
    }
}

/// Smallest `n` for which the (affine) statistic is defined.
pub fn min_degree(family: Family, affine: bool) -> usize {
    match (family, affine) {
        (Family::A, false) | (Family::B, false) | (Family::C, _) => 1,
        (Family::A, true) | (Family::B, true) | (Family::D, false) => 2,
        (Family::D, true) => 3,
        _ => usize::MAX,
    }
}

fn check_degree(family: Family, n: usize, affine: bool) -> Result<()> {
    require_classical(family)?;
    if n == 0 {
        return Err(Error::Domain("group parameter must be at least 1".into()));
    }
    let lo = min_degree(family, affine);
    if n < lo {
        let what = if affine { "affine" } else { "ordinary" };
        return Err(Error::Domain(format!(
            "{what} statistics for {family} need n >= {lo}, got {n}"
        )));
    }
    if n > MAX_DEGREE {
        return Err(Error::Domain(format!("n = {n} exceeds {MAX_DEGREE}")));
    }
    Ok(())
}

/// Largest color index for the group: `n - 1` for `S_n`, otherwise `n`.
pub fn flag_rank(family: Family, n: usize) -> usize {
    if family == Family::A {
        n - 1
    } else {
        n
    }
}

/// Number of elements of the group.
pub fn order(family: Family, n: usize) -> BigInt {
    let fact: BigInt = (1..=n).map(BigInt::from).product();
    match family {
        Family::A => fact,
        Family::B | Family::C => fact << n,
        Family::D => fact << (n - 1),
        _ => panic!("order of {family} is not a signed-permutation count"),
    }
}

/// Element in one-line notation `w_1 ... w_n` (entries `+-1..+-n`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    family: Family,
    window: Vec<i32>,
}

impl GroupElement {
    pub fn new(family: Family, window: Vec<i32>) -> Result<Self> {
        require_classical(family)?;
        let n = window.len();
        if n == 0 || n > MAX_DEGREE {
            return Err(Error::Input(format!("window length {n} out of range")));
        }
        let mut seen = vec![false; n + 1];
        for &x in &window {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(Error::Input(format!(
                    "{window:?} is not a signed permutation of [{n}]"
                )));
            }
            seen[a] = true;
        }
        let negatives = window.iter().filter(|&&x| x < 0).count();
        match family {
            Family::A if negatives > 0 => {
                return Err(Error::Input("type A windows must be positive".into()))
            }
            Family::D if negatives % 2 == 1 => {
                return Err(Error::Input(
                    "type D windows need an even number of negative entries".into(),
                ))
            }
            _ => {}
        }
        Ok(Self { family, window })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    pub fn degree(&self) -> usize {
        self.window.len()
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, x) in self.window.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            if *x < 0 {
                write!(f, "-{}", -x)?;
            } else {
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

/// Advance to the next permutation in lexicographic order; `false` at the end.
pub fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v.iter().rposition(|x| *x > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// The `k`-th permutation of `1..=n` in lexicographic order.
fn unrank_permutation(n: usize, mut k: u64) -> Vec<i32> {
    let mut pool: Vec<i32> = (1..=n as i32).collect();
    let mut out = Vec::with_capacity(n);
    let mut fact: u64 = (1..n as u64).product();
    for i in (0..n).rev() {
        let idx = (k / fact) as usize;
        k %= fact;
        out.push(pool.remove(idx));
        if i > 0 {
            fact /= i as u64;
        }
    }
    out
}

/// Lexicographic iterator over the permutations of `1..=n`.
pub fn permutations(n: usize) -> impl Iterator<Item = Vec<i32>> {
    let mut cur: Option<Vec<i32>> = Some((1..=n as i32).collect());
    std::iter::from_fn(move || {
        let out = cur.take()?;
        let mut next = out.clone();
        if next_permutation(&mut next) {
            cur = Some(next);
        }
        Some(out)
    })
}

/// Fold over all permutations of `1..=n` in parallel chunks.
pub fn par_fold_permutations<T, I, F, R>(n: usize, identity: I, fold: F, reduce: R) -> T
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    F: Fn(&mut T, &[i32]) + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    let total: u64 = (1..=n as u64).product();
    let chunk: u64 = 2048;
    let chunks = total.div_ceil(chunk);
    (0..chunks)
        .into_par_iter()
        .fold(&identity, |mut acc, c| {
            let start = c * chunk;
            let len = chunk.min(total - start);
            let mut perm = unrank_permutation(n, start);
            for step in 0..len {
                fold(&mut acc, &perm);
                if step + 1 < len {
                    next_permutation(&mut perm);
                }
            }
            acc
        })
        .reduce(&identity, &reduce)
}

/// All elements, each once: permutations in lexicographic order, and for
/// each permutation the sign vectors as a binary counter (bit `i` negates
/// entry `i + 1`). Type D keeps only an even number of negatives.
pub fn enumerate(family: Family, n: usize) -> Result<impl Iterator<Item = GroupElement>> {
    check_degree(family, n, false).or_else(|e| match (family, n) {
        (Family::D, 1) => Ok(()),
        _ => Err(e),
    })?;
    let signs: u32 = if family == Family::A { 0 } else { n as u32 };
    Ok(permutations(n).flat_map(move |u| {
        (0u64..1 << signs).filter_map(move |sigma| {
            if family == Family::D && sigma.count_ones() % 2 == 1 {
                return None;
            }
            let window = u
                .iter()
                .enumerate()
                .map(|(i, &x)| if sigma >> i & 1 == 1 { -x } else { x })
                .collect();
            Some(GroupElement { family, window })
        })
    }))
}

/// Descent bitmask of a window, no validation. Bit `j` is color `j`.
#[inline]
fn descent_bits(family: Family, w: &[i32], affine: bool) -> u64 {
    let n = w.len();
    let mut m = 0u64;
    match family {
        Family::A => {
            for i in 1..n {
                if w[i - 1] > w[i] {
                    m |= 1 << i;
                }
            }
            if affine && w[n - 1] > w[0] {
                m |= 1;
            }
        }
        _ => {
            if family == Family::D {
                if w[0] + w[1] < 0 {
                    m |= 1 << 1;
                }
            } else if w[0] < 0 {
                m |= 1 << 1;
            }
            for i in 2..=n {
                if w[i - 2] > w[i - 1] {
                    m |= 1 << i;
                }
            }
            if affine {
                let zero = match family {
                    Family::C => w[n - 1] > 0,
                    _ => w[n - 2] + w[n - 1] > 0,
                };
                if zero {
                    m |= 1;
                }
            }
        }
    }
    m
}

/// Ordinary descent set `D(w)`.
pub fn descent_set(w: &GroupElement) -> Result<DescentSet> {
    check_degree(w.family, w.degree(), false)?;
    Ok(Subset(descent_bits(w.family, &w.window, false)))
}

/// Affine descent set: `D(w)` plus color 0 when the lowest root is sent negative.
pub fn affine_descent_set(w: &GroupElement) -> Result<DescentSet> {
    check_degree(w.family, w.degree(), true)?;
    Ok(Subset(descent_bits(w.family, &w.window, true)))
}

/// Number of group elements with each descent set, indexed by bitmask.
pub fn descent_histogram(family: Family, n: usize, affine: bool) -> Result<Vec<u64>> {
    check_degree(family, n, affine)?;
    let size = 1usize << (flag_rank(family, n) + 1);
    let signs: u32 = if family == Family::A { 0 } else { n as u32 };
    let hist = par_fold_permutations(
        n,
        || vec![0u64; size],
        |acc, u| {
            let mut w = [0i32; MAX_DEGREE];
            let w = &mut w[..n];
            for sigma in 0u64..1 << signs {
                if family == Family::D && sigma.count_ones() % 2 == 1 {
                    continue;
                }
                for i in 0..n {
                    w[i] = if sigma >> i & 1 == 1 { -u[i] } else { u[i] };
                }
                acc[descent_bits(family, w, affine) as usize] += 1;
            }
        },
        |mut a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            a
        },
    );
    Ok(hist)
}

/// `sum_w prod_{j in D(w)} t_j` (or the affine descent version) by enumeration.
pub fn brute_flag_eulerian(family: Family, n: usize, affine: bool) -> Result<FlagPolynomial> {
    let hist = descent_histogram(family, n, affine)?;
    Ok(FlagPolynomial::from_dense(flag_rank(family, n), &hist))
}

/// `sum_w t^{d(w)}` (or `t^{affine d(w)}`) by enumeration.
pub fn brute_eulerian(family: Family, n: usize, affine: bool) -> Result<Polynomial> {
    let hist = descent_histogram(family, n, affine)?;
    let mut coeffs = vec![0u64; flag_rank(family, n) + 2];
    for (mask, c) in hist.iter().enumerate() {
        coeffs[mask.count_ones() as usize] += c;
    }
    Ok(Polynomial::from_coeffs(coeffs))
}

/// Peak counts of a sequence with zero sentinels on both ends.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PeakStats {
    /// peaks at positions `2..=n-1`
    pub pk: usize,
    /// peaks at positions `1..=n-1`
    pub lpe: usize,
    /// peaks at positions `1..=n`
    pub xpe: usize,
}

/// Ordinary, left and extended peak counts of `u` (distinct positive entries).
pub fn peak_stats(u: &[i32]) -> PeakStats {
    let n = u.len();
    let at = |i: usize| if i == 0 || i > n { 0 } else { u[i - 1] };
    let mut s = PeakStats {
        pk: 0,
        lpe: 0,
        xpe: 0,
    };
    for i in 1..=n {
        if at(i - 1) < at(i) && at(i) > at(i + 1) {
            s.xpe += 1;
            if i < n {
                s.lpe += 1;
                if i >= 2 {
                    s.pk += 1;
                }
            }
        }
    }
    s
}

/// Number of valleys `u_{i-1} > u_i < u_{i+1}` in the zero-bordered word.
pub fn valleys(u: &[i32]) -> usize {
    // the sentinels rule out valleys at the two ends
    (2..u.len())
        .filter(|&i| u[i - 2] > u[i - 1] && u[i - 1] < u[i])
        .count()
}

/// Weight attached to the tail pattern of a permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Phi {
    Zero,
    Half,
    One,
}

impl Phi {
    /// The weight times two, to keep sums integral.
    pub fn doubled(self) -> u32 {
        match self {
            Phi::Zero => 0,
            Phi::Half => 1,
            Phi::One => 2,
        }
    }
}

/// `1` if `u_{n-2} > u_{n-1} > u_n`, `0` if `u_{n-2} > u_n > u_{n-1}`, else `1/2`,
/// reading `u_0 = 0`.
pub fn phi(u: &[i32]) -> Result<Phi> {
    let n = u.len();
    if n < 2 {
        return Err(Error::Domain("phi needs at least two letters".into()));
    }
    let a = if n >= 3 { u[n - 3] } else { 0 };
    let (b, c) = (u[n - 2], u[n - 1]);
    Ok(if a > b && b > c {
        Phi::One
    } else if a > c && c > b {
        Phi::Zero
    } else {
        Phi::Half
    })
}
