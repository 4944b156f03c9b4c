//! Multilinear polynomials in `t_0, ..., t_n` indexed by subsets of the
//! color set `[0, n]`, and the flag f-vector / h-vector transforms.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// Largest supported rank: colors `0..=MAX_COLOR` fit in a `u64` mask.
pub const MAX_COLOR: usize = 63;

/// A subset of `[0, 63]`, stored as a bitmask (bit `j` is color `j`).
///
/// Ordered by cardinality, then lexicographically on the increasing element
/// list, which is the canonical order for serialized output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Subset(pub u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    /// `[0, n]`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_COLOR, "color {n} out of range");
        if n == MAX_COLOR {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << (n + 1)) - 1)
        }
    }

    /// `{lo, ..., hi}`, empty when `lo > hi`.
    pub fn range(lo: usize, hi: usize) -> Self {
        (lo..=hi).collect()
    }

    pub fn singleton(j: usize) -> Self {
        Subset(1 << j)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, j: usize) -> bool {
        j <= MAX_COLOR && self.0 >> j & 1 == 1
    }

    pub fn insert(&mut self, j: usize) {
        assert!(j <= MAX_COLOR, "color {j} out of range");
        self.0 |= 1 << j;
    }

    pub fn with(mut self, j: usize) -> Self {
        self.insert(j);
        self
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Subset) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    /// Complement inside `[0, n]`.
    pub fn complement(self, n: usize) -> Subset {
        Subset(Subset::full(n).0 & !self.0)
    }

    /// Elements in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            (bits != 0).then(|| {
                let j = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                j
            })
        })
    }

    /// All subsets of `self` (including the empty set and `self`).
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        let mask = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == mask {
                None
            } else {
                Some((cur.wrapping_sub(mask)) & mask)
            };
            Some(Subset(cur))
        })
    }

    /// Every subset of `[0, n]` in canonical order.
    pub fn all(n: usize) -> Vec<Subset> {
        let mut v: Vec<Subset> = Subset::full(n).subsets().collect();
        v.sort();
        v
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Subset::EMPTY;
        for j in iter {
            s.insert(j);
        }
        s
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, j) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{j}")?;
        }
        f.write_str("}")
    }
}

/// Value substituted for a variable `t_j` when specializing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Specialization {
    T,
    One,
}

/// `sum_J c_J prod_{j in J} t_j` over subsets `J` of `[0, n]`.
///
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FlagPolynomial {
    n: usize,
    terms: BTreeMap<Subset, BigInt>,
}

impl FlagPolynomial {
    pub fn zero(n: usize) -> Self {
        assert!(n <= MAX_COLOR, "rank {n} out of range");
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(n, Subset::EMPTY, 1)
    }

    pub fn monomial(n: usize, s: Subset, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(n);
        p.add_term(s, c.into());
        p
    }

    /// Build from `(subset, coefficient)` pairs; repeated subsets accumulate.
    pub fn from_terms<I, C>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Subset, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(n);
        let full = Subset::full(n);
        for (s, c) in terms {
            if !s.is_subset_of(full) {
                return Err(Error::Input(format!("subset {s} is not inside [0,{n}]")));
            }
            p.add_term(s, c.into());
        }
        Ok(p)
    }

    /// Dense coefficients indexed by bitmask, as produced by enumeration.
    pub fn from_dense(n: usize, counts: &[u64]) -> Self {
        assert_eq!(counts.len(), 1 << (n + 1));
        let mut p = Self::zero(n);
        for (mask, &c) in counts.iter().enumerate() {
            if c != 0 {
                p.terms.insert(Subset(mask as u64), BigInt::from(c));
            }
        }
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, s: Subset) -> BigInt {
        self.terms.get(&s).cloned().unwrap_or_default()
    }

    /// Nonzero terms in canonical subset order.
    pub fn terms(&self) -> impl Iterator<Item = (Subset, &BigInt)> {
        self.terms.iter().map(|(s, c)| (*s, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, s: Subset, c: BigInt) {
        if c.is_zero() {
            return;
        }
        assert!(
            s.is_subset_of(Subset::full(self.n)),
            "subset {s} outside [0,{}]",
            self.n
        );
        let slot = self.terms.entry(s).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&s);
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.n);
        for (s, x) in &self.terms {
            out.add_term(*s, x * c);
        }
        out
    }

    /// Divide every coefficient by `d`, or `None` if not exact.
    pub fn div_exact_scalar(&self, d: &BigInt) -> Option<Self> {
        let mut out = Self::zero(self.n);
        for (s, x) in &self.terms {
            if !(x % d).is_zero() {
                return None;
            }
            out.add_term(*s, x / d);
        }
        Some(out)
    }

    /// Sum of all coefficients (every `t_j = 1`).
    pub fn total(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Product of two flag polynomials whose result must stay multilinear:
    /// every pair of multiplied monomials has to use disjoint variables.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_rank(other)?;
        let mut out = Self::zero(self.n);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                if !a.is_disjoint(*b) {
                    return Err(Error::Input(format!(
                        "product of {a} and {b} is not multilinear"
                    )));
                }
                out.add_term(a.union(*b), x * y);
            }
        }
        Ok(out)
    }

    /// Rename variables: `t_j -> t_{map(j)}` into a polynomial of rank `n`.
    /// The map must be injective on the support.
    pub fn relabel(&self, n: usize, map: impl Fn(usize) -> usize) -> Result<Self> {
        let mut out = Self::zero(n);
        for (s, c) in &self.terms {
            let image: Vec<usize> = s.iter().map(&map).collect();
            let t: Subset = image.iter().copied().collect();
            if t.len() != image.len() || t.max().is_some_and(|m| m > n) {
                return Err(Error::Input(format!(
                    "relabeling of {s} is not valid in [0,{n}]"
                )));
            }
            out.add_term(t, c.clone());
        }
        Ok(out)
    }

    /// Embed into a larger color set without renaming.
    pub fn with_rank(&self, n: usize) -> Result<Self> {
        self.relabel(n, |j| j)
    }

    fn same_rank(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::Input(format!(
                "rank mismatch: [0,{}] vs [0,{}]",
                self.n, other.n
            )));
        }
        Ok(())
    }

    /// Substitute each `t_j` by `t` or `1`; every color in `[0, n]` must be assigned.
    pub fn specialize(&self, assignment: &BTreeMap<usize, Specialization>) -> Result<Polynomial> {
        if let Some(j) = (0..=self.n).find(|j| !assignment.contains_key(j)) {
            return Err(Error::Input(format!("color {j} has no assignment")));
        }
        let to_t: Subset = assignment
            .iter()
            .filter(|(_, v)| **v == Specialization::T)
            .map(|(j, _)| *j)
            .collect();
        Ok(self.specialize_to_t(to_t))
    }

    /// `t_j -> t` for `j` in `to_t`, every other variable to `1`.
    pub fn specialize_to_t(&self, to_t: Subset) -> Polynomial {
        let mut coeffs: Vec<BigInt> = vec![BigInt::zero(); self.n + 2];
        for (s, c) in &self.terms {
            coeffs[s.intersection(to_t).len()] += c;
        }
        Polynomial::new(coeffs)
    }

    /// All variables to `t`: the ordinary polynomial.
    pub fn univariate(&self) -> Polynomial {
        self.specialize_to_t(Subset::full(self.n))
    }

    /// `h_J = sum_{I subset J} (-1)^{|J \ I|} f_I`.
    pub fn f_to_h(&self) -> Self {
        self.transform(true)
    }

    /// `f_J = sum_{I subset J} h_I`.
    pub fn h_to_f(&self) -> Self {
        self.transform(false)
    }

    fn transform(&self, alternating: bool) -> Self {
        let full = Subset::full(self.n);
        let mut out = Self::zero(self.n);
        for (i, c) in &self.terms {
            // supersets J of I are I united with subsets of the complement
            for extra in full.difference(*i).subsets() {
                let neg = alternating && extra.len() % 2 == 1;
                out.add_term(i.union(extra), if neg { -c } else { c.clone() });
            }
        }
        out
    }

    /// Generalized Dehn-Sommerville symmetry `h_J = h_{J^c}`.
    pub fn dehn_sommerville_check(&self) -> bool {
        self.terms
            .iter()
            .all(|(s, c)| self.terms.get(&s.complement(self.n)) == Some(c))
    }
}

impl Add<&FlagPolynomial> for &FlagPolynomial {
    type Output = FlagPolynomial;
    fn add(self, rhs: &FlagPolynomial) -> FlagPolynomial {
        assert_eq!(self.n, rhs.n, "rank mismatch");
        let mut out = self.clone();
        for (s, c) in &rhs.terms {
            out.add_term(*s, c.clone());
        }
        out
    }
}

impl Sub<&FlagPolynomial> for &FlagPolynomial {
    type Output = FlagPolynomial;
    fn sub(self, rhs: &FlagPolynomial) -> FlagPolynomial {
        assert_eq!(self.n, rhs.n, "rank mismatch");
        let mut out = self.clone();
        for (s, c) in &rhs.terms {
            out.add_term(*s, -c);
        }
        out
    }
}

/// `2t0t1 - t0t1t2`-style rendering, terms in canonical order.
impl fmt::Display for FlagPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (s, c)) in self.terms.iter().enumerate() {
            let neg = c < &BigInt::zero();
            let mag = if neg { -c } else { c.clone() };
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if s.is_empty() || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            for j in s.iter() {
                write!(f, "t{j}")?;
            }
        }
        Ok(())
    }
}
