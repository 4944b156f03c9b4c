//! Dense univariate polynomials in `t` with arbitrary-precision integer
//! coefficients, together with the predicates used on Eulerian polynomials:
//! symmetry, unimodality, gamma-vectors and exact real-root counting.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Polynomial `c_0 + c_1 t + ... + c_d t^d` over the integers.
///
/// The coefficient vector never has trailing zeros, so the zero polynomial
/// is the empty vector and structural equality is polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    /// `c t^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c.into();
        Self::new(coeffs)
    }

    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_coeffs<I, C>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        Self::new(coeffs.into_iter().map(Into::into).collect())
    }

    /// `(a + b t)^k`.
    pub fn linear_power(a: impl Into<BigInt>, b: impl Into<BigInt>, k: usize) -> Self {
        Self::from_coeffs([a.into(), b.into()]).pow(k)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `t^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| {
                acc * x + BigRational::from_integer(c.clone())
            })
    }

    /// Sum of the coefficients, i.e. the value at `t = 1`.
    pub fn sum(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn pow(&self, mut k: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    /// Coefficients in reverse order about `m`: `t^m p(1/t)`.
    ///
    /// Requires `m >= degree`.
    pub fn reflect(&self, m: usize) -> Self {
        Self::new((0..=m).map(|k| self.coeff(m - k)).collect())
    }

    /// Substitute `t -> c t`.
    pub fn dilate(&self, c: &BigInt) -> Self {
        let mut power = BigInt::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for x in &self.coeffs {
            out.push(x * &power);
            power *= c;
        }
        Self::new(out)
    }

    /// Gcd of the coefficients, nonnegative; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// `self / content`, normalized to a positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading_coeff().is_some_and(Signed::is_negative) {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Divide every coefficient by `d`, or `None` if some coefficient is not a multiple.
    pub fn div_exact_scalar(&self, d: &BigInt) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(Self::new(out))
    }

    /// Exact quotient `self / d` in `Z[t]`, or `None` when `d` does not divide.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let dd = d.degree()?;
        let Some(nd) = self.degree() else {
            return Some(Self::zero());
        };
        if nd < dd {
            return None;
        }
        let lead = d.leading_coeff()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (i, c) in d.coeffs.iter().enumerate() {
                rem[k + i] -= &q * c;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(quot))
    }

    /// Pseudo-remainder: `lc(d)^(deg self - deg d + 1) * self mod d`.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("pseudo-remainder by zero polynomial");
        let lead = d.leading_coeff().unwrap().clone();
        let mut rem = self.clone();
        let Some(nd) = rem.degree() else {
            return rem;
        };
        if nd < dd {
            return rem;
        }
        // Pad with the exact power so the sign is predictable for callers.
        let steps = nd - dd + 1;
        let mut applied = 0;
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let top = rem.coeffs[rd].clone();
            let mut next: Vec<BigInt> = rem.coeffs.iter().map(|c| c * &lead).collect();
            for (i, c) in d.coeffs.iter().enumerate() {
                next[rd - dd + i] -= &top * c;
            }
            rem = Self::new(next);
            applied += 1;
        }
        if applied < steps {
            rem = rem.scale(&num_traits::pow(lead, steps - applied));
        }
        rem
    }

    /// Greatest common divisor in `Z[t]`, primitive with positive leading
    /// coefficient. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a
    }

    /// Square-free part `p / gcd(p, p')`, primitive.
    pub fn square_free_part(&self) -> Self {
        let g = self.gcd(&self.derivative());
        if g.degree().unwrap_or(0) == 0 {
            return self.primitive_part();
        }
        self.primitive_part()
            .div_exact(&g)
            .expect("gcd divides its argument")
    }
}

impl From<BigInt> for Polynomial {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

macro_rules! forward_binop {
    ($Trait:ident, $method:ident) => {
        impl $Trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $Trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl $Trait<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.trim();
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        self.trim();
    }
}

impl AddAssign for Polynomial {
    fn add_assign(&mut self, rhs: Polynomial) {
        *self += &rhs;
    }
}

impl SubAssign for Polynomial {
    fn sub_assign(&mut self, rhs: Polynomial) {
        *self -= &rhs;
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -self.clone()
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Self {
        iter.fold(Polynomial::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl Polynomial {
    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

/// Human-readable form in ascending powers: `10t + 28t^2 + 10t^3`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            if k == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }
}

/// Polynomial in `t` with rational coefficients. Only used to expose
/// series coefficients such as `(1-t)^2/2`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RationalPolynomial {
    coeffs: Vec<BigRational>,
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// `numerator / denominator`.
    pub fn from_scaled(numerator: &Polynomial, denominator: &BigInt) -> Self {
        Self::new(
            numerator
                .coeffs()
                .iter()
                .map(|c| BigRational::new(c.clone(), denominator.clone()))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// The integer polynomial, when every coefficient is integral.
    pub fn to_integer(&self) -> Option<Polynomial> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(Polynomial::new)
    }
}

/// Gamma-vector of a symmetric polynomial: `p = sum_i gamma_i t^i (1+t)^(m-2i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaVector {
    pub center: usize,
    pub entries: Vec<BigInt>,
}

impl GammaVector {
    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|g| !g.is_negative())
    }

    /// Expand back into the monomial basis.
    pub fn reconstruct(&self) -> Polynomial {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, g)| !g.is_zero())
            .map(|(i, g)| {
                Polynomial::linear_power(1, 1, self.center - 2 * i)
                    .shift(i)
                    .scale(g)
            })
            .sum()
    }
}

fn check_center(p: &Polynomial, m: usize) -> Result<()> {
    match p.degree() {
        Some(d) if d > m => Err(Error::Input(format!(
            "symmetry center {m} is below the degree {d}"
        ))),
        _ => Ok(()),
    }
}

/// Whether `p(t) = t^m p(1/t)`.
pub fn is_symmetric(p: &Polynomial, m: usize) -> Result<bool> {
    check_center(p, m)?;
    Ok((0..=m / 2).all(|k| p.coeff(k) == p.coeff(m - k)))
}

/// The unique gamma-vector of `p` about center `m`.
pub fn gamma_extract(p: &Polynomial, m: usize) -> Result<GammaVector> {
    if !is_symmetric(p, m)? {
        return Err(Error::NotSymmetric { center: m });
    }
    // t^i (1+t)^(m-2i) has lowest term t^i, so peel off one basis element at a time.
    let mut rest = p.clone();
    let mut entries = Vec::with_capacity(m / 2 + 1);
    for i in 0..=m / 2 {
        let g = rest.coeff(i);
        if !g.is_zero() {
            rest -= Polynomial::linear_power(1, 1, m - 2 * i).shift(i).scale(&g);
        }
        entries.push(g);
    }
    if !rest.is_zero() {
        return Err(Error::Internal(format!(
            "gamma expansion left a nonzero remainder {rest}"
        )));
    }
    Ok(GammaVector { center: m, entries })
}

/// Weak unimodality of the coefficient list `c_0, ..., c_d`: it never
/// rises again once it has strictly fallen.
pub fn is_unimodal(p: &Polynomial) -> bool {
    let mut falling = false;
    for w in p.coeffs().windows(2) {
        match w[0].cmp(&w[1]) {
            Ordering::Greater => falling = true,
            Ordering::Less if falling => return false,
            _ => {}
        }
    }
    true
}

/// Real-root counts of a nonzero polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RealRootCount {
    pub distinct: usize,
    pub with_multiplicity: usize,
}

/// Sturm sequence of a polynomial, scaled by positive constants at each step
/// so that every entry stays in `Z[t]` without changing any sign.
pub fn sturm_sequence(p: &Polynomial) -> Vec<Polynomial> {
    let mut seq = vec![p.clone()];
    if p.degree().unwrap_or(0) == 0 {
        return seq;
    }
    let dp = p.derivative();
    let content = dp.content();
    seq.push(dp.div_exact_scalar(&content).unwrap());
    loop {
        let n = seq.len();
        let (a, b) = (&seq[n - 2], &seq[n - 1]);
        if b.degree() == Some(0) {
            break;
        }
        let r = a.pseudo_rem(b);
        if r.is_zero() {
            break;
        }
        // prem = lc(b)^k * rem; the sequence wants -rem up to a positive factor.
        let k = a.degree().unwrap() - b.degree().unwrap() + 1;
        let flip = b.leading_coeff().unwrap().is_positive() || k % 2 == 0;
        let content = r.content();
        let r = r.div_exact_scalar(&content).unwrap();
        seq.push(if flip { -r } else { r });
    }
    seq
}

fn sign_variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn sign_of(x: &BigInt) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Number of distinct real roots of a square-free polynomial via Sturm's theorem,
/// evaluating the sequence at +/- infinity through leading coefficients.
fn sturm_count_square_free(q: &Polynomial) -> usize {
    let seq = sturm_sequence(q);
    let at_pos = sign_variations(seq.iter().map(|s| sign_of(s.leading_coeff().unwrap())));
    let at_neg = sign_variations(seq.iter().map(|s| {
        let lc = sign_of(s.leading_coeff().unwrap());
        if s.degree().unwrap() % 2 == 1 {
            -lc
        } else {
            lc
        }
    }));
    at_neg - at_pos
}

/// Distinct and multiplicity-weighted counts of real roots.
///
/// The distinct count runs Sturm on the square-free part; the weighted count
/// repeats on `gcd(p, p')`, whose roots are the repeated roots of `p` with
/// multiplicities lowered by one.
pub fn real_root_counts(p: &Polynomial) -> Result<RealRootCount> {
    if p.is_zero() {
        return Err(Error::Domain("real roots of the zero polynomial".into()));
    }
    let distinct = sturm_count_square_free(&p.square_free_part());
    let mut with_multiplicity = distinct;
    let mut current = p.primitive_part();
    loop {
        let g = current.gcd(&current.derivative());
        if g.degree().unwrap_or(0) == 0 {
            break;
        }
        with_multiplicity += sturm_count_square_free(&g.square_free_part());
        current = g;
    }
    Ok(RealRootCount {
        distinct,
        with_multiplicity,
    })
}

/// Number of distinct real roots.
pub fn count_real_roots(p: &Polynomial) -> Result<usize> {
    real_root_counts(p).map(|c| c.distinct)
}

/// Whether every complex root of `p` is real (counted with multiplicity).
pub fn is_real_rooted(p: &Polynomial) -> Result<bool> {
    let counts = real_root_counts(p)?;
    Ok(counts.with_multiplicity == p.degree().unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_coeffs(c.iter().copied())
    }

    #[test]
    fn display_matches_table_style() {
        assert_eq!(p(&[0, 10, 28, 10]).to_string(), "10t + 28t^2 + 10t^3");
        assert_eq!(p(&[1, -1]).to_string(), "1 - t");
        assert_eq!(p(&[0, -1, 0, 1]).to_string(), "-t + t^3");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(p(&[0, 2]).to_string(), "2t");
    }

    #[test]
    fn symmetry() {
        assert!(is_symmetric(&p(&[0, 10, 28, 10]), 4).unwrap());
        assert!(is_symmetric(&Polynomial::one(), 0).unwrap());
        // (0,1,2,0) reversed is (0,2,1,0)
        assert!(!is_symmetric(&p(&[0, 1, 2]), 3).unwrap());
        assert!(matches!(
            is_symmetric(&p(&[0, 1, 2]), 1),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn gamma_vectors() {
        let g = gamma_extract(&p(&[0, 10, 28, 10]), 4).unwrap();
        assert_eq!(g.entries, vec![0.into(), 10.into(), 8.into()]);
        assert!(g.is_nonnegative());
        let g = gamma_extract(&p(&[1, 2, 1]), 2).unwrap();
        assert_eq!(g.entries, vec![1.into(), 0.into()]);
        let g = gamma_extract(&p(&[0, 6, 6]), 3).unwrap();
        assert_eq!(g.entries, vec![0.into(), 6.into()]);
        assert_eq!(
            gamma_extract(&p(&[0, 1, 2]), 3),
            Err(Error::NotSymmetric { center: 3 })
        );
        let neg = GammaVector {
            center: 2,
            entries: vec![1.into(), (-1).into()],
        };
        assert!(!neg.is_nonnegative());
    }

    #[test]
    fn unimodality() {
        assert!(is_unimodal(&p(&[0, 10, 28, 10])));
        assert!(is_unimodal(&p(&[1, 1, 1])));
        assert!(!is_unimodal(&p(&[2, 1, 2])));
        assert!(is_unimodal(&p(&[1, 3, 3, 1])));
    }

    #[test]
    fn real_roots() {
        assert_eq!(count_real_roots(&p(&[0, 6, 6])).unwrap(), 2);
        assert_eq!(count_real_roots(&p(&[1, 0, 1])).unwrap(), 0);
        assert_eq!(count_real_roots(&p(&[0, 10, 28, 10])).unwrap(), 3);
        assert!(is_real_rooted(&p(&[0, 10, 28, 10])).unwrap());
        assert!(!is_real_rooted(&p(&[1, 1, 1])).unwrap());
        assert!(is_real_rooted(&p(&[0, 0, 1])).unwrap());
        assert_eq!(
            real_root_counts(&p(&[0, 0, 1])).unwrap(),
            RealRootCount {
                distinct: 1,
                with_multiplicity: 2
            }
        );
        assert!(matches!(
            count_real_roots(&Polynomial::zero()),
            Err(Error::Domain(_))
        ));
        // (t-1)^3 (t^2+1)
        let q = p(&[-1, 1]).pow(3) * p(&[1, 0, 1]);
        let c = real_root_counts(&q).unwrap();
        assert_eq!((c.distinct, c.with_multiplicity), (1, 3));
        assert!(!is_real_rooted(&q).unwrap());
    }

    #[test]
    fn exact_division_and_gcd() {
        let a = p(&[1, 1]).pow(3) * p(&[2, -3]);
        let b = p(&[1, 1]).pow(2) * p(&[5, 0, 1]);
        assert_eq!(a.gcd(&b), p(&[1, 1]).pow(2));
        assert_eq!(a.div_exact(&p(&[2, -3])), Some(p(&[1, 1]).pow(3)));
        assert_eq!(a.div_exact(&p(&[5, 0, 1])), None);
        assert_eq!(
            p(&[2, 4]).div_exact_scalar(&BigInt::from(2)),
            Some(p(&[1, 2]))
        );
        assert_eq!(p(&[2, 3]).div_exact_scalar(&BigInt::from(2)), None);
    }

    #[test]
    fn rational_view() {
        let r = RationalPolynomial::from_scaled(&p(&[1, -2, 1]), &BigInt::from(2));
        assert_eq!(r.coeffs()[0], BigRational::new(1.into(), 2.into()));
        assert_eq!(r.to_integer(), None);
        let r = RationalPolynomial::from_scaled(&p(&[2, -4]), &BigInt::from(2));
        assert_eq!(r.to_integer(), Some(p(&[1, -2])));
    }

    fn symmetric_poly() -> impl Strategy<Value = (Polynomial, usize)> {
        (0usize..=20).prop_flat_map(|m| {
            prop::collection::vec(-50i64..50, m / 2 + 1).prop_map(move |half| {
                let mut c = vec![0i64; m + 1];
                for (k, v) in half.iter().enumerate() {
                    c[k] = *v;
                    c[m - k] = *v;
                }
                (Polynomial::from_coeffs(c), m)
            })
        })
    }

    /// Sign changes of `p` across a fine rational grid; a lower bound on the
    /// distinct real roots which is exact once the grid separates the roots.
    fn grid_sign_changes(q: &Polynomial, roots: &[i64]) -> usize {
        let mut xs: Vec<BigRational> = Vec::new();
        let lo = roots.iter().min().unwrap() - 1;
        let hi = roots.iter().max().unwrap() + 1;
        for k in (4 * lo)..=(4 * hi) {
            xs.push(BigRational::new(BigInt::from(2 * k + 1), BigInt::from(8)));
        }
        let signs: Vec<i8> = xs
            .iter()
            .map(|x| {
                let v = q.eval_rational(x);
                if v.is_positive() {
                    1
                } else if v.is_negative() {
                    -1
                } else {
                    0
                }
            })
            .collect();
        signs.windows(2).filter(|w| w[0] * w[1] < 0).count()
    }

    proptest! {
        #[test]
        fn gamma_roundtrip((q, m) in symmetric_poly()) {
            let g = gamma_extract(&q, m).unwrap();
            prop_assert_eq!(g.reconstruct(), q.clone());
            if g.is_nonnegative() {
                prop_assert!(is_unimodal(&q));
            }
        }

        #[test]
        fn nonnegative_gamma_gives_unimodal(
            m in 0usize..16,
            gs in prop::collection::vec(0i64..40, 9),
        ) {
            let g = GammaVector {
                center: m,
                entries: gs[..=m / 2].iter().map(|&x| BigInt::from(x)).collect(),
            };
            prop_assert!(is_unimodal(&g.reconstruct()));
        }

        #[test]
        fn sturm_matches_grid_on_split_products(
            roots in prop::collection::vec(-6i64..6, 1..=10),
            lead in prop::sample::select(vec![-3i64, -1, 1, 2, 5]),
        ) {
            // product of (t - r) with integer roots; distinct roots are at integers,
            // so the half-integer-offset grid separates them (odd multiplicity only
            // changes sign, so compare against the odd-multiplicity distinct roots).
            let q = roots
                .iter()
                .fold(Polynomial::constant(lead), |acc, &r| acc * Polynomial::from_coeffs([-r, 1]));
            let mut distinct = roots.clone();
            distinct.sort_unstable();
            distinct.dedup();
            let counts = real_root_counts(&q).unwrap();
            prop_assert_eq!(counts.distinct, distinct.len());
            prop_assert_eq!(counts.with_multiplicity, roots.len());
            let odd = distinct
                .iter()
                .filter(|r| roots.iter().filter(|x| x == r).count() % 2 == 1)
                .count();
            prop_assert_eq!(grid_sign_changes(&q, &roots), odd);
            prop_assert!(is_real_rooted(&q).unwrap());
        }

        #[test]
        fn sturm_is_additive_on_coprime_factors(
            roots in prop::collection::btree_set(-8i64..8, 1..=5),
            shift in 1i64..6,
        ) {
            // p has the given real roots; q = t^2 + shift has none and is coprime to p.
            let p = roots.iter().fold(Polynomial::one(), |acc, &r| acc * Polynomial::from_coeffs([-r, 1]));
            let q = Polynomial::from_coeffs([shift, 0, 1]);
            let r = Polynomial::from_coeffs([-100, 1]);
            prop_assert_eq!(count_real_roots(&(&p * &q)).unwrap(), roots.len());
            prop_assert_eq!(count_real_roots(&(&p * &r)).unwrap(), roots.len() + 1);
        }
    }
}
