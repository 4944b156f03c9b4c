//! Truncated exponential generating functions in `z` over `Q[t]`.
//!
//! A series `F = sum_k f_k z^k / k!` is stored through its EGF coefficients
//! `f_k = k! [z^k] F`. For every generating function handled here these are
//! integer polynomials in `t`, so all arithmetic stays in `Z[t]`; the ordinary
//! coefficient `[z^k] F = f_k / k!` is recovered on demand as a
//! [`RationalPolynomial`].

use std::fmt;
use std::ops::{Add, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::family::Family;
use crate::poly::{Polynomial, RationalPolynomial};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    order: usize,
    egf: Vec<Polynomial>,
}

fn binomial_row(k: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for j in 0..k {
        let next = &row[j] * (k - j) / (j + 1);
        row.push(next);
    }
    row
}

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * i)
}

impl TruncatedSeries {
    /// Series with the given EGF coefficients `k! [z^k]`, padded or cut to `order`.
    pub fn from_egf(order: usize, mut egf: Vec<Polynomial>) -> Self {
        egf.resize(order + 1, Polynomial::zero());
        TruncatedSeries { order, egf }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_egf(order, Vec::new())
    }

    pub fn constant(p: Polynomial, order: usize) -> Self {
        Self::from_egf(order, vec![p])
    }

    /// The series `z`.
    pub fn z(order: usize) -> Self {
        Self::from_egf(order, vec![Polynomial::zero(), Polynomial::one()])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `k! [z^k]`.
    pub fn egf_coeff(&self, k: usize) -> &Polynomial {
        &self.egf[k]
    }

    pub fn egf_coeffs(&self) -> &[Polynomial] {
        &self.egf
    }

    /// `[z^k]` with rational coefficients.
    pub fn coefficient(&self, k: usize) -> RationalPolynomial {
        RationalPolynomial::from_scaled(&self.egf[k], &factorial(k))
    }

    fn check_order(&self, other: &Self) {
        assert_eq!(self.order, other.order, "series truncation orders differ");
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_order(other);
        let egf = (0..=self.order)
            .map(|k| {
                let binom = binomial_row(k);
                (0..=k)
                    .filter(|&j| !self.egf[j].is_zero() && !other.egf[k - j].is_zero())
                    .map(|j| (&self.egf[j] * &other.egf[k - j]).scale(&binom[j]))
                    .sum()
            })
            .collect();
        TruncatedSeries {
            order: self.order,
            egf,
        }
    }

    /// `self / den`. The constant term of `den` must divide every quotient
    /// coefficient exactly in `Z[t]`.
    pub fn div(&self, den: &Self) -> Result<Self> {
        self.check_order(den);
        let d0 = &den.egf[0];
        if d0.is_zero() {
            return Err(Error::Domain(
                "series division by a series with zero constant term".into(),
            ));
        }
        let mut out: Vec<Polynomial> = Vec::with_capacity(self.order + 1);
        for k in 0..=self.order {
            let binom = binomial_row(k);
            let mut rest = self.egf[k].clone();
            for j in 1..=k {
                if !den.egf[j].is_zero() && !out[k - j].is_zero() {
                    rest -= (&den.egf[j] * &out[k - j]).scale(&binom[j]);
                }
            }
            let q = rest.div_exact(d0).ok_or_else(|| {
                Error::Internal(format!(
                    "series quotient has a non-polynomial z^{k} coefficient"
                ))
            })?;
            out.push(q);
        }
        Ok(TruncatedSeries {
            order: self.order,
            egf: out,
        })
    }

    pub fn mul_poly(&self, p: &Polynomial) -> Self {
        TruncatedSeries {
            order: self.order,
            egf: self.egf.iter().map(|c| c * p).collect(),
        }
    }

    /// `z * self`, truncated.
    pub fn mul_z(&self) -> Self {
        let mut egf = vec![Polynomial::zero()];
        egf.extend((1..=self.order).map(|k| self.egf[k - 1].scale(&BigInt::from(k))));
        TruncatedSeries {
            order: self.order,
            egf,
        }
    }

    /// `F(t, c z)`.
    pub fn scale_z(&self, c: &BigInt) -> Self {
        let mut power = BigInt::one();
        let mut egf = Vec::with_capacity(self.order + 1);
        for f in &self.egf {
            egf.push(f.scale(&power));
            power *= c;
        }
        TruncatedSeries {
            order: self.order,
            egf,
        }
    }
}

impl Add<&TruncatedSeries> for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.check_order(rhs);
        TruncatedSeries {
            order: self.order,
            egf: self.egf.iter().zip(&rhs.egf).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub<&TruncatedSeries> for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.check_order(rhs);
        TruncatedSeries {
            order: self.order,
            egf: self.egf.iter().zip(&rhs.egf).map(|(a, b)| a - b).collect(),
        }
    }
}

/// `e^{a z}` through `z^order`.
pub fn exp_linear(a: &Polynomial, order: usize) -> TruncatedSeries {
    let mut egf = Vec::with_capacity(order + 1);
    let mut power = Polynomial::one();
    for _ in 0..=order {
        egf.push(power.clone());
        power = &power * a;
    }
    TruncatedSeries { order, egf }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesName {
    A,
    BC,
    D,
    AffA,
    AffC,
    AffB,
    AffD,
}

impl SeriesName {
    pub const ALL: [SeriesName; 7] = [
        SeriesName::A,
        SeriesName::BC,
        SeriesName::D,
        SeriesName::AffA,
        SeriesName::AffC,
        SeriesName::AffB,
        SeriesName::AffD,
    ];

    /// Series carrying the (affine) Eulerian polynomials of a classical family.
    pub fn for_family(family: Family, affine: bool) -> Result<Self> {
        Ok(match (family, affine) {
            (Family::A, false) => SeriesName::A,
            (Family::A, true) => SeriesName::AffA,
            (Family::B | Family::C, false) => SeriesName::BC,
            (Family::B, true) => SeriesName::AffB,
            (Family::C, true) => SeriesName::AffC,
            (Family::D, false) => SeriesName::D,
            (Family::D, true) => SeriesName::AffD,
            _ => {
                return Err(Error::Unsupported(format!(
                    "no generating function for {family}"
                )))
            }
        })
    }

    /// Smallest index at which [`extract`] returns a genuine group polynomial.
    pub fn min_index(self) -> usize {
        match self {
            SeriesName::A | SeriesName::BC | SeriesName::AffC => 1,
            SeriesName::D | SeriesName::AffA | SeriesName::AffB => 2,
            SeriesName::AffD => 3,
        }
    }
}

impl fmt::Display for SeriesName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SeriesName::A => "A",
            SeriesName::BC => "BC",
            SeriesName::D => "D",
            SeriesName::AffA => "affA",
            SeriesName::AffC => "affC",
            SeriesName::AffB => "affB",
            SeriesName::AffD => "affD",
        })
    }
}

impl FromStr for SeriesName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SeriesName::ALL
            .into_iter()
            .find(|n| n.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Input(format!("unknown series {s:?}")))
    }
}

/// The closed-form generating function `name`, expanded through `z^order`.
pub fn closed_form(name: SeriesName, order: usize) -> TruncatedSeries {
    let one_minus_t = Polynomial::from_coeffs([1, -1]);
    let t = Polynomial::t();
    let one = TruncatedSeries::constant(Polynomial::one(), order);
    let z = TruncatedSeries::z(order);
    let e1 = exp_linear(&one_minus_t, order);
    let e2 = exp_linear(&one_minus_t.scale(&BigInt::from(2)), order);
    let den = |e: &TruncatedSeries| &one - &e.mul_poly(&t);
    let numerator = match name {
        SeriesName::A => one.clone(),
        SeriesName::AffA => z.clone(),
        SeriesName::BC => e1.clone(),
        SeriesName::D => &e1 - &z,
        SeriesName::AffC => one.clone(),
        SeriesName::AffB => (&one - &e1.mul_z().mul_poly(&t)).mul_poly(&Polynomial::constant(2)),
        SeriesName::AffD => {
            let tz2 = z.mul_z().mul_poly(&t);
            let two_tz_e1 = e1.mul_z().mul_poly(&t.scale(&BigInt::from(2)));
            (&(&one + &tz2) - &two_tz_e1).mul_poly(&Polynomial::constant(2))
        }
    }
    .mul_poly(&one_minus_t);
    let denominator = match name {
        SeriesName::A | SeriesName::AffA => den(&e1),
        _ => den(&e2),
    };
    numerator
        .div(&denominator)
        .expect("closed-form generating functions have polynomial EGF coefficients")
}

/// `n! [z^n]` of the named series, including the small-index conventions
/// (for example `affD` at `n = 2` gives `4t`, and `A` at `n = 0` gives `1 = t * (1/t)`).
pub fn series_term(name: SeriesName, n: usize) -> Polynomial {
    closed_form(name, n).egf_coeff(n).clone()
}

/// The Eulerian or affine Eulerian polynomial carried by `series` at index `n`.
///
/// Indices follow [`crate::groups`]: for `A` and `affA`, `n` is the degree of
/// the symmetric group `S_n` (so `A` yields `A_{n-1}(t)`). Indices below
/// [`SeriesName::min_index`] are refused; use [`series_term`] for those.
pub fn extract_from(name: SeriesName, series: &TruncatedSeries, n: usize) -> Result<Polynomial> {
    if n < name.min_index() {
        return Err(Error::Domain(format!(
            "{name} at index {n} is a convention value, not a group polynomial"
        )));
    }
    if n > series.order() {
        return Err(Error::Domain(format!(
            "index {n} exceeds the series truncation {}",
            series.order()
        )));
    }
    let c = series.egf_coeff(n);
    if name == SeriesName::A {
        if !c.coeff(0).is_zero() {
            return Err(Error::Internal(format!(
                "t does not divide the z^{n} term of A"
            )));
        }
        return Ok(Polynomial::new(c.coeffs()[1..].to_vec()));
    }
    Ok(c.clone())
}

pub fn extract(name: SeriesName, n: usize) -> Result<Polynomial> {
    extract_from(name, &closed_form(name, n.max(name.min_index())), n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::brute_eulerian;
    use proptest::prelude::*;

    fn p(cs: &[i64]) -> Polynomial {
        Polynomial::from_coeffs(cs.iter().copied())
    }

    #[test]
    fn exp_linear_examples() {
        let e = exp_linear(&Polynomial::zero(), 3);
        assert_eq!(e, TruncatedSeries::constant(Polynomial::one(), 3));
        let e = exp_linear(&p(&[1, -1]), 2);
        assert_eq!(e.coefficient(2).to_integer(), None);
        assert_eq!(e.egf_coeff(2), &p(&[1, -2, 1]));
        let e = exp_linear(&p(&[2, -2]), 1);
        assert_eq!(e.egf_coeffs(), &[p(&[1]), p(&[2, -2])]);
    }

    #[test]
    fn closed_form_leading_terms() {
        assert_eq!(closed_form(SeriesName::AffC, 0).egf_coeff(0), &p(&[1]));
        assert_eq!(closed_form(SeriesName::AffB, 1).egf_coeff(1), &p(&[0, 2]));
        let d = closed_form(SeriesName::AffD, 2);
        assert_eq!(d.coefficient(2).to_integer(), Some(p(&[0, 2])));
        assert_eq!(d.egf_coeff(0), &p(&[2]));
        assert!(d.egf_coeff(1).is_zero());
        assert_eq!(series_term(SeriesName::AffD, 2), p(&[0, 4]));
        assert_eq!(series_term(SeriesName::A, 0), p(&[1]));
        assert_eq!(series_term(SeriesName::BC, 0), p(&[1]));
        assert_eq!(series_term(SeriesName::BC, 1), p(&[1, 1]));
        assert_eq!(series_term(SeriesName::D, 0), p(&[1]));
        assert_eq!(series_term(SeriesName::D, 1), p(&[0, 1]));
        assert_eq!(series_term(SeriesName::AffB, 0), p(&[2]));
        assert_eq!(series_term(SeriesName::AffC, 1), p(&[0, 2]));
        assert!(series_term(SeriesName::AffD, 1).is_zero());
    }

    #[test]
    fn extract_examples() {
        assert_eq!(extract(SeriesName::AffC, 2).unwrap(), p(&[0, 4, 4]));
        assert_eq!(extract(SeriesName::AffA, 3).unwrap(), p(&[0, 3, 3]));
        assert_eq!(
            extract(SeriesName::BC, 3).unwrap(),
            brute_eulerian(Family::B, 3, false).unwrap()
        );
        assert_eq!(extract(SeriesName::A, 3).unwrap(), p(&[1, 4, 1]));
        assert_eq!(extract(SeriesName::D, 2).unwrap(), p(&[1, 2, 1]));
        assert!(matches!(
            extract(SeriesName::AffD, 2),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            extract(SeriesName::AffB, 1),
            Err(Error::Domain(_))
        ));
        assert!(matches!(extract(SeriesName::A, 0), Err(Error::Domain(_))));
    }

    #[test]
    fn extract_matches_enumeration() {
        for family in Family::CLASSICAL {
            for affine in [false, true] {
                let name = SeriesName::for_family(family, affine).unwrap();
                let s = closed_form(name, 6);
                for n in name.min_index()..=6 {
                    assert_eq!(
                        extract_from(name, &s, n).unwrap(),
                        brute_eulerian(family, n, affine).unwrap(),
                        "{name} {n}"
                    );
                }
            }
        }
    }

    #[test]
    fn series_identities() {
        let n = 20;
        let f = |name| closed_form(name, n);
        let two = BigInt::from(2);
        let two_t = Polynomial::monomial(2, 1);
        let a2z = f(SeriesName::A).scale_z(&two);
        assert_eq!(f(SeriesName::BC), &f(SeriesName::D) + &a2z.mul_z());
        assert_eq!(
            f(SeriesName::AffC).mul_poly(&Polynomial::constant(2)),
            &f(SeriesName::AffB) + &f(SeriesName::BC).mul_z().mul_poly(&two_t)
        );
        assert_eq!(
            f(SeriesName::AffB),
            &f(SeriesName::AffD) + &f(SeriesName::D).mul_z().mul_poly(&two_t)
        );
        assert_eq!(f(SeriesName::AffA), f(SeriesName::A).mul_z());
        assert_eq!(f(SeriesName::AffC), a2z);
    }

    #[test]
    fn names_roundtrip() {
        for name in SeriesName::ALL {
            assert_eq!(name.to_string().parse::<SeriesName>().unwrap(), name);
        }
        assert!("affE".parse::<SeriesName>().is_err());
    }

    fn arb_series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
        prop::collection::vec(prop::collection::vec(-5i64..=5, 0..4), order + 1).prop_map(
            move |cs| {
                TruncatedSeries::from_egf(
                    order,
                    cs.into_iter().map(Polynomial::from_coeffs).collect(),
                )
            },
        )
    }

    proptest! {
        #[test]
        fn product_is_commutative_and_associative(
            a in arb_series(5), b in arb_series(5), c in arb_series(5)
        ) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }

        #[test]
        fn division_inverts_product(a in arb_series(6), b in arb_series(6)) {
            let mut egf = b.egf_coeffs().to_vec();
            egf[0] = p(&[1, -1]);
            let den = TruncatedSeries::from_egf(6, egf);
            prop_assert_eq!(a.mul(&den).div(&den).unwrap(), a);
        }

        #[test]
        fn exp_is_multiplicative(x in -4i64..=4, y in -4i64..=4) {
            let ex = exp_linear(&Polynomial::from_coeffs([x, 1]), 6);
            let ey = exp_linear(&Polynomial::from_coeffs([y, -2]), 6);
            let exy = exp_linear(&Polynomial::from_coeffs([x + y, -1]), 6);
            prop_assert_eq!(ex.mul(&ey), exy);
        }
    }
}
