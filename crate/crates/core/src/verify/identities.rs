//! Linear relations between ordinary and affine Eulerian polynomials.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::family::Family;
use crate::poly::Polynomial;
use crate::verify::{eulerian, timed, Ceiling, CheckResult, Residual};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Identity {
    /// `2 affC_n = affB_n + 2n t C_{n-1}`
    Cbc,
    /// `affB_n = affD_n + 2n t D_{n-1}`
    Bdd,
    /// `B_n = D_n + n 2^{n-1} t A_{n-2}`
    Bda,
}

impl Identity {
    pub const ALL: [Identity; 3] = [Identity::Cbc, Identity::Bdd, Identity::Bda];

    pub fn min_n(self) -> usize {
        match self {
            Identity::Cbc | Identity::Bda => 2,
            Identity::Bdd => 3,
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Identity::Cbc => "CBC",
            Identity::Bdd => "BDD",
            Identity::Bda => "BDA",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cyclic {
    /// `affA_n = (n+1) t A_{n-1}`
    A,
    /// `affC_n = 2^n t A_{n-1}`
    C,
}

impl fmt::Display for Cyclic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Cyclic::A => "cyclic-A",
            Cyclic::C => "cyclic-C",
        })
    }
}

fn t_times(c: BigInt, p: &Polynomial) -> Polynomial {
    p.shift(1).scale(&c)
}

/// `lhs - rhs` of the identity at rank `n`.
pub fn identity_residual(which: Identity, n: usize, ceiling: Ceiling) -> Result<Polynomial> {
    if n < which.min_n() {
        return Err(Error::Domain(format!(
            "{which} needs n >= {}, got {n}",
            which.min_n()
        )));
    }
    let e = |family, k, affine| eulerian(family, k, affine, ceiling);
    let two_n = BigInt::from(2 * n);
    Ok(match which {
        Identity::Cbc => {
            e(Family::C, n, true)?.scale(&BigInt::from(2))
                - e(Family::B, n, true)?
                - t_times(two_n, &e(Family::C, n - 1, false)?)
        }
        Identity::Bdd => {
            e(Family::B, n, true)?
                - e(Family::D, n, true)?
                - t_times(two_n, &e(Family::D, n - 1, false)?)
        }
        Identity::Bda => {
            // A_{n-2} is the Eulerian polynomial of S_{n-1}
            e(Family::B, n, false)?
                - e(Family::D, n, false)?
                - t_times(BigInt::from(n) << (n - 1), &e(Family::A, n - 1, false)?)
        }
    })
}

pub fn check_identity(which: Identity, n: usize, ceiling: Ceiling) -> Result<CheckResult> {
    identity_residual(which, n, ceiling)?;
    timed(format!("{which} n={n}"), || {
        identity_residual(which, n, ceiling).map(Residual::Univariate)
    })
}

/// `n` is the Coxeter rank: `affA_n` belongs to `S_{n+1}`.
pub fn check_cyclic(which: Cyclic, n: usize, ceiling: Ceiling) -> Result<CheckResult> {
    if n == 0 {
        return Err(Error::Domain(format!("{which} needs n >= 1")));
    }
    timed(format!("{which} n={n}"), || {
        let a = eulerian(Family::A, n, false, ceiling)?;
        let residual = match which {
            Cyclic::A => {
                eulerian(Family::A, n + 1, true, ceiling)? - t_times(BigInt::from(n + 1), &a)
            }
            Cyclic::C => eulerian(Family::C, n, true, ceiling)? - t_times(BigInt::from(1) << n, &a),
        };
        Ok(Residual::Univariate(residual))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::brute_eulerian;

    fn p(cs: &[i64]) -> Polynomial {
        Polynomial::from_coeffs(cs.iter().copied())
    }

    #[test]
    fn small_cases_by_hand() {
        // 2(4t + 4t^2) = (4t + 4t^2) + 4t(1 + t)
        assert_eq!(brute_eulerian(Family::C, 2, true).unwrap(), p(&[0, 4, 4]));
        assert_eq!(brute_eulerian(Family::B, 2, true).unwrap(), p(&[0, 4, 4]));
        assert_eq!(brute_eulerian(Family::D, 2, false).unwrap(), p(&[1, 2, 1]));
        assert_eq!(brute_eulerian(Family::B, 2, false).unwrap(), p(&[1, 6, 1]));
        assert_eq!(
            brute_eulerian(Family::C, 3, true).unwrap(),
            p(&[0, 8, 32, 8])
        );
    }

    #[test]
    fn identities_hold() {
        let ceiling = Ceiling::default();
        for which in Identity::ALL {
            for n in which.min_n()..=7 {
                let r = check_identity(which, n, ceiling).unwrap();
                assert!(r.ok, "{} {:?}", r.name, r.residual);
            }
        }
        for which in [Cyclic::A, Cyclic::C] {
            for n in 1..=7 {
                let r = check_cyclic(which, n, ceiling).unwrap();
                assert!(r.ok, "{} {:?}", r.name, r.residual);
            }
        }
        assert!(check_identity(Identity::Bdd, 2, ceiling).is_err());
    }

    #[test]
    fn large_ranks_use_generating_functions() {
        let small = Ceiling::new(100);
        for n in 2..=12 {
            assert!(check_identity(Identity::Cbc, n, small).unwrap().ok);
            assert!(check_cyclic(Cyclic::C, n, small).unwrap().ok);
        }
    }
}
