use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::Zero;

use super::primes::Prime;
use crate::error::{Error, Result};

pub const DEFAULT_PRECISION: u32 = 32;

/// A p-adic integer known modulo `p^precision`.
///
/// Finite precision cannot tell zero apart from an element of valuation at
/// least `precision`, so exact zero is carried as a separate flag.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PAdicApprox {
    prime: Prime,
    precision: u32,
    residue: BigUint,
    exactly_zero: bool,
}

/// Result of writing a p-adic integer as `p^k · u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decomposition {
    /// The exact zero, the base point of ℕ₊.
    Star,
    /// `z = p^exponent · unit`; the unit is known to `precision - exponent` digits.
    PowerTimesUnit { exponent: u32, unit: PAdicApprox },
}

impl PAdicApprox {
    /// Element with the given residue, reduced modulo `p^precision`.
    pub fn new(prime: Prime, precision: u32, residue: BigUint) -> Result<Self> {
        if precision == 0 {
            return Err(Error::ZeroPrecision);
        }
        let modulus = prime.pow(precision);
        Ok(PAdicApprox {
            prime,
            precision,
            residue: residue % modulus,
            exactly_zero: false,
        })
    }

    /// Image of an ordinary integer. The integer zero is known exactly.
    pub fn from_integer(prime: Prime, precision: u32, z: &BigInt) -> Result<Self> {
        if precision == 0 {
            return Err(Error::ZeroPrecision);
        }
        if z.is_zero() {
            return Self::zero(prime, precision);
        }
        let modulus = BigInt::from(prime.pow(precision));
        let residue = z.mod_floor(&modulus).to_biguint().expect("mod_floor is non-negative");
        Self::new(prime, precision, residue)
    }

    pub fn zero(prime: Prime, precision: u32) -> Result<Self> {
        if precision == 0 {
            return Err(Error::ZeroPrecision);
        }
        Ok(PAdicApprox {
            prime,
            precision,
            residue: BigUint::zero(),
            exactly_zero: true,
        })
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn residue(&self) -> &BigUint {
        &self.residue
    }

    pub fn is_exactly_zero(&self) -> bool {
        self.exactly_zero
    }

    pub fn is_unit(&self) -> bool {
        !(&self.residue % self.prime.to_biguint()).is_zero()
    }

    pub fn modulus(&self) -> BigUint {
        self.prime.pow(self.precision)
    }

    /// Additive inverse.
    pub fn neg(&self) -> PAdicApprox {
        if self.exactly_zero || self.residue.is_zero() {
            return self.clone();
        }
        PAdicApprox {
            residue: self.modulus() - &self.residue,
            ..self.clone()
        }
    }

    /// Product with another approximation at the same prime; the precision
    /// of the result is the smaller of the two.
    pub fn mul(&self, other: &PAdicApprox) -> Result<PAdicApprox> {
        if self.prime != other.prime {
            return Err(Error::PrimeMismatch {
                expected: self.prime.get(),
                found: other.prime.get(),
            });
        }
        let precision = self.precision.min(other.precision);
        if self.exactly_zero || other.exactly_zero {
            return Self::zero(self.prime, precision);
        }
        Self::new(self.prime, precision, &self.residue * &other.residue)
    }

    /// Split off the largest power of `p`.
    pub fn decompose(&self) -> Result<Decomposition> {
        if self.exactly_zero {
            return Ok(Decomposition::Star);
        }
        if self.residue.is_zero() {
            return Err(Error::InsufficientPrecision {
                prime: self.prime.get(),
                precision: self.precision,
            });
        }
        let p = self.prime.to_biguint();
        let mut rest = self.residue.clone();
        let mut k = 0;
        loop {
            let (q, r) = rest.div_rem(&p);
            if !r.is_zero() {
                break;
            }
            rest = q;
            k += 1;
        }
        let unit = PAdicApprox::new(self.prime, self.precision - k, rest)?;
        Ok(Decomposition::PowerTimesUnit { exponent: k, unit })
    }
}

/// Free-function form of [`PAdicApprox::decompose`].
pub fn padic_decompose(z: &PAdicApprox) -> Result<Decomposition> {
    z.decompose()
}

impl fmt::Display for PAdicApprox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exactly_zero {
            write!(f, "0 (exact) in Z_{}", self.prime)
        } else {
            write!(
                f,
                "{} mod {}^{}",
                self.residue, self.prime, self.precision
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn twelve_at_two() {
        let z = PAdicApprox::new(p(2), 8, BigUint::from(12u32)).unwrap();
        let Decomposition::PowerTimesUnit { exponent, unit } = z.decompose().unwrap() else {
            panic!("expected a unit decomposition");
        };
        assert_eq!(exponent, 2);
        assert_eq!(unit.precision(), 6);
        assert_eq!(unit.residue(), &BigUint::from(3u32));
        assert!(unit.is_unit());
    }

    #[test]
    fn unit_case() {
        let z = PAdicApprox::new(p(5), 4, BigUint::from(7u32)).unwrap();
        let Decomposition::PowerTimesUnit { exponent, unit } = z.decompose().unwrap() else {
            panic!();
        };
        assert_eq!(exponent, 0);
        assert_eq!(unit, z);
    }

    #[test]
    fn exact_zero_is_star() {
        let z = PAdicApprox::zero(p(3), 10).unwrap();
        assert_eq!(z.decompose().unwrap(), Decomposition::Star);
        let z = PAdicApprox::from_integer(p(3), 10, &BigInt::zero()).unwrap();
        assert_eq!(z.decompose().unwrap(), Decomposition::Star);
    }

    #[test]
    fn vanishing_residue_needs_more_precision() {
        let z = PAdicApprox::from_integer(p(2), 4, &BigInt::from(48)).unwrap();
        assert_eq!(
            z.decompose(),
            Err(Error::InsufficientPrecision { prime: 2, precision: 4 })
        );
        assert_eq!(PAdicApprox::new(p(2), 0, BigUint::zero()), Err(Error::ZeroPrecision));
    }

    #[test]
    fn negative_integers_reduce() {
        let z = PAdicApprox::from_integer(p(5), 2, &BigInt::from(-1)).unwrap();
        assert_eq!(z.residue(), &BigUint::from(24u32));
        assert_eq!(z.neg().residue(), &BigUint::from(1u32));
    }

    proptest! {
        #[test]
        fn decompose_roundtrip(
            pi in 0usize..15,
            n in 1u32..40,
            kf in 0.0f64..1.0,
            u in 1u64..1_000_000_000,
        ) {
            let prime = p(crate::arith::primes_up_to(50)[pi]);
            let k = ((n as f64) * kf) as u32 % n;
            let u = if u % prime.get() == 0 { u + 1 } else { u };
            let modulus = prime.pow(n);
            let z = (prime.pow(k) * BigUint::from(u)) % &modulus;
            let z = PAdicApprox::new(prime, n, z).unwrap();
            let Decomposition::PowerTimesUnit { exponent, unit } = z.decompose().unwrap() else {
                panic!();
            };
            prop_assert_eq!(exponent, k);
            prop_assert_eq!(unit.precision(), n - k);
            prop_assert_eq!(unit.residue(), &(BigUint::from(u) % prime.pow(n - k)));
            prop_assert!(unit.is_unit());
        }
    }
}
