use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::primes::Prime;
use crate::error::{Error, Result};

/// An exact rational number in lowest terms with positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(BigRational);

impl Rat {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Self {
        let denom = denom.into();
        assert!(!denom.is_zero(), "zero denominator");
        Rat(BigRational::new(numer.into(), denom))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rat(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    /// `1 / p^r`.
    pub fn inverse_prime_power(p: Prime, r: u32) -> Self {
        Rat::new(1, BigInt::from(p.pow(r)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn denom_unsigned(&self) -> BigUint {
        self.0.denom().magnitude().clone()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn recip(&self) -> Option<Rat> {
        if self.is_zero() {
            None
        } else {
            Some(Rat(self.0.recip()))
        }
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }
}

impl From<BigRational> for Rat {
    fn from(r: BigRational) -> Self {
        Rat(r)
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::from_integer(n)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(self.0.$method(rhs.0))
            }
        }
        impl<'a> $tr<&'a Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: &'a Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Rat {
    type Err = Error;

    /// Accepts `a` or `a/b` with decimal integers, `b` nonzero.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (s, None),
        };
        let num: BigInt = num
            .parse()
            .map_err(|_| Error::parse(0, format!("invalid numerator {num:?}")))?;
        let den: BigInt = match den {
            Some(d) => d
                .parse()
                .map_err(|_| Error::parse(s.len() - d.len(), format!("invalid denominator {d:?}")))?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(Error::parse(s.len(), "zero denominator"));
        }
        Ok(Rat::new(num, den))
    }
}

/// p-adic valuation of a rational: a signed exponent, or `+∞` for zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinity,
}

impl Add for Valuation {
    type Output = Valuation;
    fn add(self, rhs: Valuation) -> Valuation {
        match (self, rhs) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinity,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinity => f.write_str("inf"),
        }
    }
}

/// Number of times `p` divides the nonzero integer `n`, and the cofactor.
pub(crate) fn split_prime_power(n: &BigInt, p: Prime) -> (u32, BigInt) {
    debug_assert!(!n.is_zero());
    let pb = BigInt::from(p.get());
    let mut rest = n.clone();
    let mut e = 0;
    loop {
        let (q, r) = rest.div_rem(&pb);
        if !r.is_zero() {
            return (e, rest);
        }
        rest = q;
        e += 1;
    }
}

/// Exponent of `p` in `q`.
pub fn valuation(q: &Rat, p: Prime) -> Valuation {
    if q.is_zero() {
        return Valuation::Infinity;
    }
    let (up, _) = split_prime_power(q.numer(), p);
    let (down, _) = split_prime_power(q.denom(), p);
    Valuation::Finite(up as i64 - down as i64)
}

/// Canonical representative of `q + ℤ` in `[0, 1)`.
pub fn mod_one(q: &Rat) -> Rat {
    let n = q.numer();
    let d = q.denom();
    Rat::new(n.mod_floor(d), d.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(valuation(&Rat::from(12), p(2)), Valuation::Finite(2));
        assert_eq!(valuation(&Rat::new(3, 8), p(2)), Valuation::Finite(-3));
        for q in [2, 3, 5, 7, 101] {
            assert_eq!(valuation(&Rat::one(), p(q)), Valuation::Finite(0));
        }
        assert_eq!(valuation(&Rat::zero(), p(3)), Valuation::Infinity);
        assert_eq!(valuation(&Rat::new(-50, 3), p(5)), Valuation::Finite(2));
    }

    #[test]
    fn mod_one_examples() {
        assert_eq!(mod_one(&Rat::new(7, 4)), Rat::new(3, 4));
        assert_eq!(mod_one(&Rat::new(-1, 3)), Rat::new(2, 3));
        assert_eq!(mod_one(&Rat::from(5)), Rat::zero());
        assert_eq!(mod_one(&Rat::from(-5)), Rat::zero());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("3/4".parse::<Rat>().unwrap(), Rat::new(3, 4));
        assert_eq!("-6/8".parse::<Rat>().unwrap(), Rat::new(-3, 4));
        assert_eq!("5".parse::<Rat>().unwrap(), Rat::from(5));
        assert_eq!(Rat::new(6, -4).to_string(), "-3/2");
        assert!("1/0".parse::<Rat>().is_err());
        assert!("x".parse::<Rat>().is_err());
    }
}
