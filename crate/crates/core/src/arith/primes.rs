use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Default largest prime trial division will look for.
pub const DEFAULT_PRIME_BOUND: u64 = 1_000_000;

/// A rational prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn to_biguint(self) -> BigUint {
        BigUint::from(self.0)
    }

    /// `p^e` as a big integer.
    pub fn pow(self, e: u32) -> BigUint {
        BigUint::from(self.0).pow(e)
    }

    /// Smallest prime strictly larger than `self`.
    pub fn next(self) -> Prime {
        let mut n = self.0 + 1;
        while !is_prime(n) {
            n += 1;
        }
        Prime(n)
    }

    pub const TWO: Prime = Prime(2);
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin for the full `u64` range.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// All primes `<= bound` in ascending order (sieve of Eratosthenes).
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i.saturating_mul(i);
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    out
}

/// Trial-division factorizer that refuses prime factors above its bound.
#[derive(Debug, Clone)]
pub struct Factorizer {
    bound: u64,
    primes: Arc<[u64]>,
}

impl Default for Factorizer {
    fn default() -> Self {
        static DEFAULT: OnceLock<Factorizer> = OnceLock::new();
        DEFAULT
            .get_or_init(|| Factorizer::with_bound(DEFAULT_PRIME_BOUND))
            .clone()
    }
}

impl Factorizer {
    pub fn with_bound(bound: u64) -> Self {
        Factorizer {
            bound,
            primes: primes_up_to(bound).into(),
        }
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    /// Prime factorization of `n` as ascending `(p, e)` pairs; `n = 0` and
    /// `n = 1` both give the empty list.
    pub fn factor(&self, n: &BigUint) -> Result<Vec<(Prime, u32)>> {
        let mut rest = n.clone();
        let mut out = Vec::new();
        if rest.is_zero() {
            return Ok(out);
        }
        for &p in self.primes.iter() {
            if rest.is_one() {
                return Ok(out);
            }
            let pb = BigUint::from(p);
            if &pb * &pb > rest {
                // what remains is prime
                return match rest.to_u64() {
                    Some(q) if q <= self.bound => {
                        out.push((Prime(q), 1));
                        Ok(out)
                    }
                    _ => Err(Error::FactorBoundExceeded { bound: self.bound }),
                };
            }
            let mut e = 0;
            loop {
                let (q, r) = rest.div_rem(&pb);
                if !r.is_zero() {
                    break;
                }
                rest = q;
                e += 1;
            }
            if e > 0 {
                out.push((Prime(p), e));
            }
        }
        if rest.is_one() {
            Ok(out)
        } else {
            Err(Error::FactorBoundExceeded { bound: self.bound })
        }
    }
}
