//! Exact arithmetic: rationals, primes, valuations and p-adic approximations.

mod padic;
mod primes;
mod rational;

pub use padic::{padic_decompose, Decomposition, PAdicApprox, DEFAULT_PRECISION};
pub use primes::{is_prime, primes_up_to, Factorizer, Prime, DEFAULT_PRIME_BOUND};
pub use rational::{mod_one, valuation, Rat, Valuation};

pub(crate) use rational::split_prime_power;
