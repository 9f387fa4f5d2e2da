//! Exact computations with localization genus sets.
//!
//! - [`arith`]: rationals, primes, valuations and p-adic approximations.
//! - [`rankone`]: height sequences, types and rank-one torsion-free groups.
//! - [`connecting`]: connecting homomorphisms `ℚ → ℚ/ℤ` and their kernels.
//! - [`genus`]: the rational and Postnikov genus of odd spheres, fake `ℂP^n`,
//!   and genus triviality verdicts for finite complexes.
//! - [`text`]: the `{default:…, p:…}` text format.
//! - [`cli`]: the `locgenus` command line.

pub mod arith;
pub mod cli;
pub mod connecting;
pub mod error;
pub mod genus;
pub mod rankone;
pub mod text;

pub use error::{Error, ErrorKind, Result};
