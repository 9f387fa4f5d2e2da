#![allow(dead_code)]

use locgenus::arith::{primes_up_to, Prime, Rat};
use locgenus::genus::{NPlus, NPlusSequence};
use locgenus::rankone::{Height, HeightSequence, RankOneGroup};
use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn p(n: u64) -> Prime {
    Prime::new(n).unwrap()
}

pub fn primes_to(bound: u64) -> Vec<Prime> {
    primes_up_to(bound).into_iter().map(p).collect()
}

pub fn small_prime(rng: &mut impl Rng) -> Prime {
    *primes_to(30).choose(rng).unwrap()
}

pub fn height(rng: &mut impl Rng) -> Height {
    if rng.gen_bool(0.2) {
        Height::Infinity
    } else {
        Height::Finite(rng.gen_range(0..6))
    }
}

pub fn heights(rng: &mut impl Rng) -> HeightSequence {
    let default = if rng.gen_bool(0.15) {
        Height::Infinity
    } else if rng.gen_bool(0.7) {
        Height::ZERO
    } else {
        Height::Finite(rng.gen_range(1..4))
    };
    let n = rng.gen_range(0..5);
    let ex: Vec<_> = (0..n).map(|_| (small_prime(rng), height(rng))).collect();
    HeightSequence::new(default, ex)
}

pub fn group(rng: &mut impl Rng) -> RankOneGroup {
    RankOneGroup::new(heights(rng))
}

/// A sequence at most a small perturbation away from `s`: sometimes similar,
/// sometimes a near miss (default shifted by one, an ∞ moved).
pub fn perturb(rng: &mut impl Rng, s: &HeightSequence) -> HeightSequence {
    let mut ex: Vec<(Prime, Height)> = s.exceptions().iter().map(|(&p, &h)| (p, h)).collect();
    let mut default = s.default_height();
    match rng.gen_range(0..6) {
        0 => {
            // change a finite entry by a finite amount
            let q = small_prime(rng);
            if !s.get(q).is_infinite() {
                ex.retain(|&(r, _)| r != q);
                ex.push((q, Height::Finite(rng.gen_range(0..9))));
            }
        }
        1 => {
            default = match default {
                Height::Finite(k) => Height::Finite(k + 1),
                Height::Infinity => Height::Finite(0),
            };
        }
        2 => {
            let q = small_prime(rng);
            ex.retain(|&(r, _)| r != q);
            let flipped = if s.get(q).is_infinite() {
                Height::Finite(1)
            } else {
                Height::Infinity
            };
            ex.push((q, flipped));
        }
        _ => {}
    }
    ex.sort();
    HeightSequence::new(default, ex)
}

/// A nonzero rational whose denominator only has primes below 30.
pub fn rational(rng: &mut impl Rng) -> Rat {
    let mut num: i64 = rng.gen_range(-300..=300);
    if num == 0 {
        num = 1;
    }
    let mut den = BigInt::from(1);
    for _ in 0..rng.gen_range(0..4) {
        let q = small_prime(rng);
        den *= BigInt::from(q.get()).pow(rng.gen_range(1..5));
    }
    Rat::new(num, den)
}

pub fn nplus(rng: &mut impl Rng) -> NPlus {
    if rng.gen_bool(0.2) {
        NPlus::Star
    } else {
        NPlus::Nat(rng.gen_range(0..12))
    }
}

pub fn nplus_sequence(rng: &mut impl Rng) -> NPlusSequence {
    let default = if rng.gen_bool(0.7) { NPlus::Nat(0) } else { nplus(rng) };
    let n = rng.gen_range(0..6);
    let ex: Vec<_> = (0..n).map(|_| (small_prime(rng), nplus(rng))).collect();
    NPlusSequence::new(default, ex)
}
