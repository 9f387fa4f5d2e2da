//! Connecting homomorphisms `∂: ℚ → ℚ/ℤ` and their kernels.
//!
//! Every represented `∂` has the form
//!
//! ```text
//! ∂(q) = Σ_{p ∈ J} twist_p( p^{k_p} · (r·q)_p )   mod 1
//! ```
//!
//! where `k` is a height sequence, `J` the primes where `k_p` is finite,
//! `r` a nonzero rational acting by pre-composition, `(x)_p` the p-primary
//! part of `x` in its partial-fraction expansion, and `twist_p` multiplication
//! by a p-adic unit on the Prüfer group `ℤ_{p^∞}`. With `r = 1` and no twists
//! this is the standard quotient `ℚ → ℚ/A ≅ ⊕_{p∈J} ℤ_{p^∞} ↪ ℚ/ℤ`.
//!
//! Arbitrary elements of `Hom(ℚ, ℚ/ℤ)` carry infinite data and are not
//! representable; every double coset whose kernel type is representable has a
//! representative here, namely [`beta`] of any group of that type.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::One;

use crate::arith::{mod_one, split_prime_power, Factorizer, Prime, Rat};
use crate::error::{Error, Result};
use crate::rankone::{type_of, Height, HeightSequence, RankOneGroup, TypeClass};

/// An element of ℚ/ℤ, stored as its representative in `[0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QmodZ(Rat);

impl QmodZ {
    pub fn new(q: &Rat) -> Self {
        QmodZ(mod_one(q))
    }

    pub fn zero() -> Self {
        QmodZ(Rat::zero())
    }

    pub fn value(&self) -> &Rat {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Order in ℚ/ℤ; the denominator of the representative.
    pub fn order(&self) -> BigInt {
        self.0.denom().clone()
    }

    /// Component in `ℤ_{p^∞}`.
    pub fn primary_part(&self, p: Prime) -> QmodZ {
        QmodZ(primary_part(&self.0, p))
    }
}

impl Add for QmodZ {
    type Output = QmodZ;
    fn add(self, rhs: QmodZ) -> QmodZ {
        QmodZ::new(&(self.0 + rhs.0))
    }
}

impl<'a> Add<&'a QmodZ> for &'a QmodZ {
    type Output = QmodZ;
    fn add(self, rhs: &'a QmodZ) -> QmodZ {
        QmodZ::new(&(&self.0 + &rhs.0))
    }
}

impl fmt::Display for QmodZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let g = a.extended_gcd(m);
    debug_assert!(g.gcd.is_one());
    g.x.mod_floor(m)
}

/// p-primary part of `y` in `[0, 1)`: the unique `c/p^e` with
/// `y - c/p^e` free of `p` in the denominator.
pub(crate) fn primary_part(y: &Rat, p: Prime) -> Rat {
    let (e, cofactor) = split_prime_power(y.denom(), p);
    if e == 0 {
        return Rat::zero();
    }
    let modulus = BigInt::from(p.pow(e));
    let c = (y.numer() * mod_inverse(&cofactor, &modulus)).mod_floor(&modulus);
    Rat::new(c, modulus)
}

/// Post-composition by multiplication with a unit on one Prüfer summand.
///
/// The residue is read as an ordinary integer prime to `p`, hence a p-adic
/// unit; `exponent` records the modulus `p^exponent` it was chosen in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Twist {
    exponent: u32,
    residue: u64,
}

impl Twist {
    pub fn new(p: Prime, exponent: u32, residue: u64) -> Result<Self> {
        let invalid = Error::InvalidTwist {
            prime: p.get(),
            exponent,
            residue,
        };
        if exponent == 0 || residue % p.get() == 0 || BigUint::from(residue) >= p.pow(exponent) {
            return Err(invalid);
        }
        Ok(Twist { exponent, residue })
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectingHom {
    kernel_heights: HeightSequence,
    precompose: Rat,
    twists: BTreeMap<Prime, Twist>,
    kernel: RankOneGroup,
    kernel_scale: BigInt,
}

/// The standard homomorphism with kernel `A`.
pub fn beta(a: &RankOneGroup) -> ConnectingHom {
    ConnectingHom {
        kernel_heights: a.heights().clone(),
        precompose: Rat::one(),
        twists: BTreeMap::new(),
        kernel: a.clone(),
        kernel_scale: BigInt::one(),
    }
}

impl ConnectingHom {
    pub fn new(
        kernel_heights: HeightSequence,
        precompose: Rat,
        twists: BTreeMap<Prime, Twist>,
    ) -> Result<Self> {
        Self::new_with(kernel_heights, precompose, twists, &Factorizer::default())
    }

    /// Factors `precompose` once to fix the kernel.
    pub fn new_with(
        kernel_heights: HeightSequence,
        precompose: Rat,
        twists: BTreeMap<Prime, Twist>,
        factorizer: &Factorizer,
    ) -> Result<Self> {
        if precompose.is_zero() {
            return Err(Error::ZeroPrecompose);
        }
        // ν_p(r) at every prime dividing r
        let mut shifts: BTreeMap<Prime, i64> = BTreeMap::new();
        for (p, e) in factorizer.factor(precompose.numer().magnitude())? {
            shifts.insert(p, e as i64);
        }
        for (p, e) in factorizer.factor(precompose.denom().magnitude())? {
            shifts.insert(p, -(e as i64));
        }

        // q ∈ ker ⇔ ν_p(q) ≥ -(k_p + ν_p(r)) for every finite k_p
        let mut scale = BigUint::one();
        let mut adjusted = Vec::with_capacity(shifts.len());
        for (&p, &shift) in &shifts {
            let h = match kernel_heights.get(p) {
                Height::Infinity => Height::Infinity,
                Height::Finite(k) => {
                    let e = k as i64 + shift;
                    if e < 0 {
                        scale *= p.pow((-e) as u32);
                        Height::ZERO
                    } else {
                        Height::Finite(
                            u32::try_from(e).map_err(|_| Error::HeightOverflow(e.to_string()))?,
                        )
                    }
                }
            };
            adjusted.push((p, h));
        }
        let kernel = HeightSequence::new(
            kernel_heights.default_height(),
            kernel_heights
                .exceptions()
                .iter()
                .map(|(&p, &h)| (p, h))
                .filter(|(p, _)| !shifts.contains_key(p))
                .chain(adjusted),
        );

        Ok(ConnectingHom {
            kernel_heights,
            precompose,
            twists,
            kernel: RankOneGroup::new(kernel),
            kernel_scale: BigInt::from(scale),
        })
    }

    /// The zero homomorphism (kernel ℚ).
    pub fn zero() -> Self {
        beta(&RankOneGroup::rationals())
    }

    pub fn kernel_heights(&self) -> &HeightSequence {
        &self.kernel_heights
    }

    pub fn precompose(&self) -> &Rat {
        &self.precompose
    }

    pub fn twists(&self) -> &BTreeMap<Prime, Twist> {
        &self.twists
    }

    /// Same homomorphism pre-composed with multiplication by `r`.
    pub fn precomposed(&self, r: &Rat) -> Result<Self> {
        Self::new(
            self.kernel_heights.clone(),
            &self.precompose * r,
            self.twists.clone(),
        )
    }

    /// Same homomorphism followed by a twist on the `p`-primary summand.
    pub fn twisted(&self, p: Prime, twist: Twist) -> Self {
        let mut out = self.clone();
        out.twists.insert(p, twist);
        out
    }

    pub fn eval(&self, q: &Rat) -> Result<QmodZ> {
        self.eval_with(q, &Factorizer::default())
    }

    pub fn eval_with(&self, q: &Rat, factorizer: &Factorizer) -> Result<QmodZ> {
        let y = &self.precompose * q;
        if y.is_integer() {
            return Ok(QmodZ::zero());
        }
        let mut total = Rat::zero();
        for (p, e) in factorizer.factor(&y.denom_unsigned())? {
            let Height::Finite(k) = self.kernel_heights.get(p) else {
                continue;
            };
            if e <= k {
                continue;
            }
            // p^k · (c / p^e) = c / p^(e-k)
            let c = primary_part(&y, p).numer().clone();
            let modulus = BigInt::from(p.pow(e - k));
            let mut c = c.mod_floor(&modulus);
            if let Some(t) = self.twists.get(&p) {
                c = (c * BigInt::from(t.residue)).mod_floor(&modulus);
            }
            total = total + Rat::new(c, modulus);
        }
        Ok(QmodZ::new(&total))
    }

    /// The kernel as a subgroup of ℚ containing ℤ. The literal kernel is
    /// `kernel_scale() · kernel()`; the scale is 1 whenever the kernel
    /// contains ℤ, e.g. for every `beta(A)`.
    pub fn kernel(&self) -> &RankOneGroup {
        &self.kernel
    }

    pub fn kernel_scale(&self) -> &BigInt {
        &self.kernel_scale
    }

    /// Whether `q` lies in the literal kernel.
    pub fn kernel_contains(&self, q: &Rat) -> Result<bool> {
        let scaled = q * &Rat::new(1, self.kernel_scale.clone());
        self.kernel.contains(&scaled)
    }

    /// Class in `ℚ^× \ Hom(ℚ, ℚ/ℤ) / ℤ̂`, i.e. the type of the kernel.
    pub fn double_coset_class(&self) -> TypeClass {
        type_of(self.kernel.heights())
    }

    /// Whether `∂` hits all of `ℤ_{p^∞}`, checked on elements of order up to
    /// `p^depth`: the value at `1/p^(k_p + depth)` must have order `p^depth`.
    pub fn hits_prufer_summand(&self, p: Prime, depth: u32) -> Result<bool> {
        let Height::Finite(k) = self.kernel.height(p) else {
            return Ok(false);
        };
        let q = Rat::inverse_prime_power(p, k + depth) * Rat::from_integer(self.kernel_scale.clone());
        let v = self.eval(&q)?;
        let expected = BigInt::from(p.pow(depth));
        Ok(v.primary_part(p).order() == expected)
    }
}
