//! The extended Postnikov genus of an odd sphere: spaces `Y` with
//! `Y[n] ≃ K(ℤ, n)` and `Y⟨n⟩ ≃ S^n⟨n⟩`, classified by `∏_p ℕ₊`.
//!
//! At a single prime the classifying maps `K(ℤ,n) → Baut(S^n⟨n⟩_p^∧)` form
//! `ℤ_p^∧ / (ℤ_p^∧)^×`, which the valuation identifies with ℕ₊. The entry
//! `k` names the pull-back `Y_{p,k}` of `S^n_p → K(ℤ,n)` along the degree
//! `p^k` map, and `*` names the product `S^n⟨n⟩_p^∧ × K(ℤ,n)`.
//!
//! Spaces are symbolic. A [`FakeSphereModel`] carries its classifying data
//! and answers one cohomological question per prime: does the detecting
//! operation (the cup square at 2, `𝒫¹` followed by the integral Bockstein
//! at odd primes) vanish on `m·ι`? In `Y_{p,k}` it vanishes iff `p^k | m`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::rational::check_odd_dimension;
use crate::arith::{primes_up_to, Decomposition, PAdicApprox, Prime};
use crate::error::{Error, Result};

pub const DEFAULT_FINGERPRINT_CAP: u32 = 64;
pub const ENUMERATION_LIMIT: u64 = 1_000_000;

/// A natural number or the disjoint base point `*`.
///
/// `*` sorts after every number: it is the limit of the tower
/// `… → Y_{p,k+1} → Y_{p,k} → …`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NPlus {
    Nat(u32),
    Star,
}

impl fmt::Display for NPlus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NPlus::Nat(k) => write!(f, "{k}"),
            NPlus::Star => f.write_str("*"),
        }
    }
}

/// An eventually constant element of `∏_p ℕ₊`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NPlusSequence {
    default: NPlus,
    exceptions: BTreeMap<Prime, NPlus>,
}

impl NPlusSequence {
    pub fn new(default: NPlus, exceptions: impl IntoIterator<Item = (Prime, NPlus)>) -> Self {
        NPlusSequence {
            default,
            exceptions: exceptions
                .into_iter()
                .filter(|&(_, v)| v != default)
                .collect(),
        }
    }

    pub fn constant(default: NPlus) -> Self {
        Self::new(default, [])
    }

    pub fn default_value(&self) -> NPlus {
        self.default
    }

    pub fn exceptions(&self) -> &BTreeMap<Prime, NPlus> {
        &self.exceptions
    }

    pub fn get(&self, p: Prime) -> NPlus {
        self.exceptions.get(&p).copied().unwrap_or(self.default)
    }

    /// Smallest prime carrying the default value.
    pub fn default_witness(&self) -> Prime {
        let mut p = Prime::TWO;
        while self.exceptions.contains_key(&p) {
            p = p.next();
        }
        p
    }

    fn try_map(&self, f: impl Fn(NPlus) -> Result<NPlus>) -> Result<Self> {
        let default = f(self.default)?;
        let exceptions = self
            .exceptions
            .iter()
            .map(|(&p, &v)| Ok((p, f(v)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(default, exceptions))
    }
}

/// An element `K = (k_p)` of the extended Postnikov genus of `S^n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PostnikovGenusDescriptor {
    dimension: u32,
    entries: NPlusSequence,
}

impl PostnikovGenusDescriptor {
    pub fn new(dimension: u32, entries: NPlusSequence) -> Result<Self> {
        check_odd_dimension(dimension)?;
        Ok(PostnikovGenusDescriptor { dimension, entries })
    }

    /// The all-zero sequence, which is `S^n` itself.
    pub fn standard(dimension: u32) -> Result<Self> {
        Self::new(dimension, NPlusSequence::constant(NPlus::Nat(0)))
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn entries(&self) -> &NPlusSequence {
        &self.entries
    }

    pub fn get(&self, p: Prime) -> NPlus {
        self.entries.get(p)
    }
}

/// Which p-completed pieces of `S^n⟨n⟩` the n-connected cover contains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoverSupport {
    /// `S^n⟨n⟩ ≃ ∏_p S^n⟨n⟩_p^∧`.
    AllPrimes,
    /// Only `S^n⟨n⟩_p^∧`: the partially completed fakes `Y_{p,k}`.
    SinglePrime(Prime),
}

/// The integral cohomology operation that detects `k` at a prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DetectingOperation {
    /// `x ↦ x²` (p = 2).
    CupSquare,
    /// `𝒫¹β` on the mod p reduction (p odd).
    ReducedPowerBockstein,
}

impl DetectingOperation {
    pub fn at(p: Prime) -> Self {
        if p.get() == 2 {
            DetectingOperation::CupSquare
        } else {
            DetectingOperation::ReducedPowerBockstein
        }
    }
}

/// Value of the detecting operation on `m·ι`, in the group where it lives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ObstructionValue {
    /// Class in a cyclic group of order `modulus`.
    Cyclic { modulus: BigUint, residue: BigUint },
    /// Class in an infinite cyclic group (the `*` entry).
    Free(BigInt),
}

impl ObstructionValue {
    pub fn is_zero(&self) -> bool {
        match self {
            ObstructionValue::Cyclic { residue, .. } => residue.is_zero(),
            ObstructionValue::Free(v) => v.is_zero(),
        }
    }
}

/// The space `Y_K` (or a partially completed `Y_{p,k}`), symbolically.
///
/// Metadata, not computed homotopy: `π_n ≅ ℤ`, `Y[n] ≃ K(ℤ, n)`, and the
/// n-connected cover given by [`CoverSupport`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FakeSphereModel {
    descriptor: PostnikovGenusDescriptor,
    cover: CoverSupport,
}

impl FakeSphereModel {
    pub fn descriptor(&self) -> &PostnikovGenusDescriptor {
        &self.descriptor
    }

    pub fn dimension(&self) -> u32 {
        self.descriptor.dimension
    }

    pub fn cover(&self) -> CoverSupport {
        self.cover
    }

    /// The detecting operation at `p` applied to `m·ι`, where `ι` generates
    /// `H^n(Y; ℤ)`.
    pub fn operation_on_multiple(&self, p: Prime, m: &BigInt) -> ObstructionValue {
        match self.descriptor.get(p) {
            NPlus::Nat(k) => {
                let modulus = p.pow(k);
                let residue = m
                    .mod_floor(&BigInt::from(modulus.clone()))
                    .to_biguint()
                    .expect("mod_floor is non-negative");
                ObstructionValue::Cyclic { modulus, residue }
            }
            NPlus::Star => ObstructionValue::Free(m.clone()),
        }
    }

    pub fn operation_vanishes(&self, p: Prime, m: &BigInt) -> bool {
        self.operation_on_multiple(p, m).is_zero()
    }

    /// The partially completed space `Y_{p,k_p}` seen by the prime `p`.
    pub fn restrict(&self, p: Prime) -> Result<FakeSphereModel> {
        build_fake_sphere(self.dimension(), p, self.descriptor.get(p))
    }

    /// A human-readable name for the catalogued cases.
    pub fn name(&self) -> String {
        let n = self.dimension();
        match self.cover {
            CoverSupport::SinglePrime(p) => match self.descriptor.get(p) {
                NPlus::Nat(0) => format!("S^{n}_{p}"),
                NPlus::Star => format!("S^{n}<{n}>^_{p} x K(Z,{n})"),
                NPlus::Nat(k) => format!("Y_{{{p},{k}}}"),
            },
            CoverSupport::AllPrimes => {
                let e = self.descriptor.entries();
                if e.exceptions().is_empty() && e.default_value() == NPlus::Nat(0) {
                    format!("S^{n}")
                } else if e.exceptions().is_empty() && e.default_value() == NPlus::Star {
                    format!("K(Z,{n}) x S^{n}<{n}>")
                } else {
                    format!("Y_K, K = {}", crate::text::print_descriptor(&self.descriptor))
                }
            }
        }
    }
}

/// `Y_{p,k}`: the pull-back of `K(ℤ,n) --p^k--> K(ℤ,n) <-- S^n_p`, or
/// `S^n⟨n⟩_p^∧ × K(ℤ,n)` for `k = *`. Other primes carry `*`.
pub fn build_fake_sphere(n: u32, p: Prime, k: NPlus) -> Result<FakeSphereModel> {
    let descriptor = PostnikovGenusDescriptor::new(n, NPlusSequence::new(NPlus::Star, [(p, k)]))?;
    Ok(FakeSphereModel {
        descriptor,
        cover: CoverSupport::SinglePrime(p),
    })
}

/// `Y_K`: the pull-back of `∏_p Y_{p,k_p} → ∏_p K(ℤ,n) <-Δ- K(ℤ,n)`.
pub fn assemble_global(n: u32, k: &PostnikovGenusDescriptor) -> Result<FakeSphereModel> {
    check_odd_dimension(n)?;
    if k.dimension != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: k.dimension,
        });
    }
    Ok(FakeSphereModel {
        descriptor: k.clone(),
        cover: CoverSupport::AllPrimes,
    })
}

pub fn fingerprint(y: &FakeSphereModel, p: Prime) -> Result<NPlus> {
    fingerprint_with_cap(y, p, DEFAULT_FINGERPRINT_CAP)
}

/// Smallest `k ≤ cap` with the detecting operation vanishing on `p^k·ι`.
///
/// Bounded probing cannot tell `*` from a `k` above the cap; `*` is reported
/// only when the model itself is a product with `K(ℤ, n)` at `p`.
pub fn fingerprint_with_cap(y: &FakeSphereModel, p: Prime, cap: u32) -> Result<NPlus> {
    let pb = BigInt::from(p.get());
    let mut multiple = BigInt::from(1);
    for k in 0..=cap {
        if y.operation_vanishes(p, &multiple) {
            return Ok(NPlus::Nat(k));
        }
        multiple *= &pb;
    }
    if y.descriptor.get(p) == NPlus::Star {
        Ok(NPlus::Star)
    } else {
        Err(Error::FingerprintCap { prime: p.get(), cap })
    }
}

/// Recover the descriptor from fingerprints: one per exceptional prime plus
/// one at a prime carrying the default.
pub fn classify_postnikov_genus(y: &FakeSphereModel) -> Result<PostnikovGenusDescriptor> {
    let entries = y.descriptor.entries();
    let default = fingerprint(y, entries.default_witness())?;
    let exceptions = entries
        .exceptions()
        .keys()
        .map(|&p| Ok((p, fingerprint(y, p)?)))
        .collect::<Result<Vec<_>>>()?;
    PostnikovGenusDescriptor::new(y.dimension(), NPlusSequence::new(default, exceptions))
}

/// Component of `[K(ℤ,n), Baut(S^n⟨n⟩_p^∧)]/{±1}` classified by the p-adic
/// integer `z`: its valuation, or `*` for zero. Units are discarded, so `z`
/// and `-z` land in the same class.
pub fn classifying_map_class(n: u32, p: Prime, z: &PAdicApprox) -> Result<NPlus> {
    check_odd_dimension(n)?;
    if z.prime() != p {
        return Err(Error::PrimeMismatch {
            expected: p.get(),
            found: z.prime().get(),
        });
    }
    Ok(match z.decompose()? {
        Decomposition::Star => NPlus::Star,
        Decomposition::PowerTimesUnit { exponent, .. } => NPlus::Nat(exponent),
    })
}

/// Fake `ℂP^n` classified by degrees `m_p = p^{k_p}`; the descriptor of the
/// fake sphere over the fibre has entries `n·k_p`. A `*` exponent stands
/// for `m_p = 0`.
pub fn cp_fake_descriptor(n: u32, degree_exponents: &NPlusSequence) -> Result<PostnikovGenusDescriptor> {
    if n == 0 {
        return Err(Error::InvalidProjectiveDimension);
    }
    let entries = degree_exponents.try_map(|v| match v {
        NPlus::Star => Ok(NPlus::Star),
        NPlus::Nat(k) => k
            .checked_mul(n)
            .map(NPlus::Nat)
            .ok_or_else(|| Error::HeightOverflow(format!("{n}*{k}"))),
    })?;
    PostnikovGenusDescriptor::new(2 * n + 1, entries)
}

/// The fake complex projective space `P^n_m` with `m_p = p^{k_p}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FakeProjectiveSpace {
    n: u32,
    degree_exponents: NPlusSequence,
}

impl FakeProjectiveSpace {
    pub fn new(n: u32, degree_exponents: NPlusSequence) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidProjectiveDimension);
        }
        Ok(FakeProjectiveSpace {
            n,
            degree_exponents,
        })
    }

    /// `ℂP^n` itself: every degree is 1.
    pub fn standard(n: u32) -> Result<Self> {
        Self::new(n, NPlusSequence::constant(NPlus::Nat(0)))
    }

    /// Degree `m_p` of the self-map used at `p`.
    pub fn degree(&self, p: Prime) -> BigUint {
        match self.degree_exponents.get(p) {
            NPlus::Star => BigUint::zero(),
            NPlus::Nat(k) => p.pow(k),
        }
    }

    /// Pull-back of `P^n_m → C ← K(ℤ, 2n+1)`, computed from the degree
    /// `m_p^n` the self-map induces on the cover `S^{2n+1}`, read as a
    /// p-adic integer.
    pub fn pullback_over_fiber(&self) -> Result<FakeSphereModel> {
        let dim = 2 * self.n + 1;
        let class_at = |p: Prime| -> Result<NPlus> {
            let induced = BigInt::from(self.degree(p).pow(self.n));
            // enough digits to see the whole valuation
            let precision = induced
                .magnitude()
                .bits()
                .to_u32()
                .ok_or_else(|| Error::HeightOverflow(induced.to_string()))?
                + 1;
            let z = PAdicApprox::from_integer(p, precision, &induced)?;
            classifying_map_class(dim, p, &z)
        };
        let default = class_at(self.degree_exponents.default_witness())?;
        let exceptions = self
            .degree_exponents
            .exceptions()
            .keys()
            .map(|&p| Ok((p, class_at(p)?)))
            .collect::<Result<Vec<_>>>()?;
        let descriptor = PostnikovGenusDescriptor::new(dim, NPlusSequence::new(default, exceptions))?;
        assemble_global(dim, &descriptor)
    }
}

/// All descriptors supported on primes `<= prime_bound` with entries in
/// `{0, …, max_entry, *}` and 0 elsewhere, in sorted order. There are
/// `(max_entry + 2)^π(prime_bound)` of them.
pub fn enumerate_postnikov_genus(
    n: u32,
    prime_bound: u64,
    max_entry: u32,
) -> Result<Vec<PostnikovGenusDescriptor>> {
    check_odd_dimension(n)?;
    let primes: Vec<Prime> = primes_up_to(prime_bound)
        .into_iter()
        .map(Prime::new)
        .collect::<Result<_>>()?;
    let choices: Vec<NPlus> = (0..=max_entry)
        .map(NPlus::Nat)
        .chain([NPlus::Star])
        .collect();
    let count = BigUint::from(choices.len()).pow(primes.len() as u32);
    if count > BigUint::from(ENUMERATION_LIMIT) {
        return Err(Error::EnumerationTooLarge {
            count: count.to_string(),
            limit: ENUMERATION_LIMIT,
        });
    }
    let count = count.to_usize().expect("bounded by the limit");

    let mut out = Vec::with_capacity(count);
    let mut digits = vec![0usize; primes.len()];
    for _ in 0..count {
        let entries = NPlusSequence::new(
            NPlus::Nat(0),
            primes.iter().zip(&digits).map(|(&p, &d)| (p, choices[d])),
        );
        out.push(PostnikovGenusDescriptor::new(n, entries)?);
        // odometer, last prime fastest
        for d in digits.iter_mut().rev() {
            *d += 1;
            if *d < choices.len() {
                break;
            }
            *d = 0;
        }
    }
    out.sort_by_cached_key(|k| primes.iter().map(|&p| k.get(p)).collect::<Vec<_>>());
    Ok(out)
}
