//! Rank-one torsion-free abelian groups as subgroups of ℚ containing ℤ.
//!
//! A group `A` is recorded by its height sequence `k_p(A) = max{r : 1 ∈ p^r A}`.
//! Only eventually constant sequences are representable: a default height plus
//! finitely many exceptional primes. Every named example (ℤ, ℤ[1/p], ℚ, the
//! common groups of pseudo-integers) lives in this fragment.

use std::cmp::{max, min};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::arith::{Factorizer, Prime, Rat};
use crate::error::Result;

/// A single entry of a height sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Height {
    Finite(u32),
    Infinity,
}

impl Height {
    pub const ZERO: Height = Height::Finite(0);

    pub fn is_infinite(self) -> bool {
        matches!(self, Height::Infinity)
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Height::Finite(k) => Some(k),
            Height::Infinity => None,
        }
    }
}

impl fmt::Display for Height {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Height::Finite(k) => write!(f, "{k}"),
            Height::Infinity => f.write_str("inf"),
        }
    }
}

/// An eventually constant sequence `(k_p)` indexed by all primes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HeightSequence {
    default: Height,
    exceptions: BTreeMap<Prime, Height>,
}

impl HeightSequence {
    /// Exceptions equal to the default are dropped.
    pub fn new(default: Height, exceptions: impl IntoIterator<Item = (Prime, Height)>) -> Self {
        let exceptions = exceptions
            .into_iter()
            .filter(|&(_, h)| h != default)
            .collect();
        HeightSequence {
            default,
            exceptions,
        }
    }

    pub fn constant(default: Height) -> Self {
        HeightSequence {
            default,
            exceptions: BTreeMap::new(),
        }
    }

    /// Heights of ℤ.
    pub fn integers() -> Self {
        Self::constant(Height::ZERO)
    }

    /// Heights of ℚ.
    pub fn rationals() -> Self {
        Self::constant(Height::Infinity)
    }

    pub fn default_height(&self) -> Height {
        self.default
    }

    pub fn exceptions(&self) -> &BTreeMap<Prime, Height> {
        &self.exceptions
    }

    pub fn get(&self, p: Prime) -> Height {
        self.exceptions.get(&p).copied().unwrap_or(self.default)
    }

    /// Primes where the sequence is infinite, when there are finitely many.
    pub fn infinite_primes(&self) -> Option<BTreeSet<Prime>> {
        match self.default {
            Height::Infinity => None,
            Height::Finite(_) => Some(
                self.exceptions
                    .iter()
                    .filter(|(_, h)| h.is_infinite())
                    .map(|(&p, _)| p)
                    .collect(),
            ),
        }
    }

    /// Pointwise combination of two sequences.
    fn zip_with(&self, other: &Self, f: impl Fn(Height, Height) -> Height) -> Self {
        let keys: BTreeSet<Prime> = self
            .exceptions
            .keys()
            .chain(other.exceptions.keys())
            .copied()
            .collect();
        HeightSequence::new(
            f(self.default, other.default),
            keys.into_iter().map(|p| (p, f(self.get(p), other.get(p)))),
        )
    }
}

/// Two sequences are similar when they have ∞ in the same places and the
/// finite entries differ by a finite total amount.
pub fn similar(s: &HeightSequence, t: &HeightSequence) -> bool {
    if s.default != t.default {
        // either the defaults are finite and differ at infinitely many primes,
        // or ∞ sits at infinitely many primes in one and not the other
        return false;
    }
    s.exceptions
        .keys()
        .chain(t.exceptions.keys())
        .all(|&p| s.get(p).is_infinite() == t.get(p).is_infinite())
}

/// A type: the similarity class of a height sequence, in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TypeClass {
    /// Finite default height, infinite at finitely many primes.
    FiniteDefault {
        default: u32,
        infinite_primes: BTreeSet<Prime>,
    },
    /// Infinite default height, finite at finitely many primes.
    InfiniteDefault { finite_primes: BTreeSet<Prime> },
}

impl TypeClass {
    pub fn default_height(&self) -> Height {
        match self {
            TypeClass::FiniteDefault { default, .. } => Height::Finite(*default),
            TypeClass::InfiniteDefault { .. } => Height::Infinity,
        }
    }

    /// The type of ℤ, which is also the type of every group of pseudo-integers
    /// with eventually vanishing heights.
    pub fn integers() -> Self {
        TypeClass::FiniteDefault {
            default: 0,
            infinite_primes: BTreeSet::new(),
        }
    }

    /// The type of ℚ.
    pub fn rationals() -> Self {
        TypeClass::InfiniteDefault {
            finite_primes: BTreeSet::new(),
        }
    }

    /// A canonical sequence of this type: ∞ off the finite locus and zero on it
    /// when the default is infinite.
    pub fn representative(&self) -> HeightSequence {
        match self {
            TypeClass::FiniteDefault {
                default,
                infinite_primes,
            } => HeightSequence::new(
                Height::Finite(*default),
                infinite_primes.iter().map(|&p| (p, Height::Infinity)),
            ),
            TypeClass::InfiniteDefault { finite_primes } => HeightSequence::new(
                Height::Infinity,
                finite_primes.iter().map(|&p| (p, Height::ZERO)),
            ),
        }
    }
}

pub fn type_of(s: &HeightSequence) -> TypeClass {
    match s.default {
        Height::Finite(default) => TypeClass::FiniteDefault {
            default,
            infinite_primes: s
                .exceptions
                .iter()
                .filter(|(_, h)| h.is_infinite())
                .map(|(&p, _)| p)
                .collect(),
        },
        Height::Infinity => TypeClass::InfiniteDefault {
            finite_primes: s.exceptions.keys().copied().collect(),
        },
    }
}

/// What a group becomes after tensoring with ℤ_(p).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Localization {
    IsoToZp,
    IsoToQ,
}

/// `A = { q ∈ ℚ : ν_p(q) ≥ -k_p for all p }`.
///
/// Equality compares the embedding in ℚ, not the abstract isomorphism class;
/// use [`type_of`] on the heights for the latter.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RankOneGroup {
    heights: HeightSequence,
}

impl RankOneGroup {
    pub fn new(heights: HeightSequence) -> Self {
        RankOneGroup { heights }
    }

    pub fn integers() -> Self {
        Self::new(HeightSequence::integers())
    }

    pub fn rationals() -> Self {
        Self::new(HeightSequence::rationals())
    }

    /// ℤ[1/p].
    pub fn localization_away_from(p: Prime) -> Self {
        Self::new(HeightSequence::new(Height::ZERO, [(p, Height::Infinity)]))
    }

    pub fn heights(&self) -> &HeightSequence {
        &self.heights
    }

    pub fn height(&self, p: Prime) -> Height {
        self.heights.get(p)
    }

    pub fn type_class(&self) -> TypeClass {
        type_of(&self.heights)
    }

    pub fn contains(&self, q: &Rat) -> Result<bool> {
        self.contains_with(q, &Factorizer::default())
    }

    /// Membership: only primes of the denominator can fail.
    pub fn contains_with(&self, q: &Rat, factorizer: &Factorizer) -> Result<bool> {
        let factors = factorizer.factor(&q.denom_unsigned())?;
        Ok(factors.into_iter().all(|(p, e)| match self.height(p) {
            Height::Infinity => true,
            Height::Finite(k) => e <= k,
        }))
    }

    /// Membership of `1/p^r`, which needs no factoring.
    pub fn contains_inverse_power(&self, p: Prime, r: u32) -> bool {
        match self.height(p) {
            Height::Infinity => true,
            Height::Finite(k) => r <= k,
        }
    }

    /// Contains ℤ but no ℤ[1/p].
    pub fn is_pseudo_integers(&self) -> bool {
        !self.heights.default.is_infinite()
            && self.heights.exceptions.values().all(|h| !h.is_infinite())
    }

    pub fn localize(&self, p: Prime) -> Localization {
        match self.height(p) {
            Height::Finite(_) => Localization::IsoToZp,
            Height::Infinity => Localization::IsoToQ,
        }
    }

    pub fn intersect(&self, other: &Self) -> Self {
        Self::new(self.heights.zip_with(&other.heights, min))
    }

    pub fn join(&self, other: &Self) -> Self {
        Self::new(self.heights.zip_with(&other.heights, max))
    }
}

/// `max{r : 1/p^r ∈ A}` found by probing membership up to `limit`; `None`
/// when every probe succeeds.
pub fn probe_height(a: &RankOneGroup, p: Prime, limit: u32) -> Option<u32> {
    (0..=limit).take_while(|&r| a.contains_inverse_power(p, r)).last().filter(|&r| r < limit)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    fn seq(default: Height, ex: &[(u64, Height)]) -> HeightSequence {
        HeightSequence::new(default, ex.iter().map(|&(q, h)| (p(q), h)))
    }

    use Height::{Finite as F, Infinity as Inf};

    #[test]
    fn similarity_examples() {
        let z = HeightSequence::integers();
        assert!(similar(&z, &seq(F(0), &[(2, F(3))])));
        assert!(!similar(&z, &seq(F(1), &[])));
        assert!(!similar(&seq(F(0), &[(2, Inf)]), &z));
        assert!(similar(&seq(Inf, &[(3, F(1))]), &seq(Inf, &[(3, F(9))])));
        assert!(!similar(&seq(Inf, &[(3, F(1))]), &HeightSequence::rationals()));
    }

    #[test]
    fn type_examples() {
        assert_eq!(
            type_of(&seq(F(0), &[(3, F(5)), (7, F(1))])),
            TypeClass::integers()
        );
        assert_eq!(
            type_of(&seq(F(0), &[(2, Inf)])),
            TypeClass::FiniteDefault {
                default: 0,
                infinite_primes: [p(2)].into()
            }
        );
        assert_eq!(
            type_of(&seq(Inf, &[(2, F(4))])),
            TypeClass::InfiniteDefault {
                finite_primes: [p(2)].into()
            }
        );
        // a finite default is part of the type
        assert_ne!(type_of(&seq(F(3), &[])), TypeClass::integers());
    }

    #[test]
    fn representative_has_the_type() {
        for t in [
            type_of(&seq(F(2), &[(5, Inf), (7, F(1))])),
            type_of(&seq(Inf, &[(2, F(4)), (3, F(0))])),
            TypeClass::rationals(),
        ] {
            assert_eq!(type_of(&t.representative()), t);
        }
    }

    #[test]
    fn membership_examples() {
        let a = RankOneGroup::new(seq(F(0), &[(2, F(3))]));
        assert!(a.contains(&Rat::new(1, 8)).unwrap());
        assert!(!a.contains(&Rat::new(1, 16)).unwrap());
        assert!(a.contains(&Rat::new(-5, 4)).unwrap());
        assert!(a.contains(&Rat::one()).unwrap());
        assert!(RankOneGroup::rationals().contains(&Rat::new(1, 9)).unwrap());
        assert!(!RankOneGroup::integers().contains(&Rat::new(1, 3)).unwrap());
    }

    #[test]
    fn membership_reports_factor_bound() {
        let a = RankOneGroup::integers();
        let f = Factorizer::with_bound(10);
        assert!(a.contains_with(&Rat::new(1, 13), &f).is_err());
        assert!(!a.contains_with(&Rat::new(1, 7), &f).unwrap());
    }

    #[test]
    fn heights_agree_with_probes() {
        let a = RankOneGroup::new(seq(F(0), &[(2, F(3)), (5, Inf)]));
        assert_eq!(a.height(p(2)), F(3));
        assert_eq!(probe_height(&a, p(2), 20), Some(3));
        assert_eq!(a.height(p(3)), F(0));
        assert_eq!(probe_height(&a, p(3), 20), Some(0));
        assert_eq!(a.height(p(5)), Inf);
        assert_eq!(probe_height(&a, p(5), 20), None);
    }

    #[test]
    fn pseudo_integers() {
        assert!(RankOneGroup::integers().is_pseudo_integers());
        assert!(!RankOneGroup::localization_away_from(p(2)).is_pseudo_integers());
        assert!(RankOneGroup::new(seq(F(0), &[(3, F(7)), (11, F(2))])).is_pseudo_integers());
        assert!(!RankOneGroup::new(seq(Inf, &[(3, F(0))])).is_pseudo_integers());
    }

    #[test]
    fn localization() {
        assert_eq!(RankOneGroup::integers().localize(p(2)), Localization::IsoToZp);
        assert_eq!(
            RankOneGroup::localization_away_from(p(3)).localize(p(3)),
            Localization::IsoToQ
        );
        assert_eq!(
            RankOneGroup::new(seq(F(0), &[(5, F(9))])).localize(p(5)),
            Localization::IsoToZp
        );
    }

    #[test]
    fn lattice_operations() {
        let a = RankOneGroup::new(seq(F(0), &[(2, F(3))]));
        let b = RankOneGroup::new(seq(F(0), &[(2, F(1))]));
        assert_eq!(a.intersect(&b), b);
        let c = RankOneGroup::new(seq(F(0), &[(3, Inf)]));
        assert_eq!(
            a.join(&c),
            RankOneGroup::new(seq(F(0), &[(2, F(3)), (3, Inf)]))
        );
        assert_eq!(a.intersect(&RankOneGroup::integers()), RankOneGroup::integers());
        assert_eq!(a.join(&RankOneGroup::rationals()), RankOneGroup::rationals());
    }

}
