use std::collections::BTreeSet;
use std::fmt;

use crate::arith::Prime;
use crate::connecting::ConnectingHom;
use crate::error::{Error, Result};
use crate::rankone::{Height, HeightSequence, TypeClass};

pub(crate) fn check_odd_dimension(n: u32) -> Result<()> {
    if n >= 3 && n % 2 == 1 {
        Ok(())
    } else {
        Err(Error::InvalidDimension(n))
    }
}

/// The space `Y(∂)` in the extended rationalization genus of `S^n`, sitting
/// in a fibration `M(ℚ/ℤ, n-1) → Y(∂) → K(ℚ, n)` with connecting map `∂`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalGenusElement {
    dimension: u32,
    hom: ConnectingHom,
}

impl RationalGenusElement {
    pub fn new(dimension: u32, hom: ConnectingHom) -> Result<Self> {
        check_odd_dimension(dimension)?;
        Ok(RationalGenusElement { dimension, hom })
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn hom(&self) -> &ConnectingHom {
        &self.hom
    }
}

/// The set of primes `S` in `π_{n-1} Y ≅ ⊕_{p∈S} ℤ_{p^∞}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TorsionShape {
    /// Exactly these primes.
    Finite(BTreeSet<Prime>),
    /// Every prime except these.
    Cofinite(BTreeSet<Prime>),
}

impl TorsionShape {
    /// Primes where the sequence is infinite.
    pub fn infinite_locus(heights: &HeightSequence) -> Self {
        let exceptional = |want_infinite: bool| {
            heights
                .exceptions()
                .iter()
                .filter(|(_, h)| h.is_infinite() == want_infinite)
                .map(|(&p, _)| p)
                .collect()
        };
        match heights.default_height() {
            Height::Finite(_) => TorsionShape::Finite(exceptional(true)),
            Height::Infinity => TorsionShape::Cofinite(exceptional(false)),
        }
    }

    pub fn contains(&self, p: Prime) -> bool {
        match self {
            TorsionShape::Finite(s) => s.contains(&p),
            TorsionShape::Cofinite(s) => !s.contains(&p),
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, TorsionShape::Finite(s) if s.is_empty())
    }
}

fn write_primes(f: &mut fmt::Formatter<'_>, primes: &BTreeSet<Prime>) -> fmt::Result {
    f.write_str("{")?;
    for (i, p) in primes.iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{p}")?;
    }
    f.write_str("}")
}

impl fmt::Display for TorsionShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TorsionShape::Finite(s) if s.is_empty() => f.write_str("none"),
            TorsionShape::Finite(s) => write_primes(f, s),
            TorsionShape::Cofinite(s) if s.is_empty() => f.write_str("all"),
            TorsionShape::Cofinite(s) => {
                f.write_str("all except ")?;
                write_primes(f, s)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomotopyGroups {
    pub pi_n: TypeClass,
    pub pi_n_minus_1: TorsionShape,
}

/// Read `π_n` and `π_{n-1}` off `0 → π_n Y → ℚ → ℚ/ℤ → π_{n-1} Y → 0`.
///
/// The image of `∂` in each Prüfer summand is divisible, hence 0 or
/// everything, so the cokernel is the full summand exactly where the kernel
/// height is infinite.
pub fn homotopy_groups(y: &RationalGenusElement) -> HomotopyGroups {
    HomotopyGroups {
        pi_n: y.hom.double_coset_class(),
        pi_n_minus_1: TorsionShape::infinite_locus(y.hom.kernel().heights()),
    }
}

/// `(n-1)`-connected iff `∂` is onto iff the kernel is a group of
/// pseudo-integers.
pub fn is_n_minus_1_connected(y: &RationalGenusElement) -> bool {
    y.hom.kernel().is_pseudo_integers()
}

/// Complete invariant on the extended genus: the type of `π_n`.
pub fn classify_rational_genus(y: &RationalGenusElement) -> TypeClass {
    y.hom.double_coset_class()
}
