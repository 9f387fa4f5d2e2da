//! Genus triviality for finite complexes.
//!
//! A closed catalogue of the finite complexes that come up as examples; new
//! entries need their metadata filled in [`FiniteComplex::metadata`].

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FiniteComplex {
    Sphere(u32),
    ComplexProjective(u32),
    /// `S^2 × S^5`
    S2TimesS5,
    /// `ℂP^2 × S^3`
    Cp2TimesS3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComplexMetadata {
    pub simply_connected: bool,
    pub pi2_finite: bool,
    /// Least `N` with `π_{>N}(X) ⊗ ℚ = 0`.
    pub rational_top: u32,
}

impl FiniteComplex {
    pub fn metadata(self) -> ComplexMetadata {
        match self {
            FiniteComplex::Sphere(n) => ComplexMetadata {
                simply_connected: n >= 2,
                pi2_finite: n != 2,
                rational_top: if n % 2 == 1 { n } else { 2 * n - 1 },
            },
            FiniteComplex::ComplexProjective(n) => ComplexMetadata {
                simply_connected: true,
                pi2_finite: false,
                rational_top: 2 * n + 1,
            },
            FiniteComplex::S2TimesS5 | FiniteComplex::Cp2TimesS3 => ComplexMetadata {
                simply_connected: true,
                pi2_finite: false,
                rational_top: 5,
            },
        }
    }
}

impl fmt::Display for FiniteComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiniteComplex::Sphere(n) => write!(f, "S^{n}"),
            FiniteComplex::ComplexProjective(n) => write!(f, "CP^{n}"),
            FiniteComplex::S2TimesS5 => f.write_str("S^2xS^5"),
            FiniteComplex::Cp2TimesS3 => f.write_str("CP^2xS^3"),
        }
    }
}

impl FromStr for FiniteComplex {
    type Err = Error;

    /// Tags: `S^n`, `CP^n`, `S^2xS^5`, `CP^2xS^3`; the carets are optional.
    fn from_str(s: &str) -> Result<Self, Error> {
        let unknown = || Error::UnknownComplex(s.to_string());
        let compact: String = s.chars().filter(|&c| c != '^' && !c.is_whitespace()).collect();
        let compact = compact.to_ascii_uppercase();
        match compact.as_str() {
            "S2XS5" => return Ok(FiniteComplex::S2TimesS5),
            "CP2XS3" => return Ok(FiniteComplex::Cp2TimesS3),
            _ => {}
        }
        let dim = |digits: &str, min: u32| {
            digits
                .parse::<u32>()
                .ok()
                .filter(|&n| n >= min && digits.bytes().all(|b| b.is_ascii_digit()))
                .ok_or_else(unknown)
        };
        if let Some(d) = compact.strip_prefix("CP") {
            Ok(FiniteComplex::ComplexProjective(dim(d, 1)?))
        } else if let Some(d) = compact.strip_prefix('S') {
            Ok(FiniteComplex::Sphere(dim(d, 1)?))
        } else {
            Err(unknown())
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenusFunctor {
    /// Localization with respect to `⋁ Bℤ/p → *` and mod p homology equivalences.
    Neisendorfer,
    /// The N-th Postnikov section.
    PostnikovSection(u32),
}

impl fmt::Display for GenusFunctor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenusFunctor::Neisendorfer => f.write_str("neisendorfer"),
            GenusFunctor::PostnikovSection(n) => write!(f, "postnikov:{n}"),
        }
    }
}

impl FromStr for GenusFunctor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("neisendorfer") {
            return Ok(GenusFunctor::Neisendorfer);
        }
        if let Some(n) = s.strip_prefix("postnikov:") {
            if let Ok(n) = n.parse() {
                return Ok(GenusFunctor::PostnikovSection(n));
            }
        }
        Err(Error::parse(0, format!("unknown functor {s:?}; expected neisendorfer or postnikov:N")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// `Ḡ_L(X) = G_L(X) = {X}`.
    Singleton(FiniteComplex),
    /// `X` is the only finite complex in `G_L(X)`.
    SingletonAmongFinite(FiniteComplex),
    /// Another finite complex shares the genus.
    NotSingleton {
        space: FiniteComplex,
        witness: FiniteComplex,
    },
    HypothesesNotMet {
        space: FiniteComplex,
        reason: String,
    },
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Singleton(x) => write!(f, "singleton {{{x}}}"),
            Verdict::SingletonAmongFinite(x) => {
                write!(f, "singleton among finite complexes {{{x}}}")
            }
            Verdict::NotSingleton { space, witness } => {
                write!(f, "not singleton: {witness} also belongs to the genus of {space}")
            }
            Verdict::HypothesesNotMet { space, reason } => {
                write!(f, "hypotheses not met for {space}: {reason}")
            }
        }
    }
}

pub fn finite_complex_genus_verdict(x: FiniteComplex, functor: GenusFunctor) -> Verdict {
    let meta = x.metadata();
    let not_met = |reason: &str| Verdict::HypothesesNotMet {
        space: x,
        reason: reason.to_string(),
    };
    if !meta.simply_connected {
        return not_met("not simply connected");
    }
    match functor {
        GenusFunctor::Neisendorfer => {
            if meta.pi2_finite {
                Verdict::Singleton(x)
            } else {
                not_met("pi_2 is not finite")
            }
        }
        GenusFunctor::PostnikovSection(n) => {
            if x == FiniteComplex::S2TimesS5 && n == 2 {
                return Verdict::NotSingleton {
                    space: x,
                    witness: FiniteComplex::Cp2TimesS3,
                };
            }
            if !meta.pi2_finite {
                not_met("pi_2 is not finite")
            } else if meta.rational_top > n {
                not_met(&format!(
                    "pi_{}(X) (x) Q is nonzero above degree {n}",
                    meta.rational_top
                ))
            } else {
                Verdict::SingletonAmongFinite(x)
            }
        }
    }
}
