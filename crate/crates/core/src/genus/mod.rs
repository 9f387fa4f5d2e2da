//! Genus sets of odd spheres and complex projective spaces.
//!
//! - [`rational`]: the extended rationalization genus of `S^n`, `n` odd,
//!   classified by types of rank-one torsion-free groups through the
//!   connecting homomorphism `ℚ → ℚ/ℤ`.
//! - [`postnikov`]: the extended n-th Postnikov genus of `S^n`, classified
//!   by `∏_p ℕ₊`, with symbolic fake spheres and their cohomological
//!   fingerprints, and the fake `ℂP^n` built from degree sequences.
//! - [`complexes`]: triviality rules for finite complexes.
//!
//! Higher Postnikov sections are not modelled: for a large enough prime
//! `Y[m] ≃ S^n_p[m]` still holds, so the fakes above already show the
//! genus stays uncountable, but no descriptor is computed for them.

pub mod complexes;
pub mod postnikov;
pub mod rational;

pub use complexes::{finite_complex_genus_verdict, ComplexMetadata, FiniteComplex, GenusFunctor, Verdict};
pub use postnikov::{
    assemble_global, build_fake_sphere, classify_postnikov_genus, classifying_map_class,
    cp_fake_descriptor, enumerate_postnikov_genus, fingerprint, fingerprint_with_cap,
    CoverSupport, DetectingOperation, FakeProjectiveSpace, FakeSphereModel, NPlus, NPlusSequence,
    ObstructionValue, PostnikovGenusDescriptor, DEFAULT_FINGERPRINT_CAP, ENUMERATION_LIMIT,
};
pub use rational::{
    classify_rational_genus, homotopy_groups, is_n_minus_1_connected, HomotopyGroups,
    RationalGenusElement, TorsionShape,
};
