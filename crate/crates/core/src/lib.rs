//! Exact combinatorics of scales, modes, orbit covers, and their nerves.
//!
//! The model in brief: a pitch-class set in `Z_N` has a canonical normal
//! order, which makes it a torsor over `Z_n` (a [`Scale`]); choosing a mode
//! index promotes it to a group (a [`Mode`]). Interval compositions realize
//! chords inside a scale, translates of a chord form an [`OrbitCover`], and
//! the nerve of that cover is a simplicial complex whose exact integer
//! homology and isomorphism class this crate computes. Units of `Z_n` act on
//! compositions by the u-transform; the induced affine orbits classify
//! primitive covers up to nerve isomorphism, and [`transport_cover`]
//! realizes that classification as an element-level map.
//!
//! Everything is exact, deterministic, and small: the intended scale of `n`
//! is a couple of dozen at most.

mod composition;
mod cover;
mod error;
mod homology;
mod mode;
mod nerve;
mod pcset;
mod scale;

pub use composition::{
    affine_orbits, enumerate_compositions, rotation_classes, unit_group, AffineOrbit,
    IntervalComposition, RotationClass, UnitWitness,
};
pub use cover::{
    orbit_cover, realize, transport_cover, verify_cover_morphism, Chord, CoverMorphism,
    CoverTransport, OrbitCover,
};
pub use error::{Error, Result};
pub use homology::{homology, HomologyProfile};
pub use mode::{Mode, ModeHom};
pub use nerve::{
    build_nerve, harmonic_regions, nerve_isomorphic, nerve_of_sets, simplex_label, HarmonicRegions,
    SimplicialComplex,
};
pub use pcset::PitchClassSet;
pub use scale::{Scale, ScaleHom};
