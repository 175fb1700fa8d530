//! Combinatorics of effective `T^2`-actions on closed simply connected
//! 4-manifolds, described by their weighted orbit spaces.
//!
//! - [`lattice`]: primitive weights and `GL(2, Z)` arithmetic.
//! - [`orbit_space`]: legality, determinants, the Ric₂ obstruction, canonical forms.
//! - [`classifier`]: table lookup for `t <= 4` and connected-sum splitting above.
//! - [`enumerator`]: exhaustive enumeration up to symmetry and the classification survey.
//! - [`rigidity`]: symmetry-rank, connectedness, periodicity and Euler
//!   characteristic calculators.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;

pub mod classifier;
pub mod enumerator;
pub mod lattice;
pub mod orbit_space;
pub mod rigidity;

pub use classifier::{
    chi_of_class, classify_small, decompose, decompose_raw, decompose_raw_with, decompose_with, find_splits, split, Atom, ClassifyError,
    ManifoldClass, ParseSplitError, SplitChoice, SplitVariant,
};
pub use enumerator::{enumerate_canonical, survey, EnumBounds, SurveyReport};
pub use lattice::{apply_transform, det2, pair_basis_transform, LatticeError, LatticeTransform, WeightVector};
pub use orbit_space::{AdmissibilityReport, OrbitSpaceError, Symmetry, WeightedOrbitSpace};
