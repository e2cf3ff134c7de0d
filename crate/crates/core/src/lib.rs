//! The lattice `L_n` of arithmetic progressions contained in `{1, …, n}`,
//! ordered by inclusion.
//!
//! [`lattice::Lattice`] builds the Hasse diagram and [`moebius`] computes
//! the Möbius function four independent ways. The topology lives in
//! [`complexes`] and [`homology`]; [`structure`] holds the exhaustive
//! structural checks.

pub mod complexes;
pub mod error;
pub mod homology;
pub mod lattice;
pub mod moebius;
pub mod numtheory;
pub mod progression;
pub mod structure;

pub use error::{Error, Result};
pub use lattice::Lattice;
pub use moebius::MoebiusMethod;
pub use progression::Progression;
