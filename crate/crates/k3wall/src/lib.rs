//! Exact wall-and-chamber computations for tilt stability on Picard-rank-1
//! polarized K3 surfaces.
//!
//! The crate computes, in pure rational arithmetic: the Mukai pairing and
//! spherical-class enumeration, central charges and tilt slopes on the
//! (α,β)-plane, numerical walls with their endpoints and holes, monomial
//! staircase colength bounds for base-locus exclusion, and the
//! degree-of-irrationality bookkeeping that those feed. A scenario registry
//! replays the genus 7–14 case studies as golden dossiers with JSON reports
//! and SVG wall diagrams.
//!
//! The `parallel` feature (on by default) runs the staircase subideal search
//! and the scenario fan-out on rayon; without it everything falls back to
//! single-threaded iteration with identical results.

pub mod error;
pub mod exact;
pub mod ideals;
pub mod irrationality;
pub mod mukai;
pub mod plot;
pub mod report;
pub mod scenario;
pub mod tilt;
pub mod walls;

pub use error::{Error, Result};
pub use exact::{Int, Rat};
pub use mukai::{MukaiVector, PolarizedK3};
pub use tilt::StabPoint;
pub use walls::NumericalWall;
