//! Exact-arithmetic toolkit for the topology of compact complex surfaces
//! and the 4-manifolds built from them.
//!
//! The crate computes characteristic numbers for hypersurfaces, complete
//! intersections, branched double covers, and Kodaira fibrations; applies
//! blow-ups and connected sums; decides Einstein-metric obstructions and
//! Freedman homeomorphism coincidences; and reproduces the first-order
//! deformation analysis that pins the mixed scalar/Weyl estimate at the
//! weight δ = 1/3. Every number is an exact integer or rational; there is
//! no floating point anywhere.

pub mod constructors;
pub mod error;
pub mod exact;
pub mod homeo;
pub mod invariants;
pub mod obstructions;
pub mod sharpness;

pub use error::{Error, Result};
