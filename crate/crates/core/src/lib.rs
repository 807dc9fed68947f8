//! Hilbert–Poincaré series of Milnor algebras of projective hypersurfaces
//! whose saturated Jacobian ideal is a complete intersection, and the
//! log-concavity machinery used to study their coefficient sequences.

pub mod checks;
pub mod closedform;
pub mod concavity;
pub mod error;
pub mod hilbert;
pub mod polyring;

pub use error::SeriesError;
pub use polyring::IntPoly;
