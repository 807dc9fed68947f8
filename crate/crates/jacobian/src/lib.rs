//! Exact commutative algebra for plane and space curves: parsing, Jacobian
//! ideals, Gröbner bases, saturation by the irrelevant ideal and Hilbert
//! series of the resulting graded quotients.

pub mod error;
pub mod fixtures;
pub(crate) mod groebner;
pub mod hilbert;
pub mod ideal;
pub mod monomial;
pub mod mpoly;
pub mod parse;
pub mod pipeline;
pub mod saturation;

pub use error::{AlgebraError, ParseError};
pub use ideal::{groebner, normal_form, Ideal};
pub use monomial::{Monomial, MonomialOrder};
pub use mpoly::MPoly;
pub use parse::parse_poly;
pub use pipeline::{curve_pipeline, jacobian_ideal, CurveReport};
pub use saturation::saturate_irrelevant;
