pub mod algebra;
pub mod error;
pub mod linear;
pub mod scalar;

pub use algebra::{AlgSubspace, Algebra, AlgebraPresentation, AssocReport, Element};
pub use error::Error;
pub use linear::{Mat, Subspace};
pub use scalar::{FieldSpec, Scalar};

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
