//! Exact coefficient arithmetic.

pub mod cyclotomic;
pub mod field;
pub mod poly;
pub mod ratfunc;
pub mod weightpoly;

pub use cyclotomic::{CyclotomicField, CyclotomicScalar};
pub use field::{Field, RationalFunctions};
pub use poly::IntPoly;
pub use ratfunc::Scalar;
pub use weightpoly::WeightPoly;
