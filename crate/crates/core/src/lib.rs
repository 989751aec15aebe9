//! Exact symbolic computation in the quantum general linear superalgebra
//! `U_q(gl(m|n))`: PBW normal forms, Kac modules, typicality and the
//! root-of-unity theory.

pub mod battery;
pub mod checks;
pub mod error;
pub mod expr;
pub mod linalg;
pub mod modules;
pub mod pbw;
pub mod scalars;
pub mod signature;
pub mod symmetries;
pub mod typicality;
pub mod unity;
pub mod weights;

pub use error::{AlgebraError, Result};
pub use pbw::{Element, Engine, Kind, Letter, Monomial};
pub use scalars::*;
pub use signature::{Root, RootId, Signature};
