//! Exact Schur modules inside wedge-tensor spaces, the Schur apolarity
//! action, catalecticant matrices and the rank procedures built on them.
//!
//! Everything is computed over the rationals; there is no floating point.

pub mod algebra;
pub mod apolarity;
pub mod combinatorics;
pub mod error;
pub mod ideals;
pub mod json;
pub mod points;
pub mod rank;
pub mod schur;

pub use algebra::Q;
pub use combinatorics::{Partition, SkewShape, Tableau, Word};
pub use error::{Result, SchurError};
pub use points::FlagPoint;
pub use schur::{AmbientElement, SkewAmbientElement, WordTensor};
