//! Vertex operators for Hall–Littlewood-type symmetric functions, their
//! Kostka coefficients, and the relations between products of two
//! operators.

pub mod coeffs;
pub mod error;
pub mod kostka;
mod memo;
pub mod rewrite;
pub mod suites;
pub mod symfunc;
pub mod vertexop;
pub mod weights;

pub use coeffs::{QPoly, QRat};
pub use error::{Error, Result};
