//! Exact verification of compound-determinant identities for minors of
//! rectangular matrices, together with the classical group characters and
//! Macdonald polynomials they specialize to.

pub mod algebra;
pub mod characters;
pub mod combinatorics;
pub mod compound;
pub mod error;
pub mod macdonald;

pub use error::{Error, Result};
pub mod report;
pub mod rng;
