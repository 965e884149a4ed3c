//! Exact scalar, Laurent-polynomial and matrix arithmetic.

pub mod matrix;
pub mod poly;
pub mod rational;
pub mod ring;

pub use matrix::{
    det_cofactor, det_cofactor_bounded, det_fraction_free, determinant, oracle_bound, Matrix,
    PolyMatrix,
};
pub use poly::{ArithOp, LaurentPoly, Monomial};
pub use rational::{int, parse_rational, pow_half, rat, Rational};
pub use ring::Ring;
