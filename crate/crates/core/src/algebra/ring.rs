use std::fmt::Debug;

use num_traits::{One, Zero};

use super::rational::{canonical, Rational};
use crate::error::{domain, Result};

/// A commutative integral domain with exact division, the scalar type of
/// every matrix in this crate.
///
/// `Ctx` carries whatever is needed to build a zero or a one without an
/// existing element (the number of variables for polynomials).
pub trait Ring: Clone + PartialEq + Debug + Send + Sync {
    type Ctx: Copy + Debug + PartialEq + Send + Sync;

    fn ctx(&self) -> Self::Ctx;
    fn zero_in(ctx: Self::Ctx) -> Self;
    fn one_in(ctx: Self::Ctx) -> Self;
    fn vanishes(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `self / other`, failing unless the quotient lies in the ring.
    fn div_exact(&self, other: &Self) -> Result<Self>;
    /// Canonical text used for hashing and golden output.
    fn canonical(&self) -> String;
    fn from_rational(ctx: Self::Ctx, c: &Rational) -> Self;

    fn scale_sign(&self, sign: i8) -> Self {
        match sign {
            0 => Self::zero_in(self.ctx()),
            s if s > 0 => self.clone(),
            _ => self.neg(),
        }
    }
}

impl Ring for Rational {
    type Ctx = ();

    fn ctx(&self) {}
    fn zero_in(_: ()) -> Self {
        Zero::zero()
    }
    fn one_in(_: ()) -> Self {
        One::one()
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, other: &Self) -> Result<Self> {
        if Zero::is_zero(other) {
            return domain("division by zero");
        }
        Ok(self / other)
    }
    fn canonical(&self) -> String {
        canonical(self)
    }
    fn from_rational(_: (), c: &Rational) -> Self {
        c.clone()
    }
}
