//! Seeded sampling of exact rationals.
//!
//! The generator is SplitMix64 (Steele, Lea and Flood), chosen because its
//! output sequence is fixed by a published specification; a report produced
//! from a given seed can be reproduced in any language.

use num_bigint::BigInt;
use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::algebra::Rational;

pub struct Sampler {
    rng: SplitMix64,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: SplitMix64::seed_from_u64(seed),
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    /// Uniform integer in `[1, 2^bits]`, taken from the high bits.
    pub fn uniform_bits(&mut self, bits: u32) -> u64 {
        (self.next_u64() >> (64 - bits)) + 1
    }

    /// `r^2` with `r = u/v`, `u, v` uniform in `[1, 2^32]`. Squares make
    /// half-integer powers rational.
    pub fn square_rational(&mut self) -> Rational {
        let u = self.uniform_bits(32);
        let v = self.uniform_bits(32);
        let r = Rational::new(BigInt::from(u), BigInt::from(v));
        &r * &r
    }

    /// `min(u,v)/max(u,v)` with `u != v` uniform in `[1, 2^bits]`: a rational
    /// strictly inside `(0, 1)`.
    pub fn unit_interval(&mut self, bits: u32) -> Rational {
        loop {
            let u = self.uniform_bits(bits);
            let v = self.uniform_bits(bits);
            if u != v {
                return Rational::new(BigInt::from(u.min(v)), BigInt::from(u.max(v)));
            }
        }
    }
}
