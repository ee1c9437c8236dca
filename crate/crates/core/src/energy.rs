//! Fixed-point energy.
//!
//! Energies are integers in units of `1 / ENERGY_SCALE` cost. Every transfer
//! between molecules and the buffer moves an integer amount, so total system
//! energy is conserved exactly. Random split fractions are 32-bit fixed point.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Sub, SubAssign};

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::instance::Cost;

pub const ENERGY_SCALE: i64 = 1 << 20;

/// One in 32-bit fixed point.
pub const FRACTION_ONE: u64 = 1 << 32;

#[derive(
    Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub struct Energy(i64);

impl Energy {
    pub const ZERO: Energy = Energy(0);

    pub const fn from_raw(raw: i64) -> Self {
        Energy(raw)
    }

    pub const fn raw(self) -> i64 {
        self.0
    }

    pub fn from_cost(cost: Cost) -> Self {
        Energy(cost as i64 * ENERGY_SCALE)
    }

    /// Nearest representable energy.
    pub fn from_f64(value: f64) -> Self {
        Energy((value * ENERGY_SCALE as f64).round() as i64)
    }

    pub fn to_f64(self) -> f64 {
        self.0 as f64 / ENERGY_SCALE as f64
    }

    /// `self * fraction / 2^32`, rounded toward zero.
    pub fn scale(self, fraction: Fraction) -> Energy {
        Energy(((i128::from(self.0) * i128::from(fraction.0)) >> 32) as i64)
    }

    pub fn max(self, other: Energy) -> Energy {
        Energy(self.0.max(other.0))
    }
}

impl Add for Energy {
    type Output = Energy;
    fn add(self, rhs: Energy) -> Energy {
        Energy(self.0 + rhs.0)
    }
}

impl Sub for Energy {
    type Output = Energy;
    fn sub(self, rhs: Energy) -> Energy {
        Energy(self.0 - rhs.0)
    }
}

impl AddAssign for Energy {
    fn add_assign(&mut self, rhs: Energy) {
        self.0 += rhs.0;
    }
}

impl SubAssign for Energy {
    fn sub_assign(&mut self, rhs: Energy) {
        self.0 -= rhs.0;
    }
}

impl Sum for Energy {
    fn sum<I: Iterator<Item = Energy>>(iter: I) -> Energy {
        iter.fold(Energy::ZERO, Add::add)
    }
}

impl fmt::Display for Energy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.6}", self.to_f64())
    }
}

/// A number in `[0, 1]` as `numerator / 2^32`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Fraction(u64);

impl Fraction {
    pub const ONE: Fraction = Fraction(FRACTION_ONE);
    pub const ZERO: Fraction = Fraction(0);

    pub fn from_raw(raw: u64) -> Self {
        Fraction(raw.min(FRACTION_ONE))
    }

    pub fn from_f64(x: f64) -> Self {
        Fraction((x.clamp(0.0, 1.0) * FRACTION_ONE as f64).round() as u64)
    }

    pub fn raw(self) -> u64 {
        self.0
    }

    pub fn complement(self) -> Fraction {
        Fraction(FRACTION_ONE - self.0)
    }

    pub fn product(self, other: Fraction) -> Fraction {
        Fraction(((u128::from(self.0) * u128::from(other.0)) >> 32) as u64)
    }

    /// Uniform on `[0, 1)`.
    pub fn sample_unit<R: Rng + ?Sized>(rng: &mut R) -> Fraction {
        Fraction(rng.gen_range(0..FRACTION_ONE))
    }

    /// Uniform on `[lo, 1]`.
    pub fn sample_at_least<R: Rng + ?Sized>(lo: Fraction, rng: &mut R) -> Fraction {
        Fraction(rng.gen_range(lo.0..=FRACTION_ONE))
    }
}
