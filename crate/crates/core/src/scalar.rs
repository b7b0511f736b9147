//! Scalar abstractions shared by the weighted-eccentricity and bound code.
//!
//! Distances and eccentricities are always integers. Everything that is
//! divided (averages, weights, bounds) is generic over [`Scalar`], which is
//! satisfied by `f32`, `f64` and the exact [`Rational`](crate::Rational).

use std::fmt::Debug;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Float, FromPrimitive, Num, ToPrimitive};

/// A field-like number type usable as a vertex weight or average.
pub trait Scalar: Num + Clone + PartialOrd + FromPrimitive + ToPrimitive + Debug {
    fn from_count(k: u64) -> Self {
        Self::from_u64(k).expect("count representable in scalar type")
    }

    fn is_negative(&self) -> bool {
        *self < Self::zero()
    }
}

impl<T> Scalar for T where T: Num + Clone + PartialOrd + FromPrimitive + ToPrimitive + Debug {}

/// Floating-point scalar used for bounds that involve square roots.
pub trait Real: Scalar + Float {
    fn from_f64_lossy(x: f64) -> Self {
        Self::from_f64(x).expect("finite float")
    }
}

impl<T> Real for T where T: Scalar + Float {}

/// Exact ceiling of a nonnegative-denominator ratio.
pub fn ceil_ratio<I: Integer + Clone>(r: &Ratio<I>) -> I {
    r.ceil().to_integer()
}
