//! Scalar abstraction shared by every numerical routine in the crate.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Real floating-point scalar: `f32`, `f64`, or (with the `quad` feature) `f128`.
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
    /// Converts an `f64` literal into this scalar.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable in scalar type")
    }

    /// Lossy conversion to `f64` for reporting.
    #[inline]
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    /// Largest magnitude a shooting trial may reach before it is clamped.
    ///
    /// `1e100` where representable, otherwise the square root of the largest
    /// finite value.
    fn overflow_limit() -> Self {
        let root = Self::max_value().sqrt();
        match Self::from_f64(1e100) {
            Some(v) if v.is_finite() && v < root => v,
            _ => root,
        }
    }

    /// Magnitude below which a sample counts as zero.
    fn negligible() -> Self {
        match Self::from_f64(1e-300) {
            Some(v) if v > Self::zero() => v,
            _ => Self::min_positive_value(),
        }
    }

    /// Smaller of two values, preferring the non-NaN one. Written with plain
    /// comparisons because some extended-precision `Float::min` impls get
    /// the ordering of two negatives wrong.
    #[inline]
    fn fmin(self, other: Self) -> Self {
        if self.is_nan() || other < self {
            other
        } else {
            self
        }
    }

    /// Larger of two values; see [`Real::fmin`].
    #[inline]
    fn fmax(self, other: Self) -> Self {
        if self.is_nan() || other > self {
            other
        } else {
            self
        }
    }
}

impl Real for f32 {}
impl Real for f64 {}

#[cfg(feature = "quad")]
impl Real for f128::f128 {}

/// Wraps an angle into `(-pi, pi]`.
pub fn wrap_angle<T: Real>(theta: T) -> T {
    let two_pi = T::TAU();
    let mut r = theta % two_pi;
    if r < T::zero() {
        r = r + two_pi;
    }
    if r > T::PI() {
        r = r - two_pi;
    }
    r
}
