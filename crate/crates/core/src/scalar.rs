//! Scalar abstraction so the spectral core runs in either `f32` or `f64`.

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};
use rustfft::FftNum;

/// Floating-point scalar usable throughout the spectral core: `f32` or `f64`.
pub trait Scalar: Float + FloatConst + FromPrimitive + ToPrimitive + NumAssign + FftNum {
    /// Lossy cast from `f64`; panics only for non-representable exotic types.
    fn from_f64c(v: f64) -> Self {
        <Self as FromPrimitive>::from_f64(v).expect("f64 conversion")
    }

    /// Cast from `usize`.
    fn from_usizec(v: usize) -> Self {
        <Self as FromPrimitive>::from_usize(v).expect("usize conversion")
    }

    /// Cast from `i64`.
    fn from_i64c(v: i64) -> Self {
        <Self as FromPrimitive>::from_i64(v).expect("i64 conversion")
    }

    /// Cast to `f64` for I/O boundaries.
    fn to_f64c(self) -> f64 {
        self.to_f64().expect("f64 conversion")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
