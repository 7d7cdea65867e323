//! Scalar abstraction. Everything numeric is generic over `Real`, which is
//! implemented for `f32` and `f64`.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};

/// Real floating point scalar: f32 or f64.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + NumAssign
    + Sum
    + Debug
    + Display
    + Default
    + Send
    + Sync
    + 'static
{
    /// Convert an f64 literal. Panics only if the target cannot hold it,
    /// which never happens for f32/f64.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    fn from_usize_lossy(n: usize) -> Self {
        Self::from_usize(n).expect("usize representable")
    }

    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    /// Tolerance that is `base` in f64 but never tighter than a few
    /// thousand ulps of the working precision.
    fn tol(base: f64) -> Self {
        let floor = Self::epsilon() * Self::lit(1e3);
        Self::lit(base).max(floor)
    }
}

impl Real for f32 {}
impl Real for f64 {}
