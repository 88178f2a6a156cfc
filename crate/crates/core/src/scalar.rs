//! Scalar abstraction for the floating-point backends.
//!
//! Transforms, means and norms are written once against [`Real`] and
//! instantiated for `f32` and `f64`. Exact arithmetic lives in
//! [`crate::cyclotomic`] and [`num_rational`].

use std::fmt::{Debug, Display};

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};

/// floating point: f32 or f64
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + NumAssign + Debug + Display + Default + Send + Sync + 'static
{
    /// Lossy conversion from a count or index.
    fn count(n: u64) -> Self {
        <Self as FromPrimitive>::from_u64(n).expect("u64 representable as float")
    }

    fn of(x: f64) -> Self {
        <Self as FromPrimitive>::from_f64(x).expect("f64 representable")
    }

    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// `exp(2πi·num/den)`.
pub fn unit_root<T: Real>(num: u64, den: u64) -> Complex<T> {
    let reduced = num % den;
    if reduced == 0 {
        return Complex::new(T::one(), T::zero());
    }
    // Quarter turns are exact; avoid sin(π) style residue.
    if 4 * reduced % den == 0 {
        return match 4 * reduced / den {
            1 => Complex::new(T::zero(), T::one()),
            2 => Complex::new(-T::one(), T::zero()),
            _ => Complex::new(T::zero(), -T::one()),
        };
    }
    let angle = T::TAU() * T::count(reduced) / T::count(den);
    Complex::new(angle.cos(), angle.sin())
}
