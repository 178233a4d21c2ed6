//! Scalar abstraction.
//!
//! Everything numeric in this crate is generic over [`Real`], which is
//! implemented for `f32` and `f64`. The tolerances used by runtime checks
//! (normalization gates, Hermiticity, positive semidefiniteness) depend on
//! the precision, so they live on the trait rather than as free constants.

use std::fmt::{Debug, Display};

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating point type usable by every routine in the crate.
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Allowed deviation of an input norm from one before an operation refuses it.
    const NORM_GATE: f64;
    /// Postcondition on `normalize`.
    const NORM_POST: f64;
    /// Hermiticity and trace tolerance for density matrices.
    const MATRIX_TOL: f64;
    /// Most negative eigenvalue still accepted as roundoff.
    const PSD_TOL: f64;

    /// Converts an `f64` literal. Every `f64` is representable (possibly
    /// rounded) in both supported types, so this never fails.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal fits the scalar type")
    }

    #[inline]
    fn from_usize_exact(n: usize) -> Self {
        Self::from_usize(n).expect("usize fits the scalar type")
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f64 {
    const NORM_GATE: f64 = 1e-8;
    const NORM_POST: f64 = 1e-12;
    const MATRIX_TOL: f64 = 1e-10;
    const PSD_TOL: f64 = 1e-10;
}

impl Real for f32 {
    const NORM_GATE: f64 = 1e-4;
    const NORM_POST: f64 = 1e-5;
    const MATRIX_TOL: f64 = 1e-5;
    const PSD_TOL: f64 = 1e-5;
}

/// Complex amplitude over a [`Real`] scalar.
pub type Amplitude<T> = Complex<T>;
