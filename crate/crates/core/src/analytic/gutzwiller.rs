use crate::error::{Error, Result};
use crate::scalar::Real;

use super::measure::{epsilon, site_rdm};
use super::params::DensityParams;

/// Below this value of `n(1-g^2)` the bracket is evaluated by its power
/// series; the closed form loses all digits to cancellation as `g -> 1`.
const SERIES_CUTOFF: f64 = 1e-3;
const SERIES_TERMS: usize = 12;

fn check_domain<T: Real>(g: T, n: T) -> Result<()> {
    if !(g >= T::zero() && g <= T::one()) {
        return Err(Error::ParameterOutOfRange {
            name: "g",
            value: g.as_f64(),
            expected: "0 <= g <= 1",
        });
    }
    if !(n > T::zero() && n <= T::one()) {
        return Err(Error::ParameterOutOfRange {
            name: "n",
            value: n.as_f64(),
            expected: "0 < n <= 1",
        });
    }
    Ok(())
}

/// Double occupancy of the one-dimensional Gutzwiller-projected Fermi sea,
///
/// `d = (1/2) g^2/(1-g^2)^2 [-n(1-g^2) - ln(1 - n(1-g^2))]`,
///
/// with `d(g=1) = n^2/4` and `d(g=0) = 0`.
pub fn gutzwiller_d<T: Real>(g: T, n: T) -> Result<T> {
    check_domain(g, n)?;
    if g.is_zero() {
        return Ok(T::zero());
    }
    let g2 = g * g;
    let x = T::one() - g2;
    let y = n * x;
    let half = T::lit(0.5);
    if y < T::lit(SERIES_CUTOFF) {
        // -y - ln(1-y) = sum_{m>=2} y^m / m
        let mut sum = T::zero();
        let mut pow = T::one();
        for m in 2..(2 + SERIES_TERMS) {
            sum = sum + pow / T::from_usize_exact(m);
            pow = pow * y;
        }
        return Ok(half * g2 * n * n * sum);
    }
    let bracket = -y - (-y).ln_1p();
    Ok(half * g2 / (x * x) * bracket)
}

/// Mixedness of the projected Fermi sea at spin-balanced density `n`.
pub fn gutzwiller_epsilon<T: Real>(g: T, n: T) -> Result<T> {
    let d = gutzwiller_d(g, n)?;
    let params = DensityParams::symmetric(n, d, T::zero())?;
    Ok(epsilon(&site_rdm(&params)?))
}
