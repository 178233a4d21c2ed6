use crate::error::{Error, Result};
use crate::fockspace::SiteRdm;
use crate::scalar::Real;

use super::concurrence::concurrence_x;
use super::measure::{epsilon, site_rdm};
use super::params::{BcsParams, DensityParams};

/// On-site pairing amplitude of the narrow-shell state,
/// `zeta = (3 n Delta_0 / 4 E_F) asinh(hbar omega_D / Delta_0)`, continued to
/// zero at `Delta_0 = 0`.
pub fn bcs_zeta<T: Real>(params: &BcsParams<T>) -> T {
    if params.delta0.is_zero() {
        return T::zero();
    }
    T::lit(0.75) * params.n * params.delta0 / params.e_f * (params.omega_d / params.delta0).asinh()
}

/// Site matrix of a paired state at density `n`: `d = n^2/4 + zeta^2`.
///
/// Fails with [`Error::GapTooLarge`] once `n/2 - d` is no longer positive.
pub fn paired_rdm<T: Real>(n: T, zeta: T) -> Result<SiteRdm<T>> {
    let d = paired_double_occupancy(n, zeta);
    let deficit = n * T::lit(0.5) - d;
    if deficit.is_nan() || deficit <= T::zero() {
        return Err(Error::GapTooLarge {
            zeta: zeta.as_f64(),
            deficit: deficit.as_f64(),
        });
    }
    site_rdm(&DensityParams::symmetric(n, d, zeta)?)
}

pub fn paired_double_occupancy<T: Real>(n: T, zeta: T) -> T {
    n * n * T::lit(0.25) + zeta * zeta
}

pub fn bcs_double_occupancy<T: Real>(params: &BcsParams<T>) -> T {
    paired_double_occupancy(params.n, bcs_zeta(params))
}

pub fn bcs_rdm<T: Real>(params: &BcsParams<T>) -> Result<SiteRdm<T>> {
    paired_rdm(params.n, bcs_zeta(params))
}

pub fn bcs_epsilon<T: Real>(params: &BcsParams<T>) -> Result<T> {
    Ok(epsilon(&bcs_rdm(params)?))
}

/// Up/down concurrence of the paired site matrix.
pub fn bcs_concurrence<T: Real>(params: &BcsParams<T>) -> Result<T> {
    let zeta = bcs_zeta(params);
    // validates the domain
    paired_rdm(params.n, zeta)?;
    Ok(concurrence_x(
        params.n,
        paired_double_occupancy(params.n, zeta),
        zeta,
    ))
}

/// Pairing amplitude at which the concurrence switches on:
/// the root of `zeta (1 + zeta) = (n/2)(1 - n/2)`.
pub fn concurrence_onset_zeta<T: Real>(n: T) -> T {
    let half = n * T::lit(0.5);
    let c = half * (T::one() - half);
    ((T::one() + T::lit(4.0) * c).sqrt() - T::one()) * T::lit(0.5)
}

/// `Delta_0 / hbar omega_D` at which the concurrence switches on, found by
/// bisection on the increasing map `delta_ratio -> zeta`. `None` when the
/// pairing amplitude saturates (at `3 n omega_ef / 4`) before the onset.
pub fn concurrence_onset_ratio<T: Real>(n: T, omega_ef: T) -> Result<Option<T>> {
    let target = concurrence_onset_zeta(n);
    let zeta_at = |r: T| -> Result<T> { Ok(bcs_zeta(&BcsParams::from_ratios(n, omega_ef, r)?)) };
    if T::lit(0.75) * n * omega_ef <= target {
        return Ok(None);
    }
    let (mut lo, mut hi) = (T::zero(), T::one());
    while zeta_at(hi)? < target {
        hi = hi * T::lit(2.0);
        if hi > T::lit(1e12) {
            return Ok(None);
        }
    }
    for _ in 0..200 {
        let mid = (lo + hi) * T::lit(0.5);
        if mid <= lo || mid >= hi {
            break;
        }
        if zeta_at(mid)? < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(Some((lo + hi) * T::lit(0.5)))
}
