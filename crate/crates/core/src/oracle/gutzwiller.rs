use num_complex::Complex;

use crate::error::{Error, Result};
use crate::fockspace::ManyBodyState;
use crate::scalar::Real;

use super::fermi_sea::build_fermi_sea;
use super::lattice::{FillingSpec, LatticeSpec};

/// Relative step in `g` for the centered log-derivative.
pub const LOG_STEP: f64 = 1e-4;
/// Smallest `g` accepted by [`gutzwiller_d_via_normalization`].
pub const MIN_G_FOR_DERIVATIVE: f64 = 1e-3;

fn check_g<T: Real>(g: T) -> Result<()> {
    if !(g >= T::zero() && g <= T::one()) {
        return Err(Error::ParameterOutOfRange {
            name: "g",
            value: g.as_f64(),
            expected: "0 <= g <= 1",
        });
    }
    Ok(())
}

/// Squared norm after weighting each configuration by `g^D`, where `D`
/// counts its doubly-occupied sites.
pub fn projected_norm<T: Real>(state: &ManyBodyState<T>, g: T) -> T {
    state.iter().fold(T::zero(), |acc, (c, a)| {
        let w = g.powi(c.doubles() as i32);
        acc + a.norm_sqr() * w * w
    })
}

/// `prod_i [1 - (1-g) n_{i up} n_{i down}] |state>`, renormalized.
pub fn apply_gutzwiller<T: Real>(state: &ManyBodyState<T>, g: T) -> Result<ManyBodyState<T>> {
    check_g(g)?;
    state.require_normalized()?;
    let amplitudes = state
        .iter()
        .map(|(c, a)| a * Complex::new(g.powi(c.doubles() as i32), T::zero()))
        .collect();
    let projected = ManyBodyState::from_amplitudes(state.basis().clone(), amplitudes)?;
    if projected.is_zero() {
        return Err(Error::EmptyProjection);
    }
    projected.normalize()
}

/// Double occupancy of the projected Fermi sea from the log-derivative of
/// its normalization, `d = (1/2L) dlnN/dln g`, by centered differences in
/// `ln g`.
pub fn gutzwiller_d_via_normalization<T: Real>(
    lattice: &LatticeSpec,
    filling: &FillingSpec,
    g: T,
) -> Result<T> {
    check_g(g)?;
    if g < T::lit(MIN_G_FOR_DERIVATIVE) {
        return Err(Error::StepTooSmall { g: g.as_f64() });
    }
    let sea = build_fermi_sea::<T>(lattice, filling)?;
    let h = T::lit(LOG_STEP);
    let up = projected_norm(&sea, g * h.exp()).ln();
    let down = projected_norm(&sea, g * (-h).exp()).ln();
    let slope = (up - down) / (T::lit(2.0) * h);
    Ok(slope / (T::lit(2.0) * T::from_usize_exact(lattice.sites())))
}
