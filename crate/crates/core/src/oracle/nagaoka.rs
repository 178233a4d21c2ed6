use std::sync::Arc;

use num_complex::Complex;

use crate::analytic::NagaokaParams;
use crate::error::Result;
use crate::fockspace::{Basis, ManyBodyState, Spin};
use crate::scalar::Real;

/// Total-spin lowering operator `S^- = sum_i c†_{i down} c_{i up}`.
pub fn lower_spin<T: Real>(state: &ManyBodyState<T>) -> Result<ManyBodyState<T>> {
    let mut acc: Option<ManyBodyState<T>> = None;
    for site in 0..state.sites() {
        let term = state
            .apply_annihilation(site, Spin::Up)?
            .apply_creation(site, Spin::Down)?;
        acc = Some(match acc {
            None => term,
            Some(sum) => sum.add_scaled(Complex::new(T::one(), T::zero()), &term)?,
        });
    }
    Ok(acc.expect("lattice has at least one site"))
}

/// Member of the maximal-spin one-hole multiplet with `down` down spins:
/// the fully polarized one-hole state with the hole spread uniformly over
/// the ring, lowered `down` times and renormalized.
pub fn build_nagaoka_multiplet<T: Real>(sites: usize, down: usize) -> Result<ManyBodyState<T>> {
    NagaokaParams::new(sites, down)?;
    let basis = Arc::new(Basis::sector(sites, sites - 1, 0)?);
    let amplitudes = vec![Complex::new(T::one(), T::zero()); basis.dim()];
    let mut state = ManyBodyState::from_amplitudes(basis, amplitudes)?.normalize()?;
    for _ in 0..down {
        state = lower_spin(&state)?.normalize()?;
    }
    Ok(state)
}
