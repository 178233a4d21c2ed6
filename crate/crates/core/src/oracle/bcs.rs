use num_complex::Complex;

use crate::analytic::BcsParams;
use crate::error::{Error, Result};
use crate::fockspace::{ManyBodyState, Spin};
use crate::scalar::Real;

use super::lattice::{band_energy, LatticeSpec};

/// Largest ring on which the full 4^L paired state is built.
pub const MAX_BCS_SITES: usize = 8;

/// Coherence factors of one momentum: `u_k^2 + v_k^2 = 1`, both real and
/// nonnegative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairAmplitude<T> {
    pub momentum: T,
    pub u: T,
    pub v: T,
}

impl<T: Real> PairAmplitude<T> {
    pub fn from_v(momentum: T, v: T) -> Self {
        let u = (T::one() - v * v).max(T::zero()).sqrt();
        PairAmplitude { momentum, u, v }
    }
}

/// `|v_k|^2 = (1/2)(1 - xi/sqrt(xi^2 + Delta_k^2))`, `xi = E_k - E_F`, on the
/// ring's band, with `Delta_k = Delta_0` inside `|xi| <= hbar omega_D` and
/// zero outside. The density field of `params` is not used: on the ring it
/// follows from `E_F`.
pub fn pair_amplitudes<T: Real>(
    lattice: &LatticeSpec,
    params: &BcsParams<T>,
) -> Vec<PairAmplitude<T>> {
    lattice
        .momenta::<T>()
        .into_iter()
        .map(|k| {
            let xi = band_energy(k) - params.e_f;
            let gap = if xi.abs() <= params.omega_d {
                params.delta0
            } else {
                T::zero()
            };
            let v2 = if gap.is_zero() {
                if xi < T::zero() {
                    T::one()
                } else if xi > T::zero() {
                    T::zero()
                } else {
                    T::lit(0.5)
                }
            } else {
                T::lit(0.5) * (T::one() - xi / (xi * xi + gap * gap).sqrt())
            };
            PairAmplitude::from_v(k, v2.sqrt())
        })
        .collect()
}

/// `prod_k (u_k + v_k c†_{k up} c†_{-k down}) |0>` over every momentum of
/// the grid, in the full 4^L space. `pairs[j]` belongs to momentum index `j`.
pub fn build_bcs_from_pairs<T: Real>(
    lattice: &LatticeSpec,
    pairs: &[PairAmplitude<T>],
) -> Result<ManyBodyState<T>> {
    let sites = lattice.sites();
    if sites > MAX_BCS_SITES {
        return Err(Error::UnsupportedSize {
            sites,
            max: MAX_BCS_SITES,
        });
    }
    if pairs.len() != sites {
        return Err(Error::ParameterOutOfRange {
            name: "pair amplitude count",
            value: pairs.len() as f64,
            expected: "one per momentum",
        });
    }
    let mut state = ManyBodyState::<T>::vacuum(sites)?;
    for (j, pair) in pairs.iter().enumerate() {
        if pair.v.is_zero() {
            state = state.scale(Complex::new(pair.u, T::zero()));
            continue;
        }
        let down = lattice.plane_wave::<T>(lattice.opposite(j));
        let up = lattice.plane_wave::<T>(j);
        let created = state
            .apply_orbital_creation(Spin::Down, &down)?
            .apply_orbital_creation(Spin::Up, &up)?;
        state = state
            .scale(Complex::new(pair.u, T::zero()))
            .add_scaled(Complex::new(pair.v, T::zero()), &created)?;
    }
    state.normalize()
}

pub fn build_bcs<T: Real>(
    lattice: &LatticeSpec,
    params: &BcsParams<T>,
) -> Result<ManyBodyState<T>> {
    build_bcs_from_pairs(lattice, &pair_amplitudes(lattice, params))
}

/// `n = (2/L) sum_k v_k^2`.
pub fn pair_density<T: Real>(pairs: &[PairAmplitude<T>]) -> T {
    let s = pairs.iter().fold(T::zero(), |acc, p| acc + p.v * p.v);
    T::lit(2.0) * s / T::from_usize_exact(pairs.len())
}

/// `zeta = (1/L) sum_k u_k v_k`.
pub fn pair_zeta<T: Real>(pairs: &[PairAmplitude<T>]) -> T {
    let s = pairs.iter().fold(T::zero(), |acc, p| acc + p.u * p.v);
    s / T::from_usize_exact(pairs.len())
}
