use std::sync::Arc;

use num_complex::Complex;

use crate::error::Result;
use crate::fockspace::{Basis, ManyBodyState, Spin};
use crate::linalg::complex_determinant;
use crate::scalar::Real;

use super::lattice::{FillingSpec, LatticeSpec};

/// Slater determinant of the occupied plane waves `orbitals` restricted to
/// the sites in `bits`, rows in ascending site order.
fn slater<T: Real>(orbitals: &[Vec<Complex<T>>], bits: u32, sites: usize) -> Complex<T> {
    let rows: Vec<usize> = (0..sites).filter(|x| bits >> x & 1 == 1).collect();
    let n = rows.len();
    let mut m = Vec::with_capacity(n * n);
    for &x in &rows {
        for orb in orbitals {
            m.push(orb[x]);
        }
    }
    complex_determinant(&m, n)
}

/// Noninteracting ground state: the product of one Slater determinant per
/// spin, stored in the `(N_up, N_down)` sector.
pub fn build_fermi_sea<T: Real>(
    lattice: &LatticeSpec,
    filling: &FillingSpec,
) -> Result<ManyBodyState<T>> {
    let sites = lattice.sites();
    let basis = Arc::new(Basis::sector(sites, filling.n_up, filling.n_down)?);
    let mut dets: [Vec<Complex<T>>; 2] = [Vec::new(), Vec::new()];
    for (slot, spin) in Spin::BOTH.into_iter().enumerate() {
        let occupied = lattice.fill::<T>(spin, filling.count(spin))?;
        let orbitals: Vec<_> = occupied.iter().map(|&j| lattice.plane_wave(j)).collect();
        dets[slot] = basis
            .spin_bitsets(spin)
            .iter()
            .map(|&bits| slater(&orbitals, bits, sites))
            .collect();
    }
    let n_down_cfg = dets[1].len();
    let amplitudes = (0..basis.dim())
        .map(|i| dets[0][i / n_down_cfg] * dets[1][i % n_down_cfg])
        .collect();
    ManyBodyState::from_amplitudes(basis, amplitudes)?.normalize()
}
