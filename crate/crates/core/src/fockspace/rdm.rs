use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{cmat4_zero, hermitian_eigenvalues, CMat4};
use crate::scalar::Real;

use super::config::{FockConfig, LocalState, Spin};
use super::state::ManyBodyState;

/// Single-site reduced density matrix in the basis (hole, double, up, down).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SiteRdm<T: Real> {
    entries: CMat4<T>,
}

impl<T: Real> SiteRdm<T> {
    /// Wraps a matrix after checking Hermiticity, unit trace and positivity.
    pub fn new(entries: CMat4<T>) -> Result<Self> {
        let rdm = SiteRdm { entries };
        rdm.validate()?;
        Ok(rdm)
    }

    pub(crate) fn new_unchecked(entries: CMat4<T>) -> Self {
        SiteRdm { entries }
    }

    pub fn from_diagonal(diag: [T; 4]) -> Result<Self> {
        let mut m = cmat4_zero();
        for (i, p) in diag.into_iter().enumerate() {
            m[i][i] = Complex::new(p, T::zero());
        }
        Self::new(m)
    }

    pub fn entries(&self) -> &CMat4<T> {
        &self.entries
    }

    pub fn get(&self, row: LocalState, col: LocalState) -> Complex<T> {
        self.entries[row.index()][col.index()]
    }

    pub fn diagonal(&self) -> [T; 4] {
        [0, 1, 2, 3].map(|i| self.entries[i][i].re)
    }

    pub fn trace(&self) -> Complex<T> {
        (0..4).fold(Complex::zero(), |acc, i| acc + self.entries[i][i])
    }

    /// `Tr rho^2`.
    pub fn purity(&self) -> T {
        let mut acc = T::zero();
        for i in 0..4 {
            for j in 0..4 {
                acc = acc + (self.entries[i][j] * self.entries[j][i]).re;
            }
        }
        acc
    }

    /// Ascending eigenvalues.
    pub fn eigenvalues(&self) -> [T; 4] {
        hermitian_eigenvalues(&self.entries)
    }

    pub fn hermiticity_deviation(&self) -> T {
        let mut worst = T::zero();
        for i in 0..4 {
            for j in 0..4 {
                worst = worst.max((self.entries[i][j] - self.entries[j][i].conj()).norm());
            }
        }
        worst
    }

    /// Largest magnitude among the off-diagonal entries.
    pub fn max_off_diagonal(&self) -> T {
        let mut worst = T::zero();
        for i in 0..4 {
            for j in 0..4 {
                if i != j {
                    worst = worst.max(self.entries[i][j].norm());
                }
            }
        }
        worst
    }

    pub fn validate(&self) -> Result<()> {
        let herm = self.hermiticity_deviation().as_f64();
        if herm > T::MATRIX_TOL {
            return Err(Error::NotHermitian { deviation: herm });
        }
        let tr = self.trace();
        if (tr.re.as_f64() - 1.0).abs() > T::MATRIX_TOL || tr.im.as_f64().abs() > T::MATRIX_TOL {
            return Err(Error::BadTrace {
                trace: tr.re.as_f64(),
            });
        }
        let min = self.eigenvalues()[0].as_f64();
        if min < -T::PSD_TOL {
            return Err(Error::NotPositiveSemidefinite {
                min_eigenvalue: min,
            });
        }
        Ok(())
    }
}

/// Annihilates the electrons of `local` at `site` in the order that inverts
/// its creation string (`|double> = c†_up c†_down |hole>`).
fn strip_local(config: FockConfig, site: usize, local: LocalState) -> Option<(FockConfig, bool)> {
    let ops: &[Spin] = match local {
        LocalState::Hole => &[],
        LocalState::Up => &[Spin::Up],
        LocalState::Down => &[Spin::Down],
        LocalState::Double => &[Spin::Up, Spin::Down],
    };
    let mut c = config;
    let mut negative = false;
    for &spin in ops {
        let (next, neg) = c.apply_mode(site, spin, false)?;
        c = next;
        negative ^= neg;
    }
    Some((c, negative))
}

fn dress_local(config: FockConfig, site: usize, local: LocalState) -> Option<(FockConfig, bool)> {
    let ops: &[Spin] = match local {
        LocalState::Hole => &[],
        LocalState::Up => &[Spin::Up],
        LocalState::Down => &[Spin::Down],
        LocalState::Double => &[Spin::Down, Spin::Up],
    };
    let mut c = config;
    let mut negative = false;
    for &spin in ops {
        let (next, neg) = c.apply_mode(site, spin, true)?;
        c = next;
        negative ^= neg;
    }
    Some((c, negative))
}

/// Partial trace of `|psi><psi|` over every site except `site`.
///
/// Entry `(a, b)` is the expectation of the local transition operator
/// `|b><a|` written in fermion operators, so Jordan-Wigner signs are carried
/// by the operator action rather than by a reordering of the basis.
/// In particular `rho[double][hole] = <c_down c_up>`.
pub fn single_site_rdm<T: Real>(state: &ManyBodyState<T>, site: usize) -> Result<SiteRdm<T>> {
    state.require_normalized()?;
    let probs = state.local_probabilities(site)?;
    let mut m = cmat4_zero();
    for (i, p) in probs.into_iter().enumerate() {
        m[i][i] = Complex::new(p, T::zero());
    }
    let basis = state.basis();
    let amps = state.amplitudes();
    for (idx, a) in amps.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let c = basis.config(idx);
        let from = c.local(site);
        let (bare, neg_strip) = strip_local(c, site, from).expect("local state present");
        for to in LocalState::ALL {
            if to == from {
                continue;
            }
            let Some((target, neg_dress)) = dress_local(bare, site, to) else {
                continue;
            };
            let Some(j) = basis.index_of(&target) else {
                continue;
            };
            let term = amps[j].conj() * a;
            // <psi| (|to><from|) |psi> is entry (from, to)
            let entry = &mut m[from.index()][to.index()];
            *entry = if neg_strip ^ neg_dress {
                *entry - term
            } else {
                *entry + term
            };
        }
    }
    Ok(SiteRdm::new_unchecked(m))
}
