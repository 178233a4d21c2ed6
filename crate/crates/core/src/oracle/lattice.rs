use num_complex::Complex;

use crate::error::{Error, Result};
use crate::fockspace::Spin;
use crate::scalar::Real;

/// Smallest and largest ring sizes the checker builds sector states on.
pub const MIN_RING: usize = 2;
pub const MAX_RING: usize = 10;

/// Energy gap below which two single-particle levels count as degenerate.
const DEGENERACY_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Boundary {
    Periodic,
    Antiperiodic,
}

/// One-dimensional ring of `sites` sites with momenta
/// `k_j = 2 pi (j + beta) / L`, `beta = 0` (periodic) or `1/2` (antiperiodic).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LatticeSpec {
    sites: usize,
    boundary: Boundary,
}

impl LatticeSpec {
    pub fn new(sites: usize, boundary: Boundary) -> Result<Self> {
        if !(MIN_RING..=MAX_RING).contains(&sites) {
            return Err(Error::UnsupportedSize {
                sites,
                max: MAX_RING,
            });
        }
        Ok(LatticeSpec { sites, boundary })
    }

    pub fn sites(&self) -> usize {
        self.sites
    }

    pub fn boundary(&self) -> Boundary {
        self.boundary
    }

    pub fn momentum<T: Real>(&self, j: usize) -> T {
        let beta = match self.boundary {
            Boundary::Periodic => T::zero(),
            Boundary::Antiperiodic => T::lit(0.5),
        };
        T::TAU() * (T::from_usize_exact(j) + beta) / T::from_usize_exact(self.sites)
    }

    pub fn momenta<T: Real>(&self) -> Vec<T> {
        (0..self.sites).map(|j| self.momentum(j)).collect()
    }

    /// Index of the momentum `-k_j` on the same grid.
    pub fn opposite(&self, j: usize) -> usize {
        match self.boundary {
            Boundary::Periodic => (self.sites - j) % self.sites,
            // -(j + 1/2) = (L - 1 - j) + 1/2 mod L
            Boundary::Antiperiodic => self.sites - 1 - j,
        }
    }

    /// Site amplitudes `exp(i k_j x) / sqrt(L)` of plane wave `j`.
    pub fn plane_wave<T: Real>(&self, j: usize) -> Vec<Complex<T>> {
        let k: T = self.momentum(j);
        let norm = T::one() / T::from_usize_exact(self.sites).sqrt();
        (0..self.sites)
            .map(|x| Complex::from_polar(norm, k * T::from_usize_exact(x)))
            .collect()
    }

    /// Momentum indices sorted by band energy (ties broken by index).
    pub fn levels<T: Real>(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.sites).collect();
        idx.sort_by(|&a, &b| {
            band_energy::<T>(self.momentum(a))
                .partial_cmp(&band_energy::<T>(self.momentum(b)))
                .unwrap_or(std::cmp::Ordering::Equal)
                .then(a.cmp(&b))
        });
        idx
    }

    /// The `count` lowest plane waves, or an open-shell error when the
    /// last filled level is degenerate with the first empty one.
    pub fn fill<T: Real>(&self, spin: Spin, count: usize) -> Result<Vec<usize>> {
        if count > self.sites {
            return Err(Error::InvalidSector {
                sites: self.sites,
                n_up: if spin == Spin::Up { count } else { 0 },
                n_down: if spin == Spin::Down { count } else { 0 },
            });
        }
        let levels = self.levels::<T>();
        if count > 0 && count < self.sites {
            let last = band_energy::<f64>(self.momentum(levels[count - 1]));
            let next = band_energy::<f64>(self.momentum(levels[count]));
            if (next - last).abs() <= DEGENERACY_TOL {
                let momenta = levels
                    .iter()
                    .filter(|&&j| {
                        (band_energy::<f64>(self.momentum(j)) - last).abs() <= DEGENERACY_TOL
                    })
                    .map(|&j| self.momentum::<f64>(j))
                    .collect();
                return Err(Error::OpenShell { spin, momenta });
            }
        }
        Ok(levels[..count].to_vec())
    }
}

/// Nearest-neighbour band shifted to start at zero: `2 (1 - cos k)`, `t = 1`.
pub fn band_energy<T: Real>(k: T) -> T {
    T::lit(2.0) * (T::one() - k.cos())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FillingSpec {
    pub n_up: usize,
    pub n_down: usize,
}

impl FillingSpec {
    pub fn new(n_up: usize, n_down: usize) -> Self {
        FillingSpec { n_up, n_down }
    }

    pub fn count(&self, spin: Spin) -> usize {
        match spin {
            Spin::Up => self.n_up,
            Spin::Down => self.n_down,
        }
    }
}

/// Ring with a unique Fermi sea for `filling`: antiperiodic if that gives a
/// closed shell for both spins, otherwise periodic.
pub fn closed_shell_lattice(sites: usize, filling: FillingSpec) -> Result<LatticeSpec> {
    let mut last_err = None;
    for boundary in [Boundary::Antiperiodic, Boundary::Periodic] {
        let lattice = LatticeSpec::new(sites, boundary)?;
        let ok = Spin::BOTH
            .iter()
            .try_for_each(|&s| lattice.fill::<f64>(s, filling.count(s)).map(|_| ()));
        match ok {
            Ok(()) => return Ok(lattice),
            Err(e) => last_err = Some(e),
        }
    }
    Err(last_err.expect("at least one boundary tried"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn opposite_momenta() {
        for boundary in [Boundary::Periodic, Boundary::Antiperiodic] {
            let l = LatticeSpec::new(6, boundary).unwrap();
            for j in 0..6 {
                let k: f64 = l.momentum(j);
                let mk: f64 = l.momentum(l.opposite(j));
                let s = (k + mk) / std::f64::consts::TAU;
                assert!((s - s.round()).abs() < 1e-12, "{boundary:?} {j}");
            }
        }
    }

    #[test]
    fn half_filling_shells() {
        let lat = closed_shell_lattice(4, FillingSpec::new(2, 2)).unwrap();
        assert_eq!(lat.boundary(), Boundary::Antiperiodic);
        let lat = closed_shell_lattice(6, FillingSpec::new(3, 3)).unwrap();
        assert_eq!(lat.boundary(), Boundary::Periodic);
        let lat = closed_shell_lattice(10, FillingSpec::new(5, 5)).unwrap();
        assert_eq!(lat.boundary(), Boundary::Periodic);
    }

    #[test]
    fn degenerate_fermi_level_reported() {
        let l = LatticeSpec::new(4, Boundary::Periodic).unwrap();
        match l.fill::<f64>(Spin::Up, 2) {
            Err(Error::OpenShell { spin, momenta }) => {
                assert_eq!(spin, Spin::Up);
                assert_eq!(momenta.len(), 2);
            }
            other => panic!("expected open shell, got {other:?}"),
        }
        assert!(closed_shell_lattice(4, FillingSpec::new(1, 2)).is_err());
    }

    #[test]
    fn ring_size_limits() {
        assert!(LatticeSpec::new(1, Boundary::Periodic).is_err());
        assert!(LatticeSpec::new(11, Boundary::Periodic).is_err());
    }
}
