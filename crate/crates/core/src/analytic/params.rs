use crate::error::{Error, Result};
use crate::scalar::Real;

/// Macroscopic densities that fix the single-site density matrix of a
/// uniform state: total density `n`, spin densities, double occupancy `d`,
/// and the real on-site pairing amplitude `zeta`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityParams<T: Real> {
    n: T,
    n_up: T,
    n_down: T,
    d: T,
    zeta: T,
}

fn nonnegative<T: Real>(name: &'static str, value: T) -> Result<()> {
    if !value.is_finite() || value < T::zero() {
        return Err(Error::ParameterOutOfRange {
            name,
            value: value.as_f64(),
            expected: "finite and >= 0",
        });
    }
    Ok(())
}

impl<T: Real> DensityParams<T> {
    pub fn new(n_up: T, n_down: T, d: T, zeta: T) -> Result<Self> {
        nonnegative("n_up", n_up)?;
        nonnegative("n_down", n_down)?;
        nonnegative("d", d)?;
        nonnegative("zeta", zeta)?;
        let p = DensityParams {
            n: n_up + n_down,
            n_up,
            n_down,
            d,
            zeta,
        };
        let [hole, double, up, down] = p.eigen_diagonal();
        for (which, value) in [
            ("1 - n + d", hole),
            ("d", double),
            ("n_up - d", up),
            ("n_down - d", down),
        ] {
            if value < T::zero() {
                return Err(Error::NegativeEigenvalue {
                    which,
                    value: value.as_f64(),
                });
            }
        }
        let bound = (double * hole).sqrt();
        if zeta > bound {
            return Err(Error::PairingTooLarge {
                zeta: zeta.as_f64(),
                bound: bound.as_f64(),
            });
        }
        Ok(p)
    }

    /// Spin-balanced densities `n_up = n_down = n/2`.
    pub fn symmetric(n: T, d: T, zeta: T) -> Result<Self> {
        let half = n * T::lit(0.5);
        Self::new(half, half, d, zeta)
    }

    pub fn n(&self) -> T {
        self.n
    }
    pub fn n_up(&self) -> T {
        self.n_up
    }
    pub fn n_down(&self) -> T {
        self.n_down
    }
    pub fn d(&self) -> T {
        self.d
    }
    pub fn zeta(&self) -> T {
        self.zeta
    }

    /// Diagonal of the site matrix: `(1 - n + d, d, n_up - d, n_down - d)`.
    pub fn eigen_diagonal(&self) -> [T; 4] {
        [
            T::one() - self.n + self.d,
            self.d,
            self.n_up - self.d,
            self.n_down - self.d,
        ]
    }
}

/// Parameters of the narrow-shell superconducting state. Energies share the
/// unit of `e_f`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BcsParams<T: Real> {
    pub n: T,
    pub delta0: T,
    pub omega_d: T,
    pub e_f: T,
}

impl<T: Real> BcsParams<T> {
    pub fn new(n: T, delta0: T, omega_d: T, e_f: T) -> Result<Self> {
        if !(n > T::zero() && n <= T::one()) {
            return Err(Error::ParameterOutOfRange {
                name: "n",
                value: n.as_f64(),
                expected: "0 < n <= 1",
            });
        }
        nonnegative("delta0", delta0)?;
        for (name, v) in [("omega_d", omega_d), ("e_f", e_f)] {
            if !v.is_finite() || v <= T::zero() {
                return Err(Error::ParameterOutOfRange {
                    name,
                    value: v.as_f64(),
                    expected: "finite and > 0",
                });
            }
        }
        Ok(BcsParams {
            n,
            delta0,
            omega_d,
            e_f,
        })
    }

    /// Dimensionless form: `omega_ef = hbar omega_D / E_F`,
    /// `delta_ratio = Delta_0 / hbar omega_D`, with `E_F = 1`.
    pub fn from_ratios(n: T, omega_ef: T, delta_ratio: T) -> Result<Self> {
        nonnegative("delta_ratio", delta_ratio)?;
        Self::new(n, delta_ratio * omega_ef, omega_ef, T::one())
    }

    pub fn delta_ratio(&self) -> T {
        self.delta0 / self.omega_d
    }

    pub fn omega_ef(&self) -> T {
        self.omega_d / self.e_f
    }
}

/// One member of the maximal-spin one-hole multiplet on `sites` sites with
/// `down` down spins (and `sites - 1 - down` up spins).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NagaokaParams {
    sites: usize,
    down: usize,
}

impl NagaokaParams {
    pub fn new(sites: usize, down: usize) -> Result<Self> {
        if sites < 2 {
            return Err(Error::ParameterOutOfRange {
                name: "N",
                value: sites as f64,
                expected: "N >= 2",
            });
        }
        if down > sites - 1 {
            return Err(Error::DownCountOutOfRange {
                down,
                max: sites - 1,
                sites,
            });
        }
        Ok(NagaokaParams { sites, down })
    }

    pub fn sites(&self) -> usize {
        self.sites
    }

    pub fn down(&self) -> usize {
        self.down
    }

    pub fn up(&self) -> usize {
        self.sites - 1 - self.down
    }
}
