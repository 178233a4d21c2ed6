use num_complex::Complex;

use crate::error::Result;
use crate::fockspace::SiteRdm;
use crate::linalg::cmat4_zero;
use crate::scalar::Real;

use super::params::DensityParams;

/// Site matrix built from densities: `diag(1-n+d, d, n_up-d, n_down-d)`
/// with `zeta` in both hole/double off-diagonal slots.
pub fn site_rdm<T: Real>(params: &DensityParams<T>) -> Result<SiteRdm<T>> {
    let mut m = cmat4_zero();
    for (i, p) in params.eigen_diagonal().into_iter().enumerate() {
        m[i][i] = Complex::new(p, T::zero());
    }
    let z = Complex::new(params.zeta(), T::zero());
    m[0][1] = z;
    m[1][0] = z;
    SiteRdm::new(m)
}

/// Mixedness of one site, `(4/3)(1 - Tr rho^2)`, scaled so a maximally
/// mixed site gives one.
pub fn epsilon<T: Real>(rdm: &SiteRdm<T>) -> T {
    T::lit(4.0 / 3.0) * (T::one() - rdm.purity())
}

/// Lattice average of [`epsilon`] over every site matrix.
pub fn global_epsilon<T: Real>(rdms: &[SiteRdm<T>]) -> T {
    if rdms.is_empty() {
        return T::zero();
    }
    let sum = rdms.iter().fold(T::zero(), |acc, r| acc + epsilon(r));
    sum / T::from_usize_exact(rdms.len())
}

/// Occupancy restrictions that cap the achievable mixedness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OccupancyClass {
    /// Half filling with neither holes nor doubles: two local states.
    SpinOnly,
    /// Holes allowed, doubles forbidden: three local states.
    NoDoubles,
    /// All four local states allowed.
    Unrestricted,
}

impl OccupancyClass {
    pub fn classify<T: Real>(params: &DensityParams<T>) -> Self {
        let [hole, double, _, _] = params.eigen_diagonal();
        if double > T::zero() {
            OccupancyClass::Unrestricted
        } else if hole > T::zero() {
            OccupancyClass::NoDoubles
        } else {
            OccupancyClass::SpinOnly
        }
    }

    /// Number of local states the class can populate.
    pub fn local_dimension(self) -> usize {
        match self {
            OccupancyClass::SpinOnly => 2,
            OccupancyClass::NoDoubles => 3,
            OccupancyClass::Unrestricted => 4,
        }
    }

    /// Largest mixedness in the class, reached when every allowed local state
    /// has equal weight: `(4/3)(1 - 1/k)` for `k` local states.
    pub fn max_epsilon<T: Real>(self) -> T {
        let k = T::from_usize_exact(self.local_dimension());
        T::lit(4.0 / 3.0) * (T::one() - T::one() / k)
    }

    /// Densities attaining [`Self::max_epsilon`].
    pub fn maximizer<T: Real>(self) -> DensityParams<T> {
        let (spin, d) = match self {
            OccupancyClass::SpinOnly => (T::lit(0.5), T::zero()),
            OccupancyClass::NoDoubles => (T::one() / T::lit(3.0), T::zero()),
            OccupancyClass::Unrestricted => (T::lit(0.5), T::lit(0.25)),
        };
        DensityParams::new(spin, spin, d, T::zero()).expect("maximizer is a valid density")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn pure_site_has_zero_mixedness() {
        let r = SiteRdm::from_diagonal([1.0, 0.0, 0.0, 0.0]).unwrap();
        assert_eq!(epsilon(&r), 0.0);
    }

    #[test]
    fn class_ceilings_are_attained() {
        for (class, value) in [
            (OccupancyClass::SpinOnly, 2.0 / 3.0),
            (OccupancyClass::NoDoubles, 8.0 / 9.0),
            (OccupancyClass::Unrestricted, 1.0),
        ] {
            let p = class.maximizer::<f64>();
            assert_eq!(OccupancyClass::classify(&p), class);
            let e = epsilon(&site_rdm(&p).unwrap());
            assert_abs_diff_eq!(e, value, epsilon = 1e-15);
            assert_abs_diff_eq!(class.max_epsilon::<f64>(), value, epsilon = 1e-15);
        }
    }

    #[test]
    fn pairing_block_layout() {
        let zeta = 0.1;
        let p = DensityParams::symmetric(1.0, 0.25 + zeta * zeta, zeta).unwrap();
        let r = site_rdm(&p).unwrap();
        let e = r.entries();
        assert_abs_diff_eq!(e[0][0].re, 0.26, epsilon = 1e-15);
        assert_abs_diff_eq!(e[1][1].re, 0.26, epsilon = 1e-15);
        assert_abs_diff_eq!(e[0][1].re, 0.1, epsilon = 1e-15);
        assert_abs_diff_eq!(e[1][0].re, 0.1, epsilon = 1e-15);
        assert_abs_diff_eq!(e[2][2].re, 0.24, epsilon = 1e-15);
        assert_abs_diff_eq!(e[3][3].re, 0.24, epsilon = 1e-15);
        assert_eq!(e[2][3].re, 0.0);
    }

    #[test]
    fn global_average() {
        let a = SiteRdm::from_diagonal([1.0, 0.0, 0.0, 0.0]).unwrap();
        let b = SiteRdm::from_diagonal([0.25; 4]).unwrap();
        assert_abs_diff_eq!(global_epsilon(&[a, b]), 0.5, epsilon = 1e-15);
        assert_eq!(global_epsilon::<f64>(&[]), 0.0);
    }

    #[test]
    fn works_in_single_precision() {
        let r = SiteRdm::<f32>::from_diagonal([0.25; 4]).unwrap();
        assert!((epsilon(&r) - 1.0).abs() < 1e-6);
    }
}
