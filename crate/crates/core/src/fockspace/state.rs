use std::sync::Arc;

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::Real;

use super::basis::Basis;
use super::config::{FockConfig, Spin};

/// Dense amplitude vector over a [`Basis`].
///
/// Basis states are `c†_{m1} c†_{m2} ... |0>` with modes in ascending order
/// of the operator ordering (up modes by site, then down modes by site).
#[derive(Debug, Clone, PartialEq)]
pub struct ManyBodyState<T: Real> {
    basis: Arc<Basis>,
    amplitudes: Vec<Complex<T>>,
}

impl<T: Real> ManyBodyState<T> {
    pub fn zeros(basis: Arc<Basis>) -> Self {
        let dim = basis.dim();
        ManyBodyState {
            basis,
            amplitudes: vec![Complex::zero(); dim],
        }
    }

    pub fn from_amplitudes(basis: Arc<Basis>, amplitudes: Vec<Complex<T>>) -> Result<Self> {
        if amplitudes.len() != basis.dim() {
            return Err(Error::BasisMismatch);
        }
        Ok(ManyBodyState { basis, amplitudes })
    }

    /// Single configuration with amplitude one. Fails when `config` is not
    /// part of `basis`.
    pub fn basis_state(basis: Arc<Basis>, config: FockConfig) -> Result<Self> {
        let idx = basis.index_of(&config).ok_or(Error::BasisMismatch)?;
        let mut s = Self::zeros(basis);
        s.amplitudes[idx] = Complex::new(T::one(), T::zero());
        Ok(s)
    }

    /// Empty lattice stored over the full 4^L space.
    pub fn vacuum(sites: usize) -> Result<Self> {
        let basis = Arc::new(Basis::full(sites)?);
        Self::basis_state(basis, FockConfig::empty(sites)?)
    }

    /// Empty lattice stored in the (0, 0) sector.
    pub fn vacuum_sector(sites: usize) -> Result<Self> {
        let basis = Arc::new(Basis::sector(sites, 0, 0)?);
        Self::basis_state(basis, FockConfig::empty(sites)?)
    }

    pub fn sites(&self) -> usize {
        self.basis.sites()
    }

    pub fn basis(&self) -> &Arc<Basis> {
        &self.basis
    }

    /// `(N_up, N_down)` when the state is stored sector-restricted.
    pub fn sector(&self) -> Option<(usize, usize)> {
        self.basis.sector_counts()
    }

    pub fn amplitudes(&self) -> &[Complex<T>] {
        &self.amplitudes
    }

    pub fn amplitude(&self, config: &FockConfig) -> Complex<T> {
        self.basis
            .index_of(config)
            .map_or(Complex::zero(), |i| self.amplitudes[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (FockConfig, Complex<T>)> + '_ {
        self.amplitudes
            .iter()
            .enumerate()
            .map(move |(i, a)| (self.basis.config(i), *a))
    }

    pub fn norm_sqr(&self) -> T {
        self.amplitudes
            .iter()
            .fold(T::zero(), |acc, a| acc + a.norm_sqr())
    }

    pub fn norm(&self) -> T {
        self.norm_sqr().sqrt()
    }

    pub fn is_zero(&self) -> bool {
        self.amplitudes.iter().all(|a| a.is_zero())
    }

    pub fn normalize(mut self) -> Result<Self> {
        let norm = self.norm();
        if norm.is_zero() || !norm.is_finite() {
            return Err(Error::ZeroState);
        }
        let inv = T::one() / norm;
        for a in &mut self.amplitudes {
            *a = *a * inv;
        }
        Ok(self)
    }

    pub(crate) fn require_normalized(&self) -> Result<()> {
        let norm = self.norm().as_f64();
        if (norm - 1.0).abs() > T::NORM_GATE {
            return Err(Error::NotNormalized {
                norm,
                tolerance: T::NORM_GATE,
            });
        }
        Ok(())
    }

    /// `<self|other>`, matching configurations across bases.
    pub fn inner(&self, other: &Self) -> Complex<T> {
        if self.sites() != other.sites() {
            return Complex::zero();
        }
        if Arc::ptr_eq(&self.basis, &other.basis) || *self.basis == *other.basis {
            return self
                .amplitudes
                .iter()
                .zip(&other.amplitudes)
                .fold(Complex::zero(), |acc, (a, b)| acc + a.conj() * b);
        }
        match (self.sector(), other.sector()) {
            (Some(a), Some(b)) if a != b => Complex::zero(),
            _ => self.iter().fold(Complex::zero(), |acc, (c, a)| {
                acc + a.conj() * other.amplitude(&c)
            }),
        }
    }

    pub fn scale(mut self, factor: Complex<T>) -> Self {
        for a in &mut self.amplitudes {
            *a = *a * factor;
        }
        self
    }

    /// `self + factor * other`; both states must share a basis.
    pub fn add_scaled(mut self, factor: Complex<T>, other: &Self) -> Result<Self> {
        if *self.basis != *other.basis {
            return Err(Error::BasisMismatch);
        }
        for (a, b) in self.amplitudes.iter_mut().zip(&other.amplitudes) {
            *a = *a + factor * b;
        }
        Ok(self)
    }

    /// Re-expresses the state over the full 4^L basis.
    pub fn to_full(&self) -> Result<Self> {
        if self.sector().is_none() {
            return Ok(self.clone());
        }
        let basis = Arc::new(Basis::full(self.sites())?);
        let mut out = Self::zeros(basis);
        for (c, a) in self.iter() {
            out.amplitudes[c.full_index()] = a;
        }
        Ok(out)
    }

    fn check_site(&self, site: usize) -> Result<()> {
        if site >= self.sites() {
            return Err(Error::SiteOutOfRange {
                site,
                sites: self.sites(),
            });
        }
        Ok(())
    }

    fn apply_mode(&self, site: usize, spin: Spin, create: bool) -> Result<Self> {
        self.check_site(site)?;
        let basis = match self.basis.shifted(spin, create)? {
            Some(b) if b == *self.basis => self.basis.clone(),
            Some(b) => Arc::new(b),
            // no configuration survives; the zero vector on the current basis
            None => return Ok(Self::zeros(self.basis.clone())),
        };
        let mut out = Self::zeros(basis);
        for (i, a) in self.amplitudes.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let c = self.basis.config(i);
            if let Some((next, negative)) = c.apply_mode(site, spin, create) {
                let j = out.basis.index_of(&next).expect("target basis holds image");
                out.amplitudes[j] = if negative { -*a } else { *a };
            }
        }
        Ok(out)
    }

    /// `c†_{site,spin} |self>`.
    pub fn apply_creation(&self, site: usize, spin: Spin) -> Result<Self> {
        self.apply_mode(site, spin, true)
    }

    /// `c_{site,spin} |self>`.
    pub fn apply_annihilation(&self, site: usize, spin: Spin) -> Result<Self> {
        self.apply_mode(site, spin, false)
    }

    /// `sum_x coefficients[x] c†_{x,spin} |self>`: creation of an electron in
    /// the single-particle orbital whose site amplitudes are `coefficients`.
    pub fn apply_orbital_creation(&self, spin: Spin, coefficients: &[Complex<T>]) -> Result<Self> {
        if coefficients.len() != self.sites() {
            return Err(Error::SiteOutOfRange {
                site: coefficients.len(),
                sites: self.sites(),
            });
        }
        let mut acc: Option<Self> = None;
        for (x, coef) in coefficients.iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            let term = self.apply_creation(x, spin)?;
            acc = Some(match acc {
                None => term.scale(*coef),
                Some(sum) => sum.add_scaled(*coef, &term)?,
            });
        }
        match acc {
            Some(s) => Ok(s),
            None => {
                let basis = self.basis.shifted(spin, true)?.map(Arc::new);
                Ok(Self::zeros(basis.unwrap_or_else(|| self.basis.clone())))
            }
        }
    }

    /// Probability that `site` is in each local state (hole, double, up, down).
    pub fn local_probabilities(&self, site: usize) -> Result<[T; 4]> {
        self.check_site(site)?;
        let mut p = [T::zero(); 4];
        for (c, a) in self.iter() {
            let k = c.local(site).index();
            p[k] = p[k] + a.norm_sqr();
        }
        Ok(p)
    }
}

/// `d = (1/L) sum_i <n_{i up} n_{i down}>`.
pub fn measure_double_occupancy<T: Real>(state: &ManyBodyState<T>) -> Result<T> {
    state.require_normalized()?;
    let total = state.iter().fold(T::zero(), |acc, (c, a)| {
        acc + a.norm_sqr() * T::from_usize_exact(c.doubles())
    });
    Ok(total / T::from_usize_exact(state.sites()))
}

/// On-site pairing amplitude `<c_{i down} c_{i up}>`.
pub fn measure_pairing<T: Real>(state: &ManyBodyState<T>, site: usize) -> Result<Complex<T>> {
    state.require_normalized()?;
    let paired = state
        .apply_annihilation(site, Spin::Up)?
        .apply_annihilation(site, Spin::Down)?;
    Ok(state.inner(&paired))
}

/// Average electron density `n = <N>/L`.
pub fn measure_density<T: Real>(state: &ManyBodyState<T>) -> Result<T> {
    state.require_normalized()?;
    let total = state.iter().fold(T::zero(), |acc, (c, a)| {
        acc + a.norm_sqr() * T::from_usize_exact(c.count(Spin::Up) + c.count(Spin::Down))
    });
    Ok(total / T::from_usize_exact(state.sites()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    type S = ManyBodyState<f64>;

    #[test]
    fn single_creation_on_vacuum() {
        let v = S::vacuum(3).unwrap();
        let s = v.apply_creation(0, Spin::Up).unwrap();
        let c = FockConfig::new(3, 0b001, 0).unwrap();
        assert_eq!(s.amplitude(&c), Complex::new(1.0, 0.0));
        assert_abs_diff_eq!(s.norm_sqr(), 1.0);
    }

    #[test]
    fn pauli_exclusion() {
        let v = S::vacuum(2).unwrap();
        let s = v
            .apply_creation(0, Spin::Up)
            .unwrap()
            .apply_creation(0, Spin::Up)
            .unwrap();
        assert!(s.is_zero());
    }

    #[test]
    fn creation_operators_anticommute() {
        let v = S::vacuum(2).unwrap();
        let a = v
            .apply_creation(0, Spin::Up)
            .unwrap()
            .apply_creation(1, Spin::Up)
            .unwrap();
        let b = v
            .apply_creation(1, Spin::Up)
            .unwrap()
            .apply_creation(0, Spin::Up)
            .unwrap();
        let sum = a.add_scaled(Complex::new(1.0, 0.0), &b).unwrap();
        assert!(sum.is_zero());
        assert!(!b.is_zero());
    }

    #[test]
    fn annihilation_undoes_creation() {
        let v = S::vacuum(2).unwrap();
        let back = v
            .apply_creation(0, Spin::Up)
            .unwrap()
            .apply_annihilation(0, Spin::Up)
            .unwrap();
        assert_eq!(back, v);
        assert!(v.apply_annihilation(0, Spin::Up).unwrap().is_zero());
    }

    #[test]
    fn sector_states_shift_sector() {
        let v = S::vacuum_sector(3).unwrap();
        let s = v.apply_creation(1, Spin::Down).unwrap();
        assert_eq!(s.sector(), Some((0, 1)));
        let t = s.apply_creation(2, Spin::Up).unwrap();
        assert_eq!(t.sector(), Some((1, 1)));
        let full = t.to_full().unwrap();
        let direct = S::vacuum(3)
            .unwrap()
            .apply_creation(1, Spin::Down)
            .unwrap()
            .apply_creation(2, Spin::Up)
            .unwrap();
        assert_eq!(full, direct);
        assert_abs_diff_eq!(t.inner(&direct).re, 1.0);
    }

    #[test]
    fn site_out_of_range() {
        let v = S::vacuum(2).unwrap();
        assert_eq!(
            v.apply_creation(2, Spin::Up).unwrap_err(),
            Error::SiteOutOfRange { site: 2, sites: 2 }
        );
        assert!(v.apply_annihilation(5, Spin::Down).is_err());
    }

    #[test]
    fn double_occupancy_extremes() {
        let v = S::vacuum(3).unwrap();
        assert_eq!(measure_double_occupancy(&v).unwrap(), 0.0);
        let mut s = v;
        for i in 0..3 {
            s = s
                .apply_creation(i, Spin::Up)
                .unwrap()
                .apply_creation(i, Spin::Down)
                .unwrap();
        }
        assert_abs_diff_eq!(measure_double_occupancy(&s).unwrap(), 1.0);
    }

    #[test]
    fn single_site_pair_amplitude_is_uv() {
        let (u, v) = (0.6, 0.8);
        let vac = S::vacuum(1).unwrap();
        let pair = vac
            .apply_creation(0, Spin::Down)
            .unwrap()
            .apply_creation(0, Spin::Up)
            .unwrap();
        let s = vac
            .clone()
            .scale(Complex::new(u, 0.0))
            .add_scaled(Complex::new(v, 0.0), &pair)
            .unwrap();
        let z = measure_pairing(&s, 0).unwrap();
        assert_abs_diff_eq!(z.re, u * v, epsilon = 1e-15);
        assert_abs_diff_eq!(z.im, 0.0);
    }

    #[test]
    fn unnormalized_input_rejected() {
        let s = S::vacuum(2).unwrap().scale(Complex::new(2.0, 0.0));
        assert!(matches!(
            measure_double_occupancy(&s),
            Err(Error::NotNormalized { .. })
        ));
        assert!(s.normalize().is_ok());
    }
}
