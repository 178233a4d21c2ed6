use thiserror::Error;

use crate::fockspace::Spin;

/// Errors raised by the state machinery and the closed-form evaluators.
///
/// Numeric payloads are stored as `f64` regardless of the scalar type the
/// failing computation ran in.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("site {site} out of range for a lattice of {sites} sites")]
    SiteOutOfRange { site: usize, sites: usize },

    #[error("lattice of {sites} sites is outside the supported range 1..={max}")]
    UnsupportedSize { sites: usize, max: usize },

    #[error("sector ({n_up} up, {n_down} down) does not fit on {sites} sites")]
    InvalidSector {
        sites: usize,
        n_up: usize,
        n_down: usize,
    },

    #[error("state is not normalized: norm {norm} deviates from 1 by more than {tolerance}")]
    NotNormalized { norm: f64, tolerance: f64 },

    #[error("cannot normalize a zero vector")]
    ZeroState,

    #[error("states live on different bases and cannot be combined")]
    BasisMismatch,

    #[error("{name} = {value} is outside its domain ({expected})")]
    ParameterOutOfRange {
        name: &'static str,
        value: f64,
        expected: &'static str,
    },

    #[error("density matrix eigenvalue `{which}` is negative ({value})")]
    NegativeEigenvalue { which: &'static str, value: f64 },

    #[error(
        "pairing amplitude {zeta} exceeds the hole/double block bound sqrt(d(1-n+d)) = {bound}"
    )]
    PairingTooLarge { zeta: f64, bound: f64 },

    #[error(
        "gap too large for density: zeta = {zeta} gives n/2 - d = {deficit}, \
         so the closed-form pairing amplitude has left its validity domain"
    )]
    GapTooLarge { zeta: f64, deficit: f64 },

    #[error("matrix is not Hermitian (max asymmetry {deviation})")]
    NotHermitian { deviation: f64 },

    #[error("trace {trace} differs from 1")]
    BadTrace { trace: f64 },

    #[error("matrix is not positive semidefinite (min eigenvalue {min_eigenvalue})")]
    NotPositiveSemidefinite { min_eigenvalue: f64 },

    #[error(
        "open shell for {spin:?} electrons: momenta {momenta:?} are degenerate at the Fermi level"
    )]
    OpenShell { spin: Spin, momenta: Vec<f64> },

    #[error("projection annihilated the state (g = 0 on a state without singly-occupied support)")]
    EmptyProjection,

    #[error("g = {g} is too small for a stable finite-difference log-derivative (need g >= 1e-3)")]
    StepTooSmall { g: f64 },

    #[error("down-spin count {down} out of range 0..={max} for {sites} sites")]
    DownCountOutOfRange {
        down: usize,
        max: usize,
        sites: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
