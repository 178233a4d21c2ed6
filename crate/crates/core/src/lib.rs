//! Site mixedness and on-site concurrence of many-electron lattice states.
//!
//! * [`fockspace`] holds exact states on up to twelve sites, fermion
//!   operators and the single-site partial trace.
//! * [`analytic`] evaluates the closed forms: parameterized site matrices,
//!   the mixedness measure, the Gutzwiller and paired-state formulas and the
//!   concurrence.
//! * [`oracle`] builds the same states by enumeration on small rings so the
//!   closed forms can be checked.
//!
//! All numerics are generic over [`Real`] (`f32`, `f64`); the `*64` and
//! `*32` aliases below fix the scalar.

pub mod analytic;
pub mod error;
pub mod fockspace;
pub mod linalg;
pub mod oracle;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::Real;

pub type SiteRdm64 = fockspace::SiteRdm<f64>;
pub type SiteRdm32 = fockspace::SiteRdm<f32>;
pub type ManyBodyState64 = fockspace::ManyBodyState<f64>;
pub type ManyBodyState32 = fockspace::ManyBodyState<f32>;
pub type DensityParams64 = analytic::DensityParams<f64>;
pub type DensityParams32 = analytic::DensityParams<f32>;
pub type BcsParams64 = analytic::BcsParams<f64>;
pub type BcsParams32 = analytic::BcsParams<f32>;
