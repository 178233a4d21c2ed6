//! Exact many-electron states on small lattices.
//!
//! Modes are ordered spin-major: up-spin modes for sites `0..L`, then
//! down-spin modes for sites `0..L`. A creation or annihilation operator on
//! mode `m` picks up `(-1)^(occupied modes before m)`.

mod basis;
mod config;
mod rdm;
mod state;

pub use basis::{Basis, BasisKind};
pub use config::{FockConfig, LocalState, Spin, MAX_SITES};
pub use rdm::{single_site_rdm, SiteRdm};
pub use state::{measure_density, measure_double_occupancy, measure_pairing, ManyBodyState};
