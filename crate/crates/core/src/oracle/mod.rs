//! Exact constructions of the metallic, projected, paired and one-hole
//! states on small rings, used to check the closed forms by enumeration.

mod bcs;
mod fermi_sea;
mod gutzwiller;
mod lattice;
mod nagaoka;

pub use bcs::{
    build_bcs, build_bcs_from_pairs, pair_amplitudes, pair_density, pair_zeta, PairAmplitude,
    MAX_BCS_SITES,
};
pub use fermi_sea::build_fermi_sea;
pub use gutzwiller::{
    apply_gutzwiller, gutzwiller_d_via_normalization, projected_norm, LOG_STEP,
    MIN_G_FOR_DERIVATIVE,
};
pub use lattice::{
    band_energy, closed_shell_lattice, Boundary, FillingSpec, LatticeSpec, MAX_RING, MIN_RING,
};
pub use nagaoka::{build_nagaoka_multiplet, lower_spin};
