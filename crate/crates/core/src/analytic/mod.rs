//! Closed-form site matrices, mixedness and concurrence for the metallic,
//! one-hole, Gutzwiller-projected and paired states.

mod bcs;
mod concurrence;
mod gutzwiller;
mod measure;
mod nagaoka;
mod params;

pub use bcs::{
    bcs_concurrence, bcs_double_occupancy, bcs_epsilon, bcs_rdm, bcs_zeta, concurrence_onset_ratio,
    concurrence_onset_zeta, paired_double_occupancy, paired_rdm,
};
pub use concurrence::{concurrence_x, wootters_concurrence};
pub use gutzwiller::{gutzwiller_d, gutzwiller_epsilon};
pub use measure::{epsilon, global_epsilon, site_rdm, OccupancyClass};
pub use nagaoka::{
    nagaoka_discrepancy, nagaoka_eigenvalues, nagaoka_epsilon, nagaoka_max, nagaoka_paper_max,
    NagaokaEpsilon,
};
pub use params::{BcsParams, DensityParams, NagaokaParams};
