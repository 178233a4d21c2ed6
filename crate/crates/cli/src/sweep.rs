//! One-dimensional parameter sweeps over the closed forms.

use clap::ValueEnum;
use mixedness::analytic::{
    bcs_concurrence, bcs_epsilon, gutzwiller_epsilon, nagaoka_epsilon, BcsParams, NagaokaParams,
};

use crate::error::{CliError, CliResult};
use crate::output::{format_number, Table};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Gutzwiller,
    BcsEpsilon,
    BcsConcurrence,
    Nagaoka,
}

impl Family {
    /// Header of the swept column.
    pub fn axis(self) -> &'static str {
        match self {
            Self::Gutzwiller => "g",
            Self::BcsEpsilon | Self::BcsConcurrence => "delta_ratio",
            Self::Nagaoka => "l",
        }
    }

    pub fn default_densities(self) -> Vec<f64> {
        match self {
            Self::Gutzwiller => vec![1.0, 0.75, 0.5, 0.25],
            Self::BcsEpsilon => vec![1.0, 0.5],
            Self::BcsConcurrence => vec![1.0, 0.75],
            Self::Nagaoka => Vec::new(),
        }
    }

    pub fn default_omega_ef(self) -> Vec<f64> {
        match self {
            Self::BcsEpsilon => vec![0.1, 0.2],
            Self::BcsConcurrence => vec![0.5, 0.75],
            _ => Vec::new(),
        }
    }

    pub fn default_grid(self, sites: usize) -> Grid {
        match self {
            Self::Nagaoka => Grid {
                min: 0.0,
                max: sites.saturating_sub(1) as f64,
                steps: sites,
            },
            _ => Grid {
                min: 0.0,
                max: 1.0,
                steps: 101,
            },
        }
    }
}

/// Evenly spaced grid including both endpoints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub min: f64,
    pub max: f64,
    pub steps: usize,
}

impl Grid {
    pub fn validate(&self) -> CliResult<()> {
        if !(self.min.is_finite() && self.max.is_finite()) {
            return Err(CliError::usage("grid bounds must be finite"));
        }
        if self.min >= self.max {
            return Err(CliError::usage(format!(
                "grid min {} must be below max {}",
                self.min, self.max
            )));
        }
        if self.steps < 2 {
            return Err(CliError::usage("grid needs at least 2 steps"));
        }
        Ok(())
    }

    pub fn value(&self, i: usize) -> f64 {
        if i + 1 == self.steps {
            return self.max;
        }
        self.min + (self.max - self.min) * i as f64 / (self.steps - 1) as f64
    }

    pub fn values(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.steps).map(|i| self.value(i))
    }
}

/// One output column: a closed form with its fixed parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Curve {
    Gutzwiller { n: f64 },
    BcsEpsilon { n: f64, omega_ef: f64 },
    BcsConcurrence { n: f64, omega_ef: f64 },
    NagaokaDirect { sites: usize },
    NagaokaPaperForm { sites: usize },
}

impl Curve {
    pub fn name(&self) -> String {
        let f = format_number;
        match *self {
            Self::Gutzwiller { n } => format!("eps_n{}", f(n)),
            Self::BcsEpsilon { n, omega_ef } => format!("eps_n{}_w{}", f(n), f(omega_ef)),
            Self::BcsConcurrence { n, omega_ef } => format!("C_n{}_w{}", f(n), f(omega_ef)),
            Self::NagaokaDirect { sites } => format!("direct_N{sites}"),
            Self::NagaokaPaperForm { sites } => format!("paper_form_N{sites}"),
        }
    }

    /// Inverse of [`Curve::name`] given the family of the table.
    pub fn parse(family: Family, name: &str) -> Option<Self> {
        let num = |s: &str| s.parse::<f64>().ok();
        let pair = |rest: &str| {
            let (n, w) = rest.split_once("_w")?;
            Some((num(n)?, num(w)?))
        };
        match family {
            Family::Gutzwiller => Some(Self::Gutzwiller {
                n: num(name.strip_prefix("eps_n")?)?,
            }),
            Family::BcsEpsilon => {
                let (n, omega_ef) = pair(name.strip_prefix("eps_n")?)?;
                Some(Self::BcsEpsilon { n, omega_ef })
            }
            Family::BcsConcurrence => {
                let (n, omega_ef) = pair(name.strip_prefix("C_n")?)?;
                Some(Self::BcsConcurrence { n, omega_ef })
            }
            Family::Nagaoka => {
                if let Some(s) = name.strip_prefix("direct_N") {
                    Some(Self::NagaokaDirect {
                        sites: s.parse().ok()?,
                    })
                } else {
                    Some(Self::NagaokaPaperForm {
                        sites: name.strip_prefix("paper_form_N")?.parse().ok()?,
                    })
                }
            }
        }
    }

    pub fn evaluate(&self, x: f64) -> CliResult<f64> {
        Ok(match *self {
            Self::Gutzwiller { n } => gutzwiller_epsilon(x, n)?,
            Self::BcsEpsilon { n, omega_ef } => {
                bcs_epsilon(&BcsParams::from_ratios(n, omega_ef, x)?)?
            }
            Self::BcsConcurrence { n, omega_ef } => {
                bcs_concurrence(&BcsParams::from_ratios(n, omega_ef, x)?)?
            }
            Self::NagaokaDirect { sites } => nagaoka_epsilon(&nagaoka_params(sites, x)?).direct,
            Self::NagaokaPaperForm { sites } => {
                nagaoka_epsilon(&nagaoka_params(sites, x)?).paper_form
            }
        })
    }
}

fn nagaoka_params(sites: usize, l: f64) -> CliResult<NagaokaParams> {
    if l < 0.0 || l.fract() != 0.0 {
        return Err(CliError::usage(format!(
            "l = {l} is not a nonnegative integer; choose a grid that lands on integers"
        )));
    }
    Ok(NagaokaParams::new(sites, l as usize)?)
}

/// Declarative description of a sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub family: Family,
    pub grid: Grid,
    pub densities: Vec<f64>,
    pub omega_ef: Vec<f64>,
    pub sites: usize,
}

impl SweepSpec {
    /// Figure parameter sets for `family`, with `sites` used only by the
    /// one-hole family.
    pub fn defaults(family: Family, sites: usize) -> Self {
        Self {
            family,
            grid: family.default_grid(sites),
            densities: family.default_densities(),
            omega_ef: family.default_omega_ef(),
            sites,
        }
    }

    /// Output columns after the swept one. Pairing families take the
    /// cartesian product of densities and cutoff ratios.
    pub fn curves(&self) -> Vec<Curve> {
        match self.family {
            Family::Gutzwiller => self
                .densities
                .iter()
                .map(|&n| Curve::Gutzwiller { n })
                .collect(),
            Family::BcsEpsilon | Family::BcsConcurrence => {
                let mut out = Vec::new();
                for &n in &self.densities {
                    for &omega_ef in &self.omega_ef {
                        out.push(if self.family == Family::BcsEpsilon {
                            Curve::BcsEpsilon { n, omega_ef }
                        } else {
                            Curve::BcsConcurrence { n, omega_ef }
                        });
                    }
                }
                out
            }
            Family::Nagaoka => vec![
                Curve::NagaokaDirect { sites: self.sites },
                Curve::NagaokaPaperForm { sites: self.sites },
            ],
        }
    }
}

pub fn run_sweep(spec: &SweepSpec) -> CliResult<Table> {
    spec.grid.validate()?;
    let curves = spec.curves();
    if curves.is_empty() {
        return Err(CliError::usage(
            "sweep has no curves; pass at least one --n and --omega-ef",
        ));
    }
    let mut header = vec![spec.family.axis().to_string()];
    header.extend(curves.iter().map(Curve::name));
    let mut table = Table::new(header);
    for x in spec.grid.values() {
        let mut row = vec![format_number(x)];
        for curve in &curves {
            row.push(format_number(curve.evaluate(x)?));
        }
        table.push(row);
    }
    Ok(table)
}
