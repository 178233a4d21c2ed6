//! Single-point evaluation printed as `name=value` lines.

use std::collections::BTreeMap;

use clap::ValueEnum;
use mixedness::analytic::{
    bcs_concurrence, bcs_double_occupancy, bcs_epsilon, bcs_zeta, concurrence_onset_ratio,
    concurrence_onset_zeta, epsilon, gutzwiller_d, gutzwiller_epsilon, nagaoka_epsilon, site_rdm,
    wootters_concurrence, BcsParams, DensityParams, NagaokaParams,
};

use crate::error::{CliError, CliResult};
use crate::output::{format_number, Format, Table};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EvalFamily {
    /// Double occupancy of the projected metal: g, n.
    GutzwillerD,
    /// Double occupancy and mixedness of the projected metal: g, n.
    GutzwillerEpsilon,
    /// Paired state: n, omega_ef, delta_ratio.
    BcsEpsilon,
    /// Paired state: n, omega_ef, delta_ratio.
    BcsConcurrence,
    /// Gap ratio where the concurrence switches on: n, omega_ef.
    BcsOnset,
    /// One-hole multiplet: N, l.
    Nagaoka,
    /// Arbitrary site matrix: n_up, n_down, d, zeta (zeta optional).
    Site,
}

impl EvalFamily {
    fn keys(self) -> (&'static [&'static str], &'static [&'static str]) {
        match self {
            Self::GutzwillerD | Self::GutzwillerEpsilon => (&["g", "n"], &[]),
            Self::BcsEpsilon | Self::BcsConcurrence => (&["n", "omega_ef", "delta_ratio"], &[]),
            Self::BcsOnset => (&["n", "omega_ef"], &[]),
            Self::Nagaoka => (&["N", "l"], &[]),
            Self::Site => (&["n_up", "n_down", "d"], &["zeta"]),
        }
    }
}

/// Named results in output order.
#[derive(Debug, Clone, PartialEq)]
pub struct Evaluation(pub Vec<(&'static str, String)>);

impl Evaluation {
    pub fn get(&self, name: &str) -> Option<&str> {
        self.0
            .iter()
            .find(|(k, _)| *k == name)
            .map(|(_, v)| v.as_str())
    }

    pub fn render(&self, format: Option<Format>) -> String {
        match format {
            None => self.0.iter().map(|(k, v)| format!("{k}={v}\n")).collect(),
            Some(f) => {
                let mut t = Table::new(self.0.iter().map(|(k, _)| k.to_string()).collect());
                t.push(self.0.iter().map(|(_, v)| v.clone()).collect());
                t.render(f)
            }
        }
    }
}

/// Splits `key=value` arguments, rejecting unknown, repeated or missing keys.
pub fn parse_assignments(
    family: EvalFamily,
    args: &[String],
) -> CliResult<BTreeMap<&'static str, f64>> {
    let (required, optional) = family.keys();
    let mut out = BTreeMap::new();
    for arg in args {
        let (key, value) = arg
            .split_once('=')
            .ok_or_else(|| CliError::usage(format!("expected key=value, got `{arg}`")))?;
        let known = required
            .iter()
            .chain(optional)
            .find(|k| **k == key)
            .ok_or_else(|| {
                CliError::usage(format!(
                    "unknown parameter `{key}`; expected {}",
                    required
                        .iter()
                        .chain(optional)
                        .copied()
                        .collect::<Vec<_>>()
                        .join(", ")
                ))
            })?;
        let value: f64 = value
            .parse()
            .map_err(|_| CliError::usage(format!("`{value}` is not a number for {key}")))?;
        if out.insert(*known, value).is_some() {
            return Err(CliError::usage(format!("parameter `{key}` given twice")));
        }
    }
    if let Some(missing) = required.iter().find(|k| !out.contains_key(*k)) {
        return Err(CliError::usage(format!("missing parameter `{missing}`")));
    }
    Ok(out)
}

fn count(name: &str, x: f64) -> CliResult<usize> {
    if x < 0.0 || x.fract() != 0.0 || x > u32::MAX as f64 {
        return Err(CliError::usage(format!(
            "{name} = {x} must be a nonnegative integer"
        )));
    }
    Ok(x as usize)
}

pub fn eval_point(family: EvalFamily, args: &[String]) -> CliResult<Evaluation> {
    let p = parse_assignments(family, args)?;
    let num = |x: f64| format_number(x);
    let out = match family {
        EvalFamily::GutzwillerD => vec![("d", num(gutzwiller_d(p["g"], p["n"])?))],
        EvalFamily::GutzwillerEpsilon => vec![
            ("d", num(gutzwiller_d(p["g"], p["n"])?)),
            ("eps", num(gutzwiller_epsilon(p["g"], p["n"])?)),
        ],
        EvalFamily::BcsEpsilon | EvalFamily::BcsConcurrence => {
            let params = BcsParams::from_ratios(p["n"], p["omega_ef"], p["delta_ratio"])?;
            let last = if family == EvalFamily::BcsEpsilon {
                ("eps", num(bcs_epsilon(&params)?))
            } else {
                ("C", num(bcs_concurrence(&params)?))
            };
            vec![
                ("zeta", num(bcs_zeta(&params))),
                ("d", num(bcs_double_occupancy(&params))),
                last,
            ]
        }
        EvalFamily::BcsOnset => {
            let ratio = concurrence_onset_ratio(p["n"], p["omega_ef"])?;
            vec![
                ("zeta", num(concurrence_onset_zeta(p["n"]))),
                ("delta_ratio", ratio.map_or_else(|| "none".to_string(), num)),
            ]
        }
        EvalFamily::Nagaoka => {
            let params = NagaokaParams::new(count("N", p["N"])?, count("l", p["l"])?)?;
            let e = nagaoka_epsilon::<f64>(&params);
            vec![
                ("direct", num(e.direct)),
                ("paper_form", num(e.paper_form)),
                ("difference", num(e.paper_form - e.direct)),
            ]
        }
        EvalFamily::Site => {
            let zeta = p.get("zeta").copied().unwrap_or(0.0);
            let params = DensityParams::new(p["n_up"], p["n_down"], p["d"], zeta)?;
            let rdm = site_rdm(&params)?;
            vec![
                ("eps", num(epsilon(&rdm))),
                ("C", num(wootters_concurrence(&rdm)?)),
            ]
        }
    };
    Ok(Evaluation(out))
}
