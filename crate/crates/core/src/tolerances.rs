//! Tolerances and grids for the acceptance checks, read from
//! `tolerances.toml`. The compiled-in copy is the frozen calibration; a path
//! may override it for experiments.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const DEFAULT_TOML: &str = include_str!("../tolerances.toml");

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Grids {
    pub symmetric: Vec<usize>,
    pub semistrict: Vec<usize>,
    pub ks_symmetric: Vec<usize>,
    pub discriminant: Vec<usize>,
    pub em_w: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MomentTolerances {
    pub symmetric_signed: f64,
    pub semistrict_signed: f64,
    pub absolute_k3: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DistributionTolerances {
    pub ks_logistic_max: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiscriminantTolerances {
    #[serde(rename = "final")]
    pub final_deviation: f64,
    pub m_spread: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EmTolerances {
    pub slope_slack: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TauberianTolerances {
    pub partition_relative: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Tolerances {
    pub grids: Grids,
    pub moments: MomentTolerances,
    pub distribution: DistributionTolerances,
    pub discriminant: DiscriminantTolerances,
    pub euler_maclaurin: EmTolerances,
    pub tauberian: TauberianTolerances,
}

impl Tolerances {
    pub fn parse(text: &str) -> Result<Self> {
        let t: Tolerances = toml::from_str(text).map_err(|e| Error::Tolerances(e.to_string()))?;
        t.validate()?;
        Ok(t)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::parse(&text).map_err(|e| Error::Tolerances(format!("{}: {e}", path.display())))
    }

    fn validate(&self) -> Result<()> {
        let g = &self.grids;
        for (name, grid) in [
            ("symmetric", &g.symmetric),
            ("semistrict", &g.semistrict),
            ("ks_symmetric", &g.ks_symmetric),
            ("discriminant", &g.discriminant),
        ] {
            if grid.len() < 2 || grid.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Tolerances(format!("grid `{name}` must be increasing with ≥ 2 points")));
            }
        }
        if g.em_w.len() < 2 || g.em_w.iter().any(|&w| !(w > 0.0)) {
            return Err(Error::Tolerances("em_w needs ≥ 2 positive step sizes".into()));
        }
        Ok(())
    }
}

impl Default for Tolerances {
    fn default() -> Self {
        Self::parse(DEFAULT_TOML).expect("bundled tolerances.toml parses")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_file_parses() {
        let t = Tolerances::default();
        assert_eq!(t.grids.symmetric, vec![300, 600, 1200]);
        assert_eq!(t.moments.semistrict_signed, 0.5);
        assert_eq!(t.grids.em_w.len(), 5);
    }

    #[test]
    fn rejects_bad_grid_and_unknown_keys() {
        let bad = DEFAULT_TOML.replace("symmetric = [300, 600, 1200]", "symmetric = [600, 300]");
        assert!(Tolerances::parse(&bad).is_err());
        let extra = format!("{DEFAULT_TOML}\n[extra]\nx = 1\n");
        assert!(Tolerances::parse(&extra).is_err());
    }
}
