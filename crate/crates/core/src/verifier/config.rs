//! JSON input for the verifier.
//!
//! ```json
//! {"h1": [[1, [0, 2, 1]], ...], "h2": [...], "e0": [4, 9, 6],
//!  "e9": [0, 1, 0], "node_assignment": "h1->B1",
//!  "overrides": {"representatives": {"h0_12_9": [12, -5, ...]}}}
//! ```

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::VanishingTask;
use crate::lattice::{DivisorClass, RANK};
use crate::pencil::{build_config, Cubic, NodeAssignment, PencilError, PointConfig, ProjPointQ};

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("cannot read {0}: {1}")]
    Io(String, std::io::Error),
    #[error("malformed config: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unknown task key {0:?} in overrides")]
    TaskKey(String),
    #[error("override for {0} has {1} coordinates, expected 13")]
    OverrideLength(String, usize),
    #[error(transparent)]
    Pencil(#[from] PencilError),
}

#[derive(Clone, Debug, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct Overrides {
    #[serde(default)]
    pub representatives: BTreeMap<String, Vec<i64>>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub h1: Vec<(i64, [u32; 3])>,
    pub h2: Vec<(i64, [u32; 3])>,
    pub e0: [i64; 3],
    #[serde(default)]
    pub e9: Option<[i64; 3]>,
    #[serde(default = "default_assignment")]
    pub node_assignment: String,
    #[serde(default)]
    pub overrides: Overrides,
}

fn default_assignment() -> String {
    "h1->B1".into()
}

impl ConfigFile {
    pub fn from_json(text: &str) -> Result<Self, ConfigError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|e| ConfigError::Io(path.display().to_string(), e))?;
        Self::from_json(&text)
    }

    pub fn point_config(&self) -> Result<PointConfig, ConfigError> {
        let h1 = Cubic::from_terms(&self.h1)?;
        let h2 = Cubic::from_terms(&self.h2)?;
        let e0 = ProjPointQ::from_i64s(self.e0)?;
        let e9 = self.e9.map(ProjPointQ::from_i64s).transpose()?;
        let assignment: NodeAssignment = self.node_assignment.parse()?;
        Ok(build_config(&h1, &h2, &e0, e9.as_ref(), assignment)?)
    }

    pub fn representative_overrides(&self) -> Result<BTreeMap<VanishingTask, DivisorClass>, ConfigError> {
        let mut out = BTreeMap::new();
        for (key, v) in &self.overrides.representatives {
            let task = VanishingTask::parse(key).ok_or_else(|| ConfigError::TaskKey(key.clone()))?;
            let coords: [i64; RANK] = v
                .as_slice()
                .try_into()
                .map_err(|_| ConfigError::OverrideLength(key.clone(), v.len()))?;
            out.insert(task, DivisorClass(coords));
        }
        Ok(out)
    }
}

/// What the report records about its input.
#[derive(Clone, Debug, Serialize)]
pub struct ConfigEcho {
    pub h1: String,
    pub h2: String,
    pub e9: ProjPointQ,
    pub e0: ProjPointQ,
    pub node1: ProjPointQ,
    pub node2: ProjPointQ,
    pub node_assignment: NodeAssignment,
    pub rational_base_points: Vec<ProjPointQ>,
    pub orbit_minpoly: String,
    pub orbit_chart: usize,
    pub orbit_shear: i64,
}

impl ConfigEcho {
    pub fn from_config(cfg: &PointConfig) -> Self {
        ConfigEcho {
            h1: cfg.cubics.0.to_string(),
            h2: cfg.cubics.1.to_string(),
            e9: cfg.e9.clone(),
            e0: cfg.e0.clone(),
            node1: cfg.node1.clone(),
            node2: cfg.node2.clone(),
            node_assignment: cfg.node_assignment,
            rational_base_points: cfg.rational_base_points.clone(),
            orbit_minpoly: cfg.orbit.minpoly.to_string(),
            orbit_chart: cfg.orbit.chart,
            orbit_shear: cfg.orbit.shear,
        }
    }
}
