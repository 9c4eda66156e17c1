use std::collections::BTreeMap;

use serde::Serialize;

use crate::birep::Algebra;
use crate::numdiff::DiffConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    Json,
    Text,
}

pub const DEFAULT_SEED: u64 = 20_041_375;
pub const DEFAULT_RADIUS: f64 = 0.5;
pub const DEFAULT_LIE_CARTAN_SAMPLES: usize = 20;
pub const DEFAULT_LEDGER_SAMPLES: usize = 32;
pub const DEFAULT_LIE_CARTAN_TOL: f64 = 1e-6;

/// Everything that determines a run; echoed verbatim into every report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub command: String,
    pub seed: u64,
    pub samples: usize,
    /// Per-identity tolerance overrides, keyed by entry name.
    pub tolerances: BTreeMap<String, f64>,
    pub fd_step: f64,
    pub fd_levels: usize,
    pub radius: f64,
    pub algebra: Algebra,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub point: Option<Vec<f64>>,
    pub format: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        let fd = DiffConfig::default();
        RunConfig {
            command: String::new(),
            seed: DEFAULT_SEED,
            samples: DEFAULT_LIE_CARTAN_SAMPLES,
            tolerances: BTreeMap::new(),
            fd_step: fd.step,
            fd_levels: fd.levels,
            radius: DEFAULT_RADIUS,
            algebra: Algebra::Octonion,
            point: None,
            format: OutputFormat::Json,
        }
    }
}

impl RunConfig {
    pub fn diff(&self) -> DiffConfig {
        DiffConfig {
            step: self.fd_step,
            levels: self.fd_levels,
        }
    }

    pub fn tolerance(&self, name: &str, default: f64) -> f64 {
        self.tolerances.get(name).copied().unwrap_or(default)
    }
}
