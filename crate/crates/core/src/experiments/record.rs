use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::spin::Boundary;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Dense,
    Analytic,
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Engine::Dense => "dense",
            Engine::Analytic => "analytic",
        })
    }
}

impl FromStr for Engine {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "dense" => Ok(Engine::Dense),
            "analytic" => Ok(Engine::Analytic),
            other => Err(Error::Parse(format!("unknown engine '{other}'"))),
        }
    }
}

/// One grid point of a sweep. Energies are in units of `J`, `t = k_B T/J`
/// (`t = 0` for ground-state records).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub n: usize,
    pub j: f64,
    pub gamma: f64,
    pub h: f64,
    pub t: f64,
    pub boundary: Boundary,
    pub concurrence: f64,
    pub energy0: f64,
    /// Absent for ground-state records.
    pub log_z: Option<f64>,
    pub engine: Engine,
    /// The ground level is degenerate; `concurrence` is then reported as 0.
    pub degenerate: bool,
}
