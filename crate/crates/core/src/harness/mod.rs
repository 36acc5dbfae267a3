//! Experiment configuration, sweeps, CSV output, scaling fits and the
//! validation battery.

use std::path::Path;

use thiserror::Error;

use crate::algorithms::ConfigError;
use crate::clique::CliqueError;
use crate::graph::GraphError;
use crate::kmachine::{KmError, PartitionError};
use crate::oracles::OracleError;

pub mod checks;
mod config;
mod fit;
mod run;
mod validate;

pub use config::{default_mode, ConfigFile, ExperimentConfig, GraphSource};
pub use fit::{fit_points, fit_scaling, median, FitError, ScalingFit, Sweep};
pub use run::{build_graph, build_instance, run_experiment, run_on_instance, Instance};
pub use validate::{check_mst_weights, validate_all, Check, Criterion, ValidationReport};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("config: {0}")]
    Config(String),
    #[error(transparent)]
    Algo(#[from] ConfigError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Clique(#[from] CliqueError),
    #[error(transparent)]
    Km(#[from] KmError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Fit(#[from] FitError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl HarnessError {
    pub fn io(path: &Path, source: std::io::Error) -> Self {
        HarnessError::Io {
            path: path.display().to_string(),
            source,
        }
    }
}

/// Writes the CSV document for `rows`.
pub fn to_csv(rows: &[crate::kmachine::RunRecord]) -> String {
    let mut out = String::from(crate::kmachine::CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&r.csv_row());
        out.push('\n');
    }
    out
}
