//! Replicated experiments for the `eajr` algorithms: instance grids, seeded
//! parallel runs, summary statistics and plain-text `.dat` tables.

use std::path::{Path, PathBuf};

use thiserror::Error;

pub mod config;
pub mod output;
pub mod run;
pub mod stats;

pub use config::{Algorithm, Budget, Cell, ExperimentConfig, Grid, InstanceClass};
pub use output::write_outputs;
pub use run::{derive_seed, exact_optimum, run_experiment, RunRecord};
pub use stats::{ecdf, ecdf_at, normalize, summarize, EcdfRow, SummaryRow};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {message}")]
    Parse { path: PathBuf, message: String },
    #[error(transparent)]
    Instance(#[from] eajr::instances::InstanceError),
}

/// Runs `cfg` and writes its output tables into `dir`.
pub fn run_to_dir(
    cfg: &ExperimentConfig,
    dir: &Path,
) -> Result<(Vec<RunRecord>, Vec<PathBuf>), HarnessError> {
    let records = run_experiment(cfg)?;
    let paths = write_outputs(cfg, &records, dir)?;
    Ok((records, paths))
}
