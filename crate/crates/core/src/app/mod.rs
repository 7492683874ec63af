//! Scenario files, sweeps, optimization tables and validation reports behind
//! the `crnoma` command-line tool.

mod config;
mod sweep;
mod table;
mod validate;

pub use config::{load_config, parse_config, ConfigError, REFERENCE_CONFIG};
pub use sweep::{run_sweep, sweep_rows, write_sweep_csv, SweepError, SweepRow, SWEEP_HEADER};
pub use table::format_optimize_table;
pub use validate::{
    binomial_band, format_report, run_validation, validate_at, Quantity, ValidationCell,
    ValidationReport, BAND_SIGMAS, MIN_TRIALS, VALIDATION_FRACTIONS,
};
