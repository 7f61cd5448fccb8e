//! Scenario files, parameter sweeps and their CSV/JSON output.

pub mod config;
pub mod output;
pub mod preset;
pub mod sweep;

pub use config::{load_config, load_config_str, OutputFormat, ScenarioConfig, ScenarioParams, SweepVariable};
pub use output::{render, to_csv, to_json, write_output};
pub use sweep::{reproduce_fig3a, reproduce_fig3b, run_sweep, SpectrumPoint, SweepResult, SweepRows};
