//! Shared fixtures for the benchmarks.

use twophoton_core::scenario::ScenarioConfig;
use twophoton_core::{LateralField, Setup};

pub fn reference_setup() -> Setup {
    ScenarioConfig::preset("paper-fig3").expect("built-in preset").setup
}

pub fn operating_field() -> LateralField {
    LateralField::from_volts_per_um(0.75).expect("positive field")
}
