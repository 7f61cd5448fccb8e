//! The reference parameter set: an InAs dot in a doubly resonant GaAs
//! photonic crystal cavity with modes at 1550 nm and 2300 nm.

use super::config::{
    DotParams, DriveParams, ModeParams, OutputFormat, OutputParams, ScenarioParams, SweepParams, SweepVariable,
};

pub const PAPER_FIG3: &str = "paper-fig3";

/// GaAs near 1.5 um.
pub const REFRACTIVE_INDEX: f64 = 3.4;
pub const LAMBDA1_NM: f64 = 1550.0;
pub const LAMBDA2_NM: f64 = 2300.0;
pub const Q: f64 = 5000.0;
pub const ETA: f64 = 0.02;
pub const TPA_POWER_UW: f64 = 12.0;
pub const STIMULATION_POWER_UW: f64 = 100.0;
pub const SPOT_AREA_UM2: f64 = 1.0;
/// Field at which the spectrum sweep is evaluated, V/um.
pub const SPECTRUM_FIELD_V_PER_UM: f64 = 0.75;
/// Half-width of the spectrum window in units of the mode-2 linewidth.
pub const SPECTRUM_HALF_WINDOW_LINEWIDTHS: f64 = 5.0;
pub const SPECTRUM_POINTS: usize = 201;
pub const FIELD_SWEEP_MAX_V_PER_UM: f64 = 2.0;
pub const FIELD_SWEEP_POINTS: usize = 200;

pub fn dot() -> DotParams {
    DotParams {
        // None: two-photon resonant with the mode pair, 925.97 nm
        emission_wavelength_nm: None,
        electron_mass_m0: 0.055,
        hole_mass_m0: 0.11,
        electron_confinement_mev: 12.0,
        hole_confinement_mev: 6.0,
        r_cv_nm: 0.6,
        refractive_index: REFRACTIVE_INDEX,
        detuning_floor_rad_per_s: crate::qd_stark::DEFAULT_DETUNING_FLOOR,
        intermediate_states: None,
    }
}

pub fn mode(wavelength_nm: f64) -> ModeParams {
    ModeParams {
        wavelength_nm,
        q: Q,
        volume_cubic_wavelengths: 1.0,
        eta: ETA,
        psi: 1.0,
    }
}

pub fn drive(power_uw: f64) -> DriveParams {
    DriveParams {
        wavelength_nm: None,
        power_uw,
        spot_area_um2: SPOT_AREA_UM2,
    }
}

pub fn field_sweep() -> SweepParams {
    SweepParams {
        variable: SweepVariable::Field,
        min: 0.0,
        max: FIELD_SWEEP_MAX_V_PER_UM,
        points: FIELD_SWEEP_POINTS,
        log: false,
        field_v_per_um: SPECTRUM_FIELD_V_PER_UM,
    }
}

/// Every reference parameter in configuration units.
pub fn paper_fig3() -> ScenarioParams {
    ScenarioParams {
        preset: Some(PAPER_FIG3.to_string()),
        dot: dot(),
        mode1: mode(LAMBDA1_NM),
        mode2: mode(LAMBDA2_NM),
        emission_mode: None,
        drive1: drive(TPA_POWER_UW),
        drive2: drive(TPA_POWER_UW),
        stimulation: drive(STIMULATION_POWER_UW),
        linewidth_fwhm_rad_per_s: None,
        sweep: field_sweep(),
        output: OutputParams {
            path: None,
            format: OutputFormat::Csv,
        },
    }
}

pub fn lookup(name: &str) -> Option<ScenarioParams> {
    match name {
        PAPER_FIG3 => Some(paper_fig3()),
        _ => None,
    }
}
