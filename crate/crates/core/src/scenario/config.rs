//! Scenario files.
//!
//! A scenario is a TOML document. Every table is optional when a `preset`
//! is named; keys that are present override the preset one by one. Without
//! a preset every required key must be given.
//!
//! ```toml
//! preset = "paper-fig3"
//!
//! [dot]
//! emission_wavelength_nm = 926.0      # default: two-photon resonant with the modes
//! electron_mass_m0 = 0.055
//! hole_mass_m0 = 0.11
//! electron_confinement_mev = 12.0
//! hole_confinement_mev = 6.0
//! r_cv_nm = 0.6
//! refractive_index = 3.4
//! detuning_floor_rad_per_s = 1e9
//! # optional, replaces the two default p-shell states
//! # [[dot.intermediate_states]]
//! # kind = "conduction_p"             # or "valence_p"
//! # offset_mev = 12.0                 # energy above the s-shell transition
//!
//! [mode1]                             # also [mode2] and optional [emission_mode]
//! wavelength_nm = 1550.0
//! q = 5000.0
//! volume_cubic_wavelengths = 1.0      # V in units of (lambda/n)^3
//! eta = 0.02
//! psi = 1.0
//!
//! [drive1]                            # TPA beam into mode1; also [drive2], [stimulation]
//! wavelength_nm = 1550.0              # default: the mode's wavelength
//! power_uw = 12.0
//! spot_area_um2 = 1.0
//!
//! [linewidth]
//! fwhm_rad_per_s = 1.1e9              # default: zero-field radiative rate
//!
//! [sweep]
//! variable = "field"                  # V/um; or "omega2" in rad/s
//! min = 0.0
//! max = 2.0
//! points = 200
//! log = false
//! field_v_per_um = 0.75               # field used by omega2 sweeps
//!
//! [output]
//! path = "fig3a.csv"
//! format = "csv"                      # or "json"
//! ```

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::preset;
use crate::cavity::{BulkHost, CavityMode};
use crate::error::{Error, Result};
use crate::qd_stark::{IntermediateState, LateralField, QuantumDotModel, StateKind};
use crate::quantities::{AngularFrequency, Power, Wavelength, M_ELECTRON};
use crate::rates::{opse_rate, DriveField, Linewidth, Setup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepVariable {
    /// Lateral field, V/um.
    Field,
    /// Photon-2 angular frequency, rad/s.
    Omega2,
}

impl SweepVariable {
    pub fn name(self) -> &'static str {
        match self {
            SweepVariable::Field => "field",
            SweepVariable::Omega2 => "omega2",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    Csv,
    Json,
}

impl std::str::FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::config("output.format", format!("unknown format {other:?}, expected csv or json"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StateParams {
    pub kind: StateKind,
    pub offset_mev: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DotParams {
    pub emission_wavelength_nm: Option<f64>,
    pub electron_mass_m0: f64,
    pub hole_mass_m0: f64,
    pub electron_confinement_mev: f64,
    pub hole_confinement_mev: f64,
    pub r_cv_nm: f64,
    pub refractive_index: f64,
    pub detuning_floor_rad_per_s: f64,
    pub intermediate_states: Option<Vec<StateParams>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModeParams {
    pub wavelength_nm: f64,
    pub q: f64,
    pub volume_cubic_wavelengths: f64,
    pub eta: f64,
    pub psi: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DriveParams {
    pub wavelength_nm: Option<f64>,
    pub power_uw: f64,
    pub spot_area_um2: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepParams {
    pub variable: SweepVariable,
    pub min: f64,
    pub max: f64,
    pub points: usize,
    pub log: bool,
    pub field_v_per_um: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputParams {
    pub path: Option<PathBuf>,
    pub format: OutputFormat,
}

/// A fully specified scenario in configuration units.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScenarioParams {
    pub preset: Option<String>,
    pub dot: DotParams,
    pub mode1: ModeParams,
    pub mode2: ModeParams,
    pub emission_mode: Option<ModeParams>,
    pub drive1: DriveParams,
    pub drive2: DriveParams,
    pub stimulation: DriveParams,
    pub linewidth_fwhm_rad_per_s: Option<f64>,
    pub sweep: SweepParams,
    pub output: OutputParams,
}

// --- raw file layer: everything optional, unknown keys rejected ---

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    preset: Option<String>,
    dot: Option<RawDot>,
    mode1: Option<RawMode>,
    mode2: Option<RawMode>,
    emission_mode: Option<RawMode>,
    drive1: Option<RawDrive>,
    drive2: Option<RawDrive>,
    stimulation: Option<RawDrive>,
    linewidth: Option<RawLinewidth>,
    sweep: Option<RawSweep>,
    output: Option<RawOutput>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDot {
    emission_wavelength_nm: Option<f64>,
    electron_mass_m0: Option<f64>,
    hole_mass_m0: Option<f64>,
    electron_confinement_mev: Option<f64>,
    hole_confinement_mev: Option<f64>,
    r_cv_nm: Option<f64>,
    refractive_index: Option<f64>,
    detuning_floor_rad_per_s: Option<f64>,
    intermediate_states: Option<Vec<RawState>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawState {
    kind: StateKind,
    offset_mev: f64,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMode {
    wavelength_nm: Option<f64>,
    q: Option<f64>,
    volume_cubic_wavelengths: Option<f64>,
    eta: Option<f64>,
    psi: Option<f64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDrive {
    wavelength_nm: Option<f64>,
    power_uw: Option<f64>,
    spot_area_um2: Option<f64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLinewidth {
    fwhm_rad_per_s: Option<f64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSweep {
    variable: Option<SweepVariable>,
    min: Option<f64>,
    max: Option<f64>,
    points: Option<i64>,
    log: Option<bool>,
    field_v_per_um: Option<f64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOutput {
    path: Option<PathBuf>,
    format: Option<OutputFormat>,
}

fn take<T: Clone>(raw: Option<T>, base: Option<&T>, field: &str) -> Result<T> {
    raw.or_else(|| base.cloned())
        .ok_or_else(|| Error::config(field, "missing required value"))
}

fn merge_dot(raw: Option<RawDot>, base: Option<&DotParams>) -> Result<DotParams> {
    if raw.is_none() && base.is_none() {
        return Err(Error::config("dot", "missing required table"));
    }
    let r = raw.unwrap_or_default();
    let states = match r.intermediate_states {
        Some(list) => Some(
            list.into_iter()
                .map(|s| StateParams {
                    kind: s.kind,
                    offset_mev: s.offset_mev,
                })
                .collect(),
        ),
        None => base.and_then(|b| b.intermediate_states.clone()),
    };
    Ok(DotParams {
        emission_wavelength_nm: r.emission_wavelength_nm.or(base.and_then(|b| b.emission_wavelength_nm)),
        electron_mass_m0: take(r.electron_mass_m0, base.map(|b| &b.electron_mass_m0), "dot.electron_mass_m0")?,
        hole_mass_m0: take(r.hole_mass_m0, base.map(|b| &b.hole_mass_m0), "dot.hole_mass_m0")?,
        electron_confinement_mev: take(
            r.electron_confinement_mev,
            base.map(|b| &b.electron_confinement_mev),
            "dot.electron_confinement_mev",
        )?,
        hole_confinement_mev: take(
            r.hole_confinement_mev,
            base.map(|b| &b.hole_confinement_mev),
            "dot.hole_confinement_mev",
        )?,
        r_cv_nm: take(r.r_cv_nm, base.map(|b| &b.r_cv_nm), "dot.r_cv_nm")?,
        refractive_index: take(r.refractive_index, base.map(|b| &b.refractive_index), "dot.refractive_index")?,
        detuning_floor_rad_per_s: r
            .detuning_floor_rad_per_s
            .or(base.map(|b| b.detuning_floor_rad_per_s))
            .unwrap_or(crate::qd_stark::DEFAULT_DETUNING_FLOOR),
        intermediate_states: states,
    })
}

fn merge_mode(raw: Option<RawMode>, base: Option<&ModeParams>, name: &str) -> Result<ModeParams> {
    if raw.is_none() && base.is_none() {
        return Err(Error::config(name, "missing required table"));
    }
    let r = raw.unwrap_or_default();
    let f = |k: &str| format!("{name}.{k}");
    Ok(ModeParams {
        wavelength_nm: take(r.wavelength_nm, base.map(|b| &b.wavelength_nm), &f("wavelength_nm"))?,
        q: take(r.q, base.map(|b| &b.q), &f("q"))?,
        volume_cubic_wavelengths: take(
            r.volume_cubic_wavelengths,
            base.map(|b| &b.volume_cubic_wavelengths),
            &f("volume_cubic_wavelengths"),
        )?,
        eta: take(r.eta, base.map(|b| &b.eta), &f("eta"))?,
        psi: r.psi.or(base.map(|b| b.psi)).unwrap_or(1.0),
    })
}

fn merge_drive(raw: Option<RawDrive>, base: Option<&DriveParams>, name: &str) -> Result<DriveParams> {
    if raw.is_none() && base.is_none() {
        return Err(Error::config(name, "missing required table"));
    }
    let r = raw.unwrap_or_default();
    let f = |k: &str| format!("{name}.{k}");
    Ok(DriveParams {
        wavelength_nm: r.wavelength_nm.or(base.and_then(|b| b.wavelength_nm)),
        power_uw: take(r.power_uw, base.map(|b| &b.power_uw), &f("power_uw"))?,
        spot_area_um2: r
            .spot_area_um2
            .or(base.map(|b| b.spot_area_um2))
            .unwrap_or(preset::SPOT_AREA_UM2),
    })
}

fn merge_sweep(raw: Option<RawSweep>, base: Option<&SweepParams>) -> Result<SweepParams> {
    if raw.is_none() && base.is_none() {
        return Err(Error::config("sweep", "missing required table"));
    }
    let r = raw.unwrap_or_default();
    let points = match r.points {
        Some(p) if p < 0 => return Err(Error::config("sweep.points", format!("{p} is negative"))),
        Some(p) => Some(p as usize),
        None => None,
    };
    Ok(SweepParams {
        variable: take(r.variable, base.map(|b| &b.variable), "sweep.variable")?,
        min: take(r.min, base.map(|b| &b.min), "sweep.min")?,
        max: take(r.max, base.map(|b| &b.max), "sweep.max")?,
        points: take(points, base.map(|b| &b.points), "sweep.points")?,
        log: r.log.or(base.map(|b| b.log)).unwrap_or(false),
        field_v_per_um: r
            .field_v_per_um
            .or(base.map(|b| b.field_v_per_um))
            .unwrap_or(preset::SPECTRUM_FIELD_V_PER_UM),
    })
}

fn merge(raw: RawConfig, fallback_preset: Option<&str>) -> Result<ScenarioParams> {
    let preset_name = raw.preset.clone().or(fallback_preset.map(str::to_string));
    let base = match &preset_name {
        Some(name) => Some(
            preset::lookup(name).ok_or_else(|| Error::config("preset", format!("unknown preset {name:?}")))?,
        ),
        None => None,
    };
    let b = base.as_ref();
    let emission_mode = match (raw.emission_mode, b.and_then(|b| b.emission_mode.as_ref())) {
        (None, None) => None,
        (r, base) => Some(merge_mode(r, base, "emission_mode")?),
    };
    let output = raw.output.unwrap_or_default();
    Ok(ScenarioParams {
        preset: preset_name,
        dot: merge_dot(raw.dot, b.map(|b| &b.dot))?,
        mode1: merge_mode(raw.mode1, b.map(|b| &b.mode1), "mode1")?,
        mode2: merge_mode(raw.mode2, b.map(|b| &b.mode2), "mode2")?,
        emission_mode,
        drive1: merge_drive(raw.drive1, b.map(|b| &b.drive1), "drive1")?,
        drive2: merge_drive(raw.drive2, b.map(|b| &b.drive2), "drive2")?,
        stimulation: merge_drive(raw.stimulation, b.map(|b| &b.stimulation), "stimulation")?,
        linewidth_fwhm_rad_per_s: raw
            .linewidth
            .and_then(|l| l.fwhm_rad_per_s)
            .or(b.and_then(|b| b.linewidth_fwhm_rad_per_s)),
        sweep: merge_sweep(raw.sweep, b.map(|b| &b.sweep))?,
        output: OutputParams {
            path: output.path.or(b.and_then(|b| b.output.path.clone())),
            format: output.format.or(b.map(|b| b.output.format)).unwrap_or(OutputFormat::Csv),
        },
    })
}

// --- validation and construction ---

fn require(field: &str, ok: bool, message: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::config(field, message))
    }
}

fn positive(field: &str, v: f64) -> Result<()> {
    require(field, v.is_finite() && v > 0.0, &format!("{v} must be a finite number > 0"))
}

fn build_mode(p: &ModeParams, host: BulkHost, name: &str) -> Result<CavityMode> {
    let f = |k: &str| format!("{name}.{k}");
    positive(&f("wavelength_nm"), p.wavelength_nm)?;
    positive(&f("q"), p.q)?;
    positive(&f("volume_cubic_wavelengths"), p.volume_cubic_wavelengths)?;
    require(&f("eta"), (0.0..=1.0).contains(&p.eta), &format!("{} must lie in [0, 1]", p.eta))?;
    require(&f("psi"), (0.0..=1.0).contains(&p.psi), &format!("{} must lie in [0, 1]", p.psi))?;
    let lambda = Wavelength::from_nm(p.wavelength_nm)?;
    let volume = p.volume_cubic_wavelengths * lambda.cubic_in_medium(host.n);
    CavityMode::new(AngularFrequency::from_wavelength(lambda), p.q, volume, p.eta, p.psi)
}

fn build_drive(p: &DriveParams, mode: &CavityMode, name: &str) -> Result<DriveField> {
    let f = |k: &str| format!("{name}.{k}");
    let omega = match p.wavelength_nm {
        Some(nm) => {
            positive(&f("wavelength_nm"), nm)?;
            AngularFrequency::from_wavelength(Wavelength::from_nm(nm)?)
        }
        None => mode.omega_c,
    };
    require(
        &f("power_uw"),
        p.power_uw.is_finite() && p.power_uw >= 0.0,
        &format!("{} must be a finite number >= 0", p.power_uw),
    )?;
    positive(&f("spot_area_um2"), p.spot_area_um2)?;
    DriveField::new(omega, Power::from_microwatts(p.power_uw)?, p.spot_area_um2 * 1e-12)
}

fn build_dot(p: &DotParams, omega_pair: f64) -> Result<(QuantumDotModel, Vec<IntermediateState>)> {
    positive("dot.electron_mass_m0", p.electron_mass_m0)?;
    positive("dot.hole_mass_m0", p.hole_mass_m0)?;
    positive("dot.electron_confinement_mev", p.electron_confinement_mev)?;
    positive("dot.hole_confinement_mev", p.hole_confinement_mev)?;
    positive("dot.r_cv_nm", p.r_cv_nm)?;
    require(
        "dot.refractive_index",
        p.refractive_index.is_finite() && p.refractive_index >= 1.0,
        &format!("{} must be >= 1", p.refractive_index),
    )?;
    require(
        "dot.detuning_floor_rad_per_s",
        p.detuning_floor_rad_per_s.is_finite() && p.detuning_floor_rad_per_s >= 0.0,
        &format!("{} must be >= 0", p.detuning_floor_rad_per_s),
    )?;
    let omega_d = match p.emission_wavelength_nm {
        Some(nm) => {
            positive("dot.emission_wavelength_nm", nm)?;
            AngularFrequency::from_wavelength(Wavelength::from_nm(nm)?)
        }
        None => AngularFrequency::new(omega_pair)?,
    };
    let model = QuantumDotModel::new(
        omega_d,
        p.electron_mass_m0 * M_ELECTRON,
        p.hole_mass_m0 * M_ELECTRON,
        AngularFrequency::from_energy_mev(p.electron_confinement_mev)?,
        AngularFrequency::from_energy_mev(p.hole_confinement_mev)?,
        p.r_cv_nm * 1e-9,
        BulkHost::new(p.refractive_index)?,
    )?
    .with_detuning_floor(p.detuning_floor_rad_per_s)?;

    let states = match &p.intermediate_states {
        None => model.default_states(),
        Some(list) => {
            require("dot.intermediate_states", !list.is_empty(), "at least one state is required")?;
            list.iter()
                .enumerate()
                .map(|(i, s)| {
                    let field = format!("dot.intermediate_states[{i}].offset_mev");
                    require(&field, s.offset_mev.is_finite(), "must be finite")?;
                    let offset = s.offset_mev * 1e-3 * crate::quantities::E_CHARGE / crate::quantities::HBAR;
                    let energy = omega_d.rad_per_s() + offset;
                    require(&field, energy > 0.0, "state must lie above the ground state")?;
                    Ok(IntermediateState {
                        kind: s.kind,
                        energy_above_ground: AngularFrequency::new(energy)?,
                    })
                })
                .collect::<Result<Vec<_>>>()?
        }
    };
    Ok((model, states))
}

fn validate_sweep(s: &SweepParams, dot: &QuantumDotModel) -> Result<()> {
    require("sweep.points", s.points >= 2, &format!("{} must be >= 2", s.points))?;
    require("sweep.min", s.min.is_finite(), "must be finite")?;
    require("sweep.max", s.max.is_finite(), "must be finite")?;
    require("sweep.max", s.min < s.max, &format!("max {} must exceed min {}", s.max, s.min))?;
    if s.log {
        require("sweep.log", s.min > 0.0, "log spacing needs min > 0")?;
    }
    require(
        "sweep.field_v_per_um",
        s.field_v_per_um.is_finite() && s.field_v_per_um >= 0.0,
        &format!("{} must be >= 0", s.field_v_per_um),
    )?;
    match s.variable {
        SweepVariable::Field => require("sweep.min", s.min >= 0.0, &format!("field {} must be >= 0", s.min)),
        SweepVariable::Omega2 => {
            require("sweep.min", s.min > 0.0, "omega2 must be > 0")?;
            require(
                "sweep.max",
                s.max < dot.omega_d.rad_per_s(),
                &format!("omega2 {} must stay below the transition frequency {}", s.max, dot.omega_d.rad_per_s()),
            )
        }
    }
}

/// A validated scenario ready to run.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioConfig {
    pub params: ScenarioParams,
    pub setup: Setup,
}

impl ScenarioConfig {
    pub fn from_params(params: ScenarioParams) -> Result<Self> {
        let host = BulkHost::new(params.dot.refractive_index)
            .map_err(|_| Error::config("dot.refractive_index", format!("{} must be >= 1", params.dot.refractive_index)))?;
        let mode1 = build_mode(&params.mode1, host, "mode1")?;
        let mode2 = build_mode(&params.mode2, host, "mode2")?;
        let emission_mode = params
            .emission_mode
            .as_ref()
            .map(|m| build_mode(m, host, "emission_mode"))
            .transpose()?;
        let (dot, states) = build_dot(&params.dot, mode1.omega_c.rad_per_s() + mode2.omega_c.rad_per_s())?;
        let drive1 = build_drive(&params.drive1, &mode1, "drive1")?;
        let drive2 = build_drive(&params.drive2, &mode2, "drive2")?;
        let stimulation = build_drive(&params.stimulation, &mode2, "stimulation")?;
        require(
            "stimulation.wavelength_nm",
            stimulation.omega < dot.omega_d,
            "stimulated photon must carry less energy than the transition",
        )?;
        let linewidth = match params.linewidth_fwhm_rad_per_s {
            Some(g) => {
                positive("linewidth.fwhm_rad_per_s", g)?;
                Linewidth::new(g)?
            }
            None => Linewidth::new(opse_rate(&dot, LateralField::ZERO, emission_mode.as_ref())?)?,
        };
        validate_sweep(&params.sweep, &dot)?;
        Ok(ScenarioConfig {
            setup: Setup {
                dot,
                states,
                mode1,
                mode2,
                emission_mode,
                tpa_drives: [drive1, drive2],
                stimulation,
                linewidth,
            },
            params,
        })
    }

    /// Built-in scenario by name.
    pub fn preset(name: &str) -> Result<Self> {
        let params = preset::lookup(name).ok_or_else(|| Error::config("preset", format!("unknown preset {name:?}")))?;
        Self::from_params(params)
    }

    /// SHA-256 of the resolved parameters.
    pub fn config_hash(&self) -> String {
        let canonical = serde_json::to_vec(&self.params).expect("params serialize");
        hex::encode(Sha256::digest(&canonical))
    }
}

/// Parse and validate a scenario document. `fallback_preset` applies when
/// the document does not name one itself.
pub fn load_config_str(text: &str, fallback_preset: Option<&str>) -> Result<ScenarioConfig> {
    let raw: RawConfig = toml::from_str(text).map_err(|e| Error::config("<document>", e.message().to_string()))?;
    ScenarioConfig::from_params(merge(raw, fallback_preset)?)
}

pub fn load_config(path: &Path, fallback_preset: Option<&str>) -> Result<ScenarioConfig> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    load_config_str(&text, fallback_preset)
}
