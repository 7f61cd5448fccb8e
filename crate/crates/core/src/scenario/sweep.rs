use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::config::{ScenarioConfig, ScenarioParams, SweepParams, SweepVariable};
use super::preset;
use crate::error::{Error, Result};
use crate::qd_stark::LateralField;
use crate::quantities::{AngularFrequency, CODATA_2018};
use crate::rates::{evaluate_point, tpse_spectral_density_bulk, tpse_spectral_density_cavity, RateReport};

/// One point of a TPSE spectrum sweep.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectrumPoint {
    pub omega2: f64,
    pub wavelength2_nm: f64,
    /// Double-mode cavity spectral density.
    pub density_cavity: f64,
    pub density_bulk: f64,
    /// `hbar w2 dGamma/dw2` normalized to the bulk peak in the window.
    pub power_cavity_rel: f64,
    pub power_bulk_rel: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "rows", rename_all = "snake_case")]
pub enum SweepRows {
    Field(Vec<RateReport>),
    Spectrum(Vec<SpectrumPoint>),
}

impl SweepRows {
    pub fn len(&self) -> usize {
        match self {
            SweepRows::Field(r) => r.len(),
            SweepRows::Spectrum(r) => r.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Metadata {
    pub config_hash: String,
    pub constants: String,
    pub generator: String,
    pub variable: SweepVariable,
    pub points: usize,
    /// Unix seconds; only set on request so repeated runs stay identical.
    pub timestamp: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepResult {
    pub metadata: Metadata,
    pub rows: SweepRows,
}

impl SweepResult {
    pub fn stamped(mut self) -> Self {
        let now = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        self.metadata.timestamp = Some(now);
        self
    }

    pub fn field_rows(&self) -> Option<&[RateReport]> {
        match &self.rows {
            SweepRows::Field(r) => Some(r),
            SweepRows::Spectrum(_) => None,
        }
    }

    pub fn spectrum_rows(&self) -> Option<&[SpectrumPoint]> {
        match &self.rows {
            SweepRows::Spectrum(r) => Some(r),
            SweepRows::Field(_) => None,
        }
    }
}

/// Sweep abscissae in configuration units, ascending, endpoints exact.
pub fn grid(sweep: &SweepParams) -> Vec<f64> {
    let n = sweep.points;
    let last = n - 1;
    (0..n)
        .map(|i| {
            if i == last {
                return sweep.max;
            }
            let t = i as f64 / last as f64;
            if sweep.log {
                (sweep.min.ln() + t * (sweep.max.ln() - sweep.min.ln())).exp()
            } else {
                sweep.min + t * (sweep.max - sweep.min)
            }
        })
        .collect()
}

fn at_point<T>(index: usize, variable: &'static str, value: f64, r: Result<T>) -> Result<T> {
    r.map_err(|e| Error::GridPoint {
        index,
        variable,
        value,
        source: Box::new(e),
    })
}

/// Evaluate the configured sweep. Points run in parallel; rows come back in
/// grid order and do not depend on scheduling.
pub fn run_sweep(config: &ScenarioConfig) -> Result<SweepResult> {
    let sweep = &config.params.sweep;
    let xs = grid(sweep);
    let setup = &config.setup;
    let rows = match sweep.variable {
        SweepVariable::Field => {
            let rows = xs
                .par_iter()
                .enumerate()
                .map(|(i, &v)| {
                    at_point(i, "field", v, LateralField::from_volts_per_um(v).and_then(|f| evaluate_point(f, setup)))
                })
                .collect::<Result<Vec<_>>>()?;
            SweepRows::Field(rows)
        }
        SweepVariable::Omega2 => {
            let field = LateralField::from_volts_per_um(sweep.field_v_per_um)?;
            let densities = xs
                .par_iter()
                .enumerate()
                .map(|(i, &w)| {
                    let r = AngularFrequency::new(w).and_then(|omega2| {
                        let cavity = tpse_spectral_density_cavity(
                            omega2,
                            &setup.dot,
                            &setup.states,
                            field,
                            &setup.mode1,
                            &setup.mode2,
                        )?;
                        let bulk = tpse_spectral_density_bulk(omega2, &setup.dot, &setup.states, field)?;
                        Ok((omega2, cavity, bulk))
                    });
                    at_point(i, "omega2", w, r)
                })
                .collect::<Result<Vec<_>>>()?;
            let bulk_peak = densities
                .iter()
                .map(|(w, _, b)| w.energy_joules() * b)
                .fold(0.0, f64::max);
            let norm = if bulk_peak > 0.0 { 1.0 / bulk_peak } else { 0.0 };
            let rows = densities
                .into_iter()
                .map(|(w, cavity, bulk)| SpectrumPoint {
                    omega2: w.rad_per_s(),
                    wavelength2_nm: w.to_wavelength().map(|l| l.nm()).unwrap_or(f64::INFINITY),
                    density_cavity: cavity,
                    density_bulk: bulk,
                    power_cavity_rel: w.energy_joules() * cavity * norm,
                    power_bulk_rel: w.energy_joules() * bulk * norm,
                })
                .collect();
            SweepRows::Spectrum(rows)
        }
    };
    Ok(SweepResult {
        metadata: Metadata {
            config_hash: config.config_hash(),
            constants: CODATA_2018.name.to_string(),
            generator: concat!("twophoton-core ", env!("CARGO_PKG_VERSION")).to_string(),
            variable: sweep.variable,
            points: xs.len(),
            timestamp: None,
        },
        rows,
    })
}

/// Reference field sweep: 0 to 2 V/um, 200 points.
pub fn fig3a_params() -> ScenarioParams {
    preset::paper_fig3()
}

/// Reference spectrum: photon 2 swept across the mode-2 resonance at
/// 0.75 V/um.
pub fn fig3b_params() -> ScenarioParams {
    spectrum_params(preset::paper_fig3())
}

/// `base` with its sweep replaced by a photon-2 sweep five mode-2
/// linewidths either side of the resonance.
pub fn spectrum_params(base: ScenarioParams) -> ScenarioParams {
    let mut params = base;
    let omega2c = crate::quantities::AngularFrequency::from_wavelength(
        crate::quantities::Wavelength::from_nm(params.mode2.wavelength_nm).expect("positive"),
    )
    .rad_per_s();
    let half = preset::SPECTRUM_HALF_WINDOW_LINEWIDTHS * omega2c / params.mode2.q;
    params.sweep = SweepParams {
        variable: SweepVariable::Omega2,
        min: omega2c - half,
        max: omega2c + half,
        points: preset::SPECTRUM_POINTS,
        log: false,
        field_v_per_um: preset::SPECTRUM_FIELD_V_PER_UM,
    };
    params
}

pub fn reproduce_fig3a() -> Result<SweepResult> {
    run_sweep(&ScenarioConfig::from_params(fig3a_params())?)
}

pub fn reproduce_fig3b() -> Result<SweepResult> {
    run_sweep(&ScenarioConfig::from_params(fig3b_params())?)
}
