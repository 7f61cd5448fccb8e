use std::fmt::Write as _;
use std::path::Path;

use super::config::OutputFormat;
use super::sweep::{SweepResult, SweepRows};
use crate::error::{Error, Result};

pub const FIELD_COLUMNS: [&str; 8] = [
    "field_V_per_um",
    "omega_eff_over_2pi_Hz",
    "gamma_opse_over_2pi_Hz",
    "gamma_tpste_over_2pi_Hz",
    "gamma_tpa_cavity_per_s",
    "tpse_spectral_density",
    "enhancement_tpse",
    "enhancement_tpa",
];

pub const SPECTRUM_COLUMNS: [&str; 6] = [
    "omega2_rad_per_s",
    "wavelength2_nm",
    "tpse_density_cavity",
    "tpse_density_bulk",
    "power_cavity_rel",
    "power_bulk_rel",
];

/// 17 significant digits, enough to recover every f64 exactly.
fn num(x: f64) -> String {
    format!("{x:.16e}")
}

fn push_row(out: &mut String, values: &[f64]) {
    let line = values.iter().map(|&v| num(v)).collect::<Vec<_>>().join(",");
    let _ = writeln!(out, "{line}");
}

pub fn to_csv(result: &SweepResult) -> String {
    let mut out = String::new();
    match &result.rows {
        SweepRows::Field(rows) => {
            let _ = writeln!(out, "{}", FIELD_COLUMNS.join(","));
            for r in rows {
                push_row(
                    &mut out,
                    &[
                        r.field_strength * 1e-6,
                        r.omega_eff_over_2pi,
                        r.gamma_opse_over_2pi,
                        r.gamma_tpste_over_2pi,
                        r.gamma_tpa_cavity,
                        r.tpse_spectral_density,
                        r.enhancement_tpse,
                        r.enhancement_tpa,
                    ],
                );
            }
        }
        SweepRows::Spectrum(rows) => {
            let _ = writeln!(out, "{}", SPECTRUM_COLUMNS.join(","));
            for r in rows {
                push_row(
                    &mut out,
                    &[
                        r.omega2,
                        r.wavelength2_nm,
                        r.density_cavity,
                        r.density_bulk,
                        r.power_cavity_rel,
                        r.power_bulk_rel,
                    ],
                );
            }
        }
    }
    out
}

/// Pretty JSON of the whole result. Floats use the shortest representation
/// that parses back to the same value.
pub fn to_json(result: &SweepResult) -> Result<String> {
    let mut s = serde_json::to_string_pretty(result).map_err(|e| Error::Serialize(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

pub fn from_json(text: &str) -> Result<SweepResult> {
    serde_json::from_str(text).map_err(|e| Error::Serialize(e.to_string()))
}

pub fn render(result: &SweepResult, format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::Csv => Ok(to_csv(result)),
        OutputFormat::Json => to_json(result),
    }
}

pub fn write_output(result: &SweepResult, format: OutputFormat, path: &Path) -> Result<()> {
    let text = render(result, format)?;
    std::fs::write(path, text).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}
