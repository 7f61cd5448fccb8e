//! One- and two-photon transition rates in bulk and in single- and
//! double-mode cavities.
//!
//! Two-photon rates share one structure: `(pi/2) * B1 * B2 * M12^2`, where
//! each photon contributes a bracket `B`. A spontaneously emitted photon
//! contributes its density of states (`n w^3 / 3 pi^2 hbar eps0 c^3` in bulk,
//! `2 Q phi / pi hbar n^2 eps0 V` in a cavity). A driven photon contributes
//! `N hbar w / (2 hbar^2 n^2 eps0 V)`, with the mean photon number `N` set by
//! the drive power.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::cavity::{lorentzian_mismatch, purcell_factor_at, BulkHost, CavityMode};
use crate::error::{Error, Result};
use crate::qd_stark::{
    dipole_ss, m12, Direction, IntermediateState, LateralField, Overlaps, QuantumDotModel,
};
use crate::quadrature::{trapezoid_doubling, GridSpec, Integral};
use crate::quantities::{AngularFrequency, DipoleMoment, Power, C, EPSILON_0, HBAR};

/// A classical laser drive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DriveField {
    pub omega: AngularFrequency,
    pub power: Power,
    /// Beam spot area in m^2, used when the drive couples to the bulk host.
    /// Cavity coupling is taken from the mode's `eta`.
    pub spot_area: f64,
}

impl DriveField {
    pub fn new(omega: AngularFrequency, power: Power, spot_area: f64) -> Result<Self> {
        if !(omega.rad_per_s() > 0.0) {
            return Err(Error::domain("drive frequency", omega.rad_per_s(), "must be > 0"));
        }
        if !(spot_area.is_finite() && spot_area > 0.0) {
            return Err(Error::domain("spot area", spot_area, "must be > 0"));
        }
        Ok(DriveField {
            omega,
            power,
            spot_area,
        })
    }

    pub fn with_power(self, power: Power) -> Self {
        DriveField { power, ..self }
    }
}

/// FWHM of the dot transition in rad/s; stands in for the energy-conserving
/// delta function of the two-photon golden rule.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Linewidth {
    pub gamma_d: f64,
}

impl Linewidth {
    pub fn new(gamma_d: f64) -> Result<Self> {
        if gamma_d.is_finite() && gamma_d > 0.0 {
            Ok(Linewidth { gamma_d })
        } else {
            Err(Error::domain("linewidth", gamma_d, "must be > 0"))
        }
    }

    /// Unit-area Lorentzian of FWHM `gamma_d`, per rad/s.
    pub fn lineshape(&self, detuning: f64) -> f64 {
        let half = 0.5 * self.gamma_d;
        (half / PI) / (detuning * detuning + half * half)
    }
}

/// Where the two spontaneously emitted photons go.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Environment {
    Bulk,
    /// Photon 1 into a cavity mode, photon 2 into the bulk host.
    SingleMode { mode1: CavityMode },
    DoubleMode { mode1: CavityMode, mode2: CavityMode },
}

/// One photon leg of a quantized two-photon amplitude.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuantizedLeg {
    pub omega: AngularFrequency,
    /// Mean photon number already in the mode.
    pub photons: f64,
    /// Mode volume, m^3.
    pub volume: f64,
    pub psi: f64,
}

fn occupation(photons: f64, direction: Direction) -> f64 {
    match direction {
        Direction::Emission => photons + 1.0,
        Direction::Absorption => photons,
    }
}

/// Single-photon Rabi rate with a quantized field,
/// `(d / hbar) sqrt(occ hbar w / (2 n^2 eps0 V)) psi` where `occ` is `N + 1`
/// for emission and `N` for absorption.
pub fn quantized_rabi_rate(
    d: DipoleMoment,
    omega: AngularFrequency,
    photons: f64,
    volume: f64,
    host: BulkHost,
    psi: f64,
    direction: Direction,
) -> f64 {
    let occ = occupation(photons, direction);
    if occ == 0.0 {
        return 0.0;
    }
    let field = (occ * HBAR * omega.rad_per_s() / (2.0 * host.n * host.n * EPSILON_0 * volume)).sqrt();
    d.coulomb_meters() / HBAR * field * psi
}

/// Two-photon effective Rabi rate
/// `|sum_k [W_gk,1 W_ke,2 / D1 + W_gk,2 W_ke,1 / D2]|` in rad/s.
pub fn effective_rabi(
    model: &QuantumDotModel,
    field: LateralField,
    states: &[IntermediateState],
    legs: [QuantizedLeg; 2],
    direction: Direction,
) -> Result<f64> {
    let [a, b] = legs;
    let detunings = crate::qd_stark::intermediate_detunings(a.omega, b.omega, model, states, direction)?;
    let host = model.host;
    let rabi = |d: DipoleMoment, leg: &QuantizedLeg| {
        quantized_rabi_rate(d, leg.omega, leg.photons, leg.volume, host, leg.psi, direction)
    };
    let sum: f64 = detunings
        .iter()
        .map(|det| {
            let (d_gk, d_ke) = det.state.dipoles(field, model);
            let (d1, d2) = det.denominators();
            rabi(d_gk, &a) * rabi(d_ke, &b) / d1 + rabi(d_gk, &b) * rabi(d_ke, &a) / d2
        })
        .sum();
    Ok(sum.abs())
}

/// `2 pi |W_eff|^2 L(detuning)` with `L` the lineshape of `lw`.
pub fn on_shell_two_photon_rate(omega_eff: f64, detuning: f64, lw: Linewidth) -> f64 {
    2.0 * PI * omega_eff * omega_eff * lw.lineshape(detuning)
}

fn spontaneous_bulk_bracket(omega: f64, host: BulkHost) -> f64 {
    host.n * omega.powi(3) / (3.0 * PI * PI * HBAR * EPSILON_0 * C.powi(3))
}

fn spontaneous_cavity_bracket(omega: AngularFrequency, mode: &CavityMode, host: BulkHost) -> f64 {
    2.0 * mode.q * lorentzian_mismatch(omega, mode) / (PI * HBAR * host.n * host.n * EPSILON_0 * mode.volume)
}

/// Bracket of a driven photon from its energy content `N hbar w`.
fn driven_bracket(photon_energy: f64, volume: f64, host: BulkHost) -> f64 {
    photon_energy / (2.0 * HBAR * HBAR * host.n * host.n * EPSILON_0 * volume)
}

fn complementary_photon(omega2: AngularFrequency, model: &QuantumDotModel) -> Result<AngularFrequency> {
    let w2 = omega2.rad_per_s();
    let wd = model.omega_d.rad_per_s();
    if !(w2 > 0.0 && w2 < wd) {
        return Err(Error::domain("photon 2 frequency", w2, "must lie strictly between 0 and the transition frequency"));
    }
    AngularFrequency::new(wd - w2)
}

fn emission_m12(
    omega1: AngularFrequency,
    omega2: AngularFrequency,
    field: LateralField,
    model: &QuantumDotModel,
    states: &[IntermediateState],
    psi: Overlaps,
) -> Result<f64> {
    m12(omega1, omega2, field, model, states, psi, Direction::Emission)
}

/// Two-photon spontaneous emission spectrum per unit `w2` in bulk, with
/// `w1 = w_d - w2` and perfect overlap.
pub fn tpse_spectral_density_bulk(
    omega2: AngularFrequency,
    model: &QuantumDotModel,
    states: &[IntermediateState],
    field: LateralField,
) -> Result<f64> {
    let omega1 = complementary_photon(omega2, model)?;
    let m = emission_m12(omega1, omega2, field, model, states, Overlaps::UNIFORM)?;
    Ok(0.5 * PI
        * spontaneous_bulk_bracket(omega1.rad_per_s(), model.host)
        * spontaneous_bulk_bracket(omega2.rad_per_s(), model.host)
        * m
        * m)
}

/// TPSE spectrum with photon 1 in `mode1` and photon 2 in `mode2`.
pub fn tpse_spectral_density_cavity(
    omega2: AngularFrequency,
    model: &QuantumDotModel,
    states: &[IntermediateState],
    field: LateralField,
    mode1: &CavityMode,
    mode2: &CavityMode,
) -> Result<f64> {
    let omega1 = complementary_photon(omega2, model)?;
    let psi = Overlaps::from_modes(mode1.psi, mode2.psi);
    let m = emission_m12(omega1, omega2, field, model, states, psi)?;
    Ok(0.5 * PI
        * spontaneous_cavity_bracket(omega1, mode1, model.host)
        * spontaneous_cavity_bracket(omega2, mode2, model.host)
        * m
        * m)
}

/// TPSE spectrum with photon 1 in `mode1` and photon 2 into the bulk host.
pub fn tpse_spectral_density_single_mode(
    omega2: AngularFrequency,
    model: &QuantumDotModel,
    states: &[IntermediateState],
    field: LateralField,
    mode1: &CavityMode,
) -> Result<f64> {
    let omega1 = complementary_photon(omega2, model)?;
    let psi = Overlaps::from_modes(mode1.psi, 1.0);
    let m = emission_m12(omega1, omega2, field, model, states, psi)?;
    Ok(0.5 * PI
        * spontaneous_cavity_bracket(omega1, mode1, model.host)
        * spontaneous_bulk_bracket(omega2.rad_per_s(), model.host)
        * m
        * m)
}

pub fn tpse_spectral_density(
    omega2: AngularFrequency,
    model: &QuantumDotModel,
    states: &[IntermediateState],
    field: LateralField,
    environment: &Environment,
) -> Result<f64> {
    match environment {
        Environment::Bulk => tpse_spectral_density_bulk(omega2, model, states, field),
        Environment::SingleMode { mode1 } => tpse_spectral_density_single_mode(omega2, model, states, field, mode1),
        Environment::DoubleMode { mode1, mode2 } => {
            tpse_spectral_density_cavity(omega2, model, states, field, mode1, mode2)
        }
    }
}

/// Total TPSE rate: the spectrum integrated over `w2` in `(0, w_d)`. Both
/// ends of the interval contribute nothing (the missing photon has no
/// density of states there).
pub fn tpse_total(
    model: &QuantumDotModel,
    states: &[IntermediateState],
    field: LateralField,
    environment: &Environment,
    grid: GridSpec,
) -> Result<Integral> {
    let wd = model.omega_d.rad_per_s();
    // detuning errors cannot occur inside (0, w_d) for states above w_d; any
    // that do are surfaced by probing the midpoint first
    tpse_spectral_density(AngularFrequency::new(0.5 * wd)?, model, states, field, environment)?;
    let integrand = |w2: f64| {
        if w2 <= 0.0 || w2 >= wd {
            return 0.0;
        }
        AngularFrequency::new(w2)
            .and_then(|w| tpse_spectral_density(w, model, states, field, environment))
            .unwrap_or(f64::NAN)
    };
    let integral = trapezoid_doubling(integrand, 0.0, wd, grid)?;
    if !integral.value.is_finite() {
        return Err(Error::domain("tpse integrand", integral.value, "non-finite value on the grid"));
    }
    Ok(integral)
}

/// Two-photon stimulated emission: photon 2 is stimulated by `drive2`
/// through `mode2`, photon 1 is emitted spontaneously into `mode1`.
pub fn tpste_rate(
    model: &QuantumDotModel,
    states: &[IntermediateState],
    field: LateralField,
    mode1: &CavityMode,
    mode2: &CavityMode,
    drive2: &DriveField,
) -> Result<f64> {
    let omega2 = drive2.omega;
    let omega1 = complementary_photon(omega2, model)?;
    let psi = Overlaps::from_modes(mode1.psi, mode2.psi);
    let m = emission_m12(omega1, omega2, field, model, states, psi)?;
    let stimulated = driven_bracket(photon_energy_cavity(drive2, mode2), mode2.volume, model.host);
    Ok(0.5 * PI * spontaneous_cavity_bracket(omega1, mode1, model.host) * stimulated * m * m)
}

fn absorption_m12(
    drive1: &DriveField,
    drive2: &DriveField,
    model: &QuantumDotModel,
    states: &[IntermediateState],
    field: LateralField,
    psi: Overlaps,
) -> Result<f64> {
    m12(drive1.omega, drive2.omega, field, model, states, psi, Direction::Absorption)
}

fn two_photon_detuning(model: &QuantumDotModel, drive1: &DriveField, drive2: &DriveField) -> f64 {
    model.omega_d.rad_per_s() - drive1.omega.rad_per_s() - drive2.omega.rad_per_s()
}

/// Two-photon absorption of two free-space beams focused into the bulk host.
///
/// Each beam contributes `P / (4 hbar^2 n eps0 c A)`, which is the driven
/// bracket for the bulk photon number of [`photon_number_bulk`].
pub fn tpa_rate_bulk(
    drive1: &DriveField,
    drive2: &DriveField,
    model: &QuantumDotModel,
    states: &[IntermediateState],
    field: LateralField,
    lw: Linewidth,
) -> Result<f64> {
    let m = absorption_m12(drive1, drive2, model, states, field, Overlaps::UNIFORM)?;
    let bracket = |d: &DriveField| {
        // N hbar w = P V n / (2 c A); V cancels against the bracket
        d.power.watts() * model.host.n / (2.0 * C * d.spot_area) / (2.0 * HBAR * HBAR * model.host.n.powi(2) * EPSILON_0)
    };
    Ok(0.5 * PI * bracket(drive1) * bracket(drive2) * m * m * lw.lineshape(two_photon_detuning(model, drive1, drive2)))
}

/// Two-photon absorption with each beam coupled into its cavity mode.
pub fn tpa_rate_cavity(
    drive1: &DriveField,
    drive2: &DriveField,
    mode1: &CavityMode,
    mode2: &CavityMode,
    model: &QuantumDotModel,
    states: &[IntermediateState],
    field: LateralField,
    lw: Linewidth,
) -> Result<f64> {
    let psi = Overlaps::from_modes(mode1.psi, mode2.psi);
    let m = absorption_m12(drive1, drive2, model, states, field, psi)?;
    let b1 = driven_bracket(photon_energy_cavity(drive1, mode1), mode1.volume, model.host);
    let b2 = driven_bracket(photon_energy_cavity(drive2, mode2), mode2.volume, model.host);
    Ok(0.5 * PI * b1 * b2 * m * m * lw.lineshape(two_photon_detuning(model, drive1, drive2)))
}

/// Mean photon number of a beam of spot area `A` in a volume `V` of the host,
/// from `N hbar w = P V n / (2 c A)`.
pub fn photon_number_bulk(drive: &DriveField, volume: f64, host: BulkHost) -> f64 {
    drive.power.watts() * volume * host.n / (2.0 * C * drive.spot_area * drive.omega.energy_joules())
}

fn photon_energy_cavity(drive: &DriveField, mode: &CavityMode) -> f64 {
    mode.eta * drive.power.watts() * mode.q * lorentzian_mismatch(drive.omega, mode) / drive.omega.rad_per_s()
}

/// Mean intracavity photon number, `N hbar w = eta P Q phi / w`.
pub fn photon_number_cavity(drive: &DriveField, mode: &CavityMode) -> f64 {
    photon_energy_cavity(drive, mode) / drive.omega.energy_joules()
}

/// Cavity-over-bulk TPA enhancement of one beam,
/// `G = eta Q phi A lambda / (pi V n)`.
pub fn tpa_enhancement_factor(drive: &DriveField, mode: &CavityMode, host: BulkHost) -> Result<f64> {
    let lambda = drive.omega.to_wavelength()?.meters();
    Ok(mode.eta * mode.q * lorentzian_mismatch(drive.omega, mode) * drive.spot_area * lambda
        / (PI * mode.volume * host.n))
}

/// One-photon spontaneous emission rate of the s-s transition,
/// `n w_d^3 |d_ge|^2 / (3 pi hbar eps0 c^3)`, optionally Purcell-enhanced by a
/// cavity mode at the emission wavelength.
pub fn opse_rate(model: &QuantumDotModel, field: LateralField, emission_mode: Option<&CavityMode>) -> Result<f64> {
    let d = dipole_ss(field, model).coulomb_meters();
    let wd = model.omega_d.rad_per_s();
    let bulk = model.host.n * wd.powi(3) * d * d / (3.0 * PI * HBAR * EPSILON_0 * C.powi(3));
    match emission_mode {
        None => Ok(bulk),
        Some(mode) => Ok(bulk * purcell_factor_at(model.omega_d, model.host, mode)?),
    }
}

/// Everything needed to evaluate one field point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Setup {
    pub dot: QuantumDotModel,
    pub states: Vec<IntermediateState>,
    pub mode1: CavityMode,
    pub mode2: CavityMode,
    /// Optional mode at the s-s emission wavelength.
    pub emission_mode: Option<CavityMode>,
    /// TPA beams into mode 1 and mode 2.
    pub tpa_drives: [DriveField; 2],
    /// TPSTE beam into mode 2.
    pub stimulation: DriveField,
    pub linewidth: Linewidth,
}

/// The rates of one evaluation point. Frequencies are cycle rates (Hz),
/// decay rates per second.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RateReport {
    /// V/m.
    pub field_strength: f64,
    pub omega_eff_over_2pi: f64,
    pub gamma_opse_over_2pi: f64,
    pub gamma_tpste_over_2pi: f64,
    /// Cavity TPA rate with the regularized delta function, 1/s.
    pub gamma_tpa_cavity: f64,
    /// Cavity TPSE spectrum at the stimulation frequency.
    pub tpse_spectral_density: f64,
    /// `F1 F2` at the TPSE photon pair.
    pub enhancement_tpse: f64,
    /// `G1 G2` at the TPA drive frequencies.
    pub enhancement_tpa: f64,
}

impl Setup {
    pub fn tpa_legs(&self) -> [QuantizedLeg; 2] {
        let [d1, d2] = &self.tpa_drives;
        [
            QuantizedLeg {
                omega: d1.omega,
                photons: photon_number_cavity(d1, &self.mode1),
                volume: self.mode1.volume,
                psi: self.mode1.psi,
            },
            QuantizedLeg {
                omega: d2.omega,
                photons: photon_number_cavity(d2, &self.mode2),
                volume: self.mode2.volume,
                psi: self.mode2.psi,
            },
        ]
    }

    /// Purcell product `F1 F2` for photon 2 at `omega2`, photon 1 at `w_d - w2`.
    pub fn purcell_product(&self, omega2: AngularFrequency) -> Result<f64> {
        let omega1 = complementary_photon(omega2, &self.dot)?;
        Ok(purcell_factor_at(omega1, self.dot.host, &self.mode1)?
            * purcell_factor_at(omega2, self.dot.host, &self.mode2)?)
    }

    pub fn tpa_enhancement(&self) -> Result<f64> {
        let [d1, d2] = &self.tpa_drives;
        Ok(tpa_enhancement_factor(d1, &self.mode1, self.dot.host)? * tpa_enhancement_factor(d2, &self.mode2, self.dot.host)?)
    }
}

/// Evaluate every field-dependent rate of `setup` at one field strength.
pub fn evaluate_point(field: LateralField, setup: &Setup) -> Result<RateReport> {
    let dot = &setup.dot;
    let states = &setup.states;
    let [d1, d2] = &setup.tpa_drives;
    let omega_eff = effective_rabi(dot, field, states, setup.tpa_legs(), Direction::Absorption)?;
    let opse = opse_rate(dot, field, setup.emission_mode.as_ref())?;
    let tpste = tpste_rate(dot, states, field, &setup.mode1, &setup.mode2, &setup.stimulation)?;
    let tpa = tpa_rate_cavity(d1, d2, &setup.mode1, &setup.mode2, dot, states, field, setup.linewidth)?;
    let density = tpse_spectral_density_cavity(setup.stimulation.omega, dot, states, field, &setup.mode1, &setup.mode2)?;
    Ok(RateReport {
        field_strength: field.volts_per_meter(),
        omega_eff_over_2pi: omega_eff / (2.0 * PI),
        gamma_opse_over_2pi: opse / (2.0 * PI),
        gamma_tpste_over_2pi: tpste / (2.0 * PI),
        gamma_tpa_cavity: tpa,
        tpse_spectral_density: density,
        enhancement_tpse: setup.purcell_product(setup.stimulation.omega)?,
        enhancement_tpa: setup.tpa_enhancement()?,
    })
}
