//! Photon densities of states in bulk and in a single Lorentzian cavity
//! mode, and the Purcell factor that relates them.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quantities::{AngularFrequency, Wavelength, C};

/// Homogeneous host medium.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BulkHost {
    /// Refractive index.
    pub n: f64,
}

impl BulkHost {
    pub fn new(n: f64) -> Result<Self> {
        if n.is_finite() && n >= 1.0 {
            Ok(BulkHost { n })
        } else {
            Err(Error::domain("refractive index", n, "must be >= 1"))
        }
    }
}

/// One cavity resonance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CavityMode {
    pub omega_c: AngularFrequency,
    /// Quality factor.
    pub q: f64,
    /// Mode volume, m^3.
    pub volume: f64,
    /// Fraction of an external drive coupled into the mode.
    pub eta: f64,
    /// Emitter-field overlap: field ratio at the emitter times the
    /// polarization projection of the dipole.
    pub psi: f64,
}

impl CavityMode {
    pub fn new(omega_c: AngularFrequency, q: f64, volume: f64, eta: f64, psi: f64) -> Result<Self> {
        if !(omega_c.rad_per_s() > 0.0) {
            return Err(Error::domain("cavity resonance", omega_c.rad_per_s(), "must be > 0"));
        }
        if !(q.is_finite() && q > 0.0) {
            return Err(Error::domain("quality factor", q, "must be > 0"));
        }
        if !(volume.is_finite() && volume > 0.0) {
            return Err(Error::domain("mode volume", volume, "must be > 0"));
        }
        if !(0.0..=1.0).contains(&eta) {
            return Err(Error::domain("coupling efficiency", eta, "must lie in [0, 1]"));
        }
        if !(0.0..=1.0).contains(&psi) {
            return Err(Error::domain("mode overlap", psi, "must lie in [0, 1]"));
        }
        Ok(CavityMode {
            omega_c,
            q,
            volume,
            eta,
            psi,
        })
    }

    /// Mode resonant at `lambda` with volume `cubic_wavelengths * (lambda/n)^3`,
    /// perfect overlap.
    pub fn at_wavelength(
        lambda: Wavelength,
        host: BulkHost,
        q: f64,
        cubic_wavelengths: f64,
        eta: f64,
    ) -> Result<Self> {
        Self::new(
            AngularFrequency::from_wavelength(lambda),
            q,
            cubic_wavelengths * lambda.cubic_in_medium(host.n),
            eta,
            1.0,
        )
    }

    /// Resonance wavelength in vacuum.
    pub fn wavelength(&self) -> Wavelength {
        // omega_c > 0 is a constructor invariant
        self.omega_c.to_wavelength().expect("positive resonance")
    }

    /// Linewidth `omega_c / Q`.
    pub fn linewidth(&self) -> f64 {
        self.omega_c.rad_per_s() / self.q
    }
}

/// Lorentzian frequency-mismatch factor
/// `(w/wc) / (1 + 4 Q^2 (w/wc - 1)^2)`, equal to 1 on resonance.
pub fn lorentzian_mismatch(omega: AngularFrequency, mode: &CavityMode) -> f64 {
    let r = omega.rad_per_s() / mode.omega_c.rad_per_s();
    let d = r - 1.0;
    r / (1.0 + 4.0 * mode.q * mode.q * d * d)
}

/// Bulk photon density of states `V n^3 w^2 / (3 pi^2 c^3)` in states per rad/s.
pub fn bulk_mode_density(omega: AngularFrequency, host: BulkHost, volume: f64) -> f64 {
    let w = omega.rad_per_s();
    volume * host.n.powi(3) * w * w / (3.0 * PI * PI * C.powi(3))
}

/// `w rho(w) = 2 Q phi(w) / pi` for a single cavity mode.
pub fn cavity_mode_density_times_omega(omega: AngularFrequency, mode: &CavityMode) -> f64 {
    2.0 * mode.q * lorentzian_mismatch(omega, mode) / PI
}

/// Purcell factor `(3 / 4 pi^2) (lambda/n)^3 Q phi(w) / V`.
///
/// `lambda` is the free-space wavelength of the emitted photon and `omega`
/// the frequency at which the lineshape is evaluated; they normally
/// describe the same photon (see [`purcell_factor_at`]).
pub fn purcell_factor(
    lambda: Wavelength,
    host: BulkHost,
    mode: &CavityMode,
    omega: AngularFrequency,
) -> f64 {
    3.0 / (4.0 * PI * PI) * lambda.cubic_in_medium(host.n) * mode.q * lorentzian_mismatch(omega, mode)
        / mode.volume
}

/// Purcell factor for a photon of frequency `omega`.
pub fn purcell_factor_at(omega: AngularFrequency, host: BulkHost, mode: &CavityMode) -> Result<f64> {
    Ok(purcell_factor(omega.to_wavelength()?, host, mode, omega))
}
