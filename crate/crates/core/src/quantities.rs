//! Dimension-tagged scalars and physical constants.
//!
//! Angular frequency in rad/s is the canonical frequency unit. Wavelengths
//! in nm and energies in eV only appear at I/O boundaries and are converted
//! here.

use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Reduced Planck constant, J s.
pub const HBAR: f64 = 1.054_571_817e-34;
/// Vacuum permittivity, F/m.
pub const EPSILON_0: f64 = 8.854_187_812_8e-12;
/// Speed of light in vacuum, m/s.
pub const C: f64 = 299_792_458.0;
/// Elementary charge, C.
pub const E_CHARGE: f64 = 1.602_176_634e-19;
/// Electron rest mass, kg.
pub const M_ELECTRON: f64 = 9.109_383_701_5e-31;

/// A set of physical constants. All formulas in this crate read
/// [`CODATA_2018`]; the struct exists so output metadata can name the set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constants {
    pub hbar: f64,
    pub epsilon_0: f64,
    pub c: f64,
    pub e: f64,
    pub m0: f64,
    pub name: &'static str,
}

pub const CODATA_2018: Constants = Constants {
    hbar: HBAR,
    epsilon_0: EPSILON_0,
    c: C,
    e: E_CHARGE,
    m0: M_ELECTRON,
    name: "CODATA 2018",
};

/// Angular frequency in rad/s.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AngularFrequency(f64);

impl AngularFrequency {
    pub const ZERO: AngularFrequency = AngularFrequency(0.0);

    pub fn new(rad_per_s: f64) -> Result<Self> {
        if rad_per_s.is_finite() && rad_per_s >= 0.0 {
            Ok(AngularFrequency(rad_per_s))
        } else {
            Err(Error::domain("angular frequency", rad_per_s, "must be finite and >= 0"))
        }
    }

    /// Frequency of a photon with free-space wavelength `lambda`.
    pub fn from_wavelength(lambda: Wavelength) -> Self {
        AngularFrequency(2.0 * PI * C / lambda.meters())
    }

    /// `E / hbar` for an energy given in eV.
    pub fn from_energy_ev(ev: f64) -> Result<Self> {
        if !(ev.is_finite() && ev >= 0.0) {
            return Err(Error::domain("energy", ev, "must be finite and >= 0 eV"));
        }
        Ok(AngularFrequency(ev * E_CHARGE / HBAR))
    }

    pub fn from_energy_mev(mev: f64) -> Result<Self> {
        Self::from_energy_ev(mev * 1e-3)
    }

    #[inline]
    pub fn rad_per_s(self) -> f64 {
        self.0
    }

    /// Cycle frequency `omega / 2 pi` in Hz.
    pub fn hertz(self) -> f64 {
        self.0 / (2.0 * PI)
    }

    /// Photon energy in J.
    pub fn energy_joules(self) -> f64 {
        HBAR * self.0
    }

    /// Free-space wavelength. Fails for zero frequency.
    pub fn to_wavelength(self) -> Result<Wavelength> {
        if self.0 > 0.0 {
            Ok(Wavelength(2.0 * PI * C / self.0))
        } else {
            Err(Error::domain("angular frequency", self.0, "zero frequency has no wavelength"))
        }
    }
}

impl fmt::Display for AngularFrequency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:e} rad/s", self.0)
    }
}

/// Free-space wavelength in meters.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Wavelength(f64);

impl Wavelength {
    pub fn new(meters: f64) -> Result<Self> {
        if meters.is_finite() && meters > 0.0 {
            Ok(Wavelength(meters))
        } else {
            Err(Error::domain("wavelength", meters, "must be finite and > 0"))
        }
    }

    pub fn from_nm(nm: f64) -> Result<Self> {
        Self::new(nm * 1e-9)
    }

    #[inline]
    pub fn meters(self) -> f64 {
        self.0
    }

    pub fn nm(self) -> f64 {
        self.0 * 1e9
    }

    /// Cubic wavelength inside a medium of index `n`, `(lambda / n)^3`.
    pub fn cubic_in_medium(self, n: f64) -> f64 {
        (self.0 / n).powi(3)
    }
}

/// Checked conversion `omega = 2 pi c / lambda` for a wavelength in meters.
pub fn wavelength_to_angular_frequency(lambda_m: f64) -> Result<AngularFrequency> {
    Ok(AngularFrequency::from_wavelength(Wavelength::new(lambda_m)?))
}

/// Checked conversion `omega = E / hbar` for an energy in eV.
pub fn energy_to_angular_frequency(ev: f64) -> Result<AngularFrequency> {
    AngularFrequency::from_energy_ev(ev)
}

/// Magnitude of a transition dipole moment in C m.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DipoleMoment(f64);

impl DipoleMoment {
    pub fn new(coulomb_meters: f64) -> Result<Self> {
        if coulomb_meters.is_finite() && coulomb_meters >= 0.0 {
            Ok(DipoleMoment(coulomb_meters))
        } else {
            Err(Error::domain("dipole moment", coulomb_meters, "must be finite and >= 0"))
        }
    }

    /// `e * length`.
    pub fn from_length(meters: f64) -> Result<Self> {
        Self::new(E_CHARGE * meters)
    }

    #[inline]
    pub fn coulomb_meters(self) -> f64 {
        self.0
    }
}

/// Optical power in W.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Power(f64);

impl Power {
    pub fn new(watts: f64) -> Result<Self> {
        if watts.is_finite() && watts >= 0.0 {
            Ok(Power(watts))
        } else {
            Err(Error::domain("power", watts, "must be finite and >= 0"))
        }
    }

    pub fn from_microwatts(uw: f64) -> Result<Self> {
        Self::new(uw * 1e-6)
    }

    #[inline]
    pub fn watts(self) -> f64 {
        self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn wavelength_conversions() {
        // 2 pi c / lambda evaluated at 40 digits
        let w = wavelength_to_angular_frequency(926e-9).unwrap();
        assert_relative_eq!(w.rad_per_s(), 2.034_180_958_216_904_2e15, max_relative = 1e-14);
        let w = wavelength_to_angular_frequency(2300e-9).unwrap();
        assert_relative_eq!(w.rad_per_s(), 8.189_789_423_081_971e14, max_relative = 1e-14);
    }

    #[test]
    fn wavelength_round_trip() {
        for nm in [300.0, 926.0, 1550.0, 2300.0, 1e5] {
            let lambda = Wavelength::from_nm(nm).unwrap();
            let back = AngularFrequency::from_wavelength(lambda).to_wavelength().unwrap();
            assert_relative_eq!(back.meters(), lambda.meters(), max_relative = 1e-12);
        }
    }

    #[test]
    fn energy_conversions() {
        let w = energy_to_angular_frequency(12e-3).unwrap();
        assert_relative_eq!(w.rad_per_s(), 1.823_120_938_571_412_6e13, max_relative = 1e-14);
        let w = energy_to_angular_frequency(6e-3).unwrap();
        assert_relative_eq!(w.rad_per_s(), 9.115_604_692_857_063e12, max_relative = 1e-14);
        assert_eq!(energy_to_angular_frequency(0.0).unwrap(), AngularFrequency::ZERO);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(wavelength_to_angular_frequency(0.0).is_err());
        assert!(wavelength_to_angular_frequency(-1e-9).is_err());
        assert!(wavelength_to_angular_frequency(f64::NAN).is_err());
        assert!(energy_to_angular_frequency(-1e-3).is_err());
        assert!(AngularFrequency::new(-1.0).is_err());
        assert!(AngularFrequency::ZERO.to_wavelength().is_err());
        assert!(DipoleMoment::new(-1e-30).is_err());
        assert!(Power::new(f64::INFINITY).is_err());
    }

    proptest::proptest! {
        #[test]
        fn conversions_are_monotone_bijections(a in 1e-9f64..1e-3, b in 1e-9f64..1e-3) {
            let wa = wavelength_to_angular_frequency(a).unwrap();
            let wb = wavelength_to_angular_frequency(b).unwrap();
            if a < b {
                proptest::prop_assert!(wa > wb);
            }
            let back = wa.to_wavelength().unwrap().meters();
            proptest::prop_assert!((back - a).abs() <= 1e-12 * a);
        }
    }
}
