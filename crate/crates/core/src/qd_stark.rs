//! Quantum-dot transition dipoles under a lateral DC electric field.
//!
//! The dot is a finite well along the growth axis and a 2D harmonic
//! oscillator in the plane. A lateral field pulls the electron and hole
//! envelopes apart by `dx`, which shrinks the s-s overlap and opens the
//! parity-forbidden s-p channels that carry the two-photon s-s transition.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cavity::BulkHost;
use crate::error::{Error, Result};
use crate::quantities::{AngularFrequency, DipoleMoment, E_CHARGE, HBAR};

/// Lateral DC field strength in V/m.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LateralField(f64);

impl LateralField {
    pub const ZERO: LateralField = LateralField(0.0);

    pub fn new(volts_per_meter: f64) -> Result<Self> {
        if volts_per_meter.is_finite() && volts_per_meter >= 0.0 {
            Ok(LateralField(volts_per_meter))
        } else {
            Err(Error::domain("lateral field", volts_per_meter, "must be finite and >= 0"))
        }
    }

    pub fn from_volts_per_um(v: f64) -> Result<Self> {
        Self::new(v * 1e6)
    }

    #[inline]
    pub fn volts_per_meter(self) -> f64 {
        self.0
    }

    pub fn volts_per_um(self) -> f64 {
        self.0 * 1e-6
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuantumDotModel {
    /// s-shell interband transition frequency.
    pub omega_d: AngularFrequency,
    /// Electron effective mass, kg.
    pub m_e_star: f64,
    /// Hole effective mass, kg.
    pub m_h_star: f64,
    /// Lateral confinement frequency of the electron.
    pub omega_e: AngularFrequency,
    /// Lateral confinement frequency of the hole.
    pub omega_h: AngularFrequency,
    /// Interband matrix element length, m.
    pub r_cv: f64,
    pub host: BulkHost,
    /// Smallest |detuning| accepted for a virtual intermediate state.
    pub detuning_floor: f64,
}

pub const DEFAULT_DETUNING_FLOOR: f64 = 1e9;

impl QuantumDotModel {
    pub fn new(
        omega_d: AngularFrequency,
        m_e_star: f64,
        m_h_star: f64,
        omega_e: AngularFrequency,
        omega_h: AngularFrequency,
        r_cv: f64,
        host: BulkHost,
    ) -> Result<Self> {
        let positive = |name: &'static str, v: f64| {
            if v.is_finite() && v > 0.0 {
                Ok(())
            } else {
                Err(Error::domain(name, v, "must be > 0"))
            }
        };
        positive("transition frequency", omega_d.rad_per_s())?;
        positive("electron effective mass", m_e_star)?;
        positive("hole effective mass", m_h_star)?;
        positive("electron confinement frequency", omega_e.rad_per_s())?;
        positive("hole confinement frequency", omega_h.rad_per_s())?;
        positive("interband matrix element", r_cv)?;
        Ok(QuantumDotModel {
            omega_d,
            m_e_star,
            m_h_star,
            omega_e,
            omega_h,
            r_cv,
            host,
            detuning_floor: DEFAULT_DETUNING_FLOOR,
        })
    }

    pub fn with_detuning_floor(mut self, floor: f64) -> Result<Self> {
        if !(floor.is_finite() && floor >= 0.0) {
            return Err(Error::domain("detuning floor", floor, "must be >= 0"));
        }
        self.detuning_floor = floor;
        Ok(self)
    }

    /// The two p-shell virtual states that dominate the s-s two-photon
    /// transition: conduction p one electron quantum above the excited
    /// state, valence p one hole quantum below the ground-state band edge.
    pub fn default_states(&self) -> Vec<IntermediateState> {
        let wd = self.omega_d.rad_per_s();
        vec![
            IntermediateState {
                kind: StateKind::ConductionP,
                energy_above_ground: AngularFrequency::new(wd + self.omega_e.rad_per_s())
                    .expect("positive"),
            },
            IntermediateState {
                kind: StateKind::ValenceP,
                energy_above_ground: AngularFrequency::new(wd + self.omega_h.rad_per_s())
                    .expect("positive"),
            },
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StateKind {
    ConductionP,
    ValenceP,
}

impl fmt::Display for StateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StateKind::ConductionP => f.write_str("conduction-p"),
            StateKind::ValenceP => f.write_str("valence-p"),
        }
    }
}

/// A virtual intermediate state `|k>`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IntermediateState {
    pub kind: StateKind,
    /// `omega_k - omega_g`.
    pub energy_above_ground: AngularFrequency,
}

impl IntermediateState {
    /// `(|d_gk|, |d_ke|)`. For conduction p the interband leg is g -> k and
    /// the intraband leg k -> e; valence p swaps them.
    pub fn dipoles(&self, field: LateralField, model: &QuantumDotModel) -> (DipoleMoment, DipoleMoment) {
        let l = oscillator_length(model);
        let dx = stark_displacement(field, model);
        let interband = E_CHARGE * model.r_cv * (dx / l) * gaussian_overlap(dx, l);
        let interband = DipoleMoment::new(interband).expect("nonnegative");
        let intraband = DipoleMoment::new(E_CHARGE * l).expect("nonnegative");
        match self.kind {
            StateKind::ConductionP => (interband, intraband),
            StateKind::ValenceP => (intraband, interband),
        }
    }
}

/// Which way the dot moves between ground and excited state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Absorption,
    Emission,
}

/// Envelope-function shell of a carrier.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shell {
    S,
    P,
}

impl Shell {
    /// Envelope parity: s is even, p is odd.
    pub fn is_even(self) -> bool {
        matches!(self, Shell::S)
    }
}

/// Interband selection rule at zero field. Bloch functions of the valence
/// and conduction bands have opposite parity, so one-photon transitions
/// need envelopes of equal parity and two-photon transitions need
/// envelopes of opposite parity.
pub fn interband_allowed(hole: Shell, electron: Shell, photons: u32) -> bool {
    let same_envelope_parity = hole.is_even() == electron.is_even();
    if photons % 2 == 1 {
        same_envelope_parity
    } else {
        !same_envelope_parity
    }
}

/// Oscillator length `sqrt(hbar / (2 m_e w_e))`. Under the reference
/// parameters `m_e w_e = m_h w_h`, so it is shared by electron and hole.
pub fn oscillator_length(model: &QuantumDotModel) -> f64 {
    (HBAR / (2.0 * model.m_e_star * model.omega_e.rad_per_s())).sqrt()
}

fn stark_coefficient(model: &QuantumDotModel) -> f64 {
    let we = model.omega_e.rad_per_s();
    let wh = model.omega_h.rad_per_s();
    E_CHARGE * (1.0 / (model.m_e_star * we * we) + 1.0 / (model.m_h_star * wh * wh))
}

/// Electron-hole center separation `e E [1/(m_e w_e^2) + 1/(m_h w_h^2)]`.
pub fn stark_displacement(field: LateralField, model: &QuantumDotModel) -> f64 {
    stark_coefficient(model) * field.volts_per_meter()
}

#[inline]
fn gaussian_overlap(dx: f64, l: f64) -> f64 {
    (-dx * dx / (4.0 * l * l)).exp()
}

/// s-s one-photon dipole `e r_cv exp(-dx^2 / 4 l^2)`.
pub fn dipole_ss(field: LateralField, model: &QuantumDotModel) -> DipoleMoment {
    let l = oscillator_length(model);
    let dx = stark_displacement(field, model);
    DipoleMoment::new(E_CHARGE * model.r_cv * gaussian_overlap(dx, l)).expect("nonnegative")
}

/// `d(d_ge)/dE` in C m per V/m.
pub fn dipole_ss_field_derivative(field: LateralField, model: &QuantumDotModel) -> f64 {
    let l = oscillator_length(model);
    let k = stark_coefficient(model);
    let dx = k * field.volts_per_meter();
    -dipole_ss(field, model).coulomb_meters() * dx * k / (2.0 * l * l)
}

/// `|d_gk||d_ke| = e^2 r_cv dx exp(-dx^2 / 4 l^2)`, the same for the
/// conduction-p and valence-p intermediate states. In C^2 m^2.
pub fn dipole_product_sp(field: LateralField, model: &QuantumDotModel) -> f64 {
    let l = oscillator_length(model);
    let dx = stark_displacement(field, model);
    E_CHARGE * E_CHARGE * model.r_cv * dx * gaussian_overlap(dx, l)
}

/// `d(|d_gk||d_ke|)/dE`.
pub fn dipole_product_sp_field_derivative(field: LateralField, model: &QuantumDotModel) -> f64 {
    let l = oscillator_length(model);
    let k = stark_coefficient(model);
    let dx = k * field.volts_per_meter();
    E_CHARGE * E_CHARGE * model.r_cv * k * gaussian_overlap(dx, l) * (1.0 - dx * dx / (2.0 * l * l))
}

/// Energy denominators of one intermediate state for both photons.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateDetunings {
    pub state: IntermediateState,
    pub direction: Direction,
    /// `Delta_gk,1` for absorption, `Delta_ke,1` for emission.
    pub photon1: f64,
    /// `Delta_gk,2` for absorption, `Delta_ke,2` for emission.
    pub photon2: f64,
}

impl StateDetunings {
    /// Denominators of the two time orderings in the amplitude sum. In
    /// emission `Delta_gk,1` is replaced by `Delta_ke,2` and `Delta_gk,2` by
    /// `Delta_ke,1`.
    pub fn denominators(&self) -> (f64, f64) {
        match self.direction {
            Direction::Absorption => (self.photon1, self.photon2),
            Direction::Emission => (self.photon2, self.photon1),
        }
    }
}

/// Detunings of each intermediate state with respect to the two photons.
///
/// Absorption: `Delta_gk,i = (w_k - w_g) - w_i`. Emission:
/// `Delta_ke,i = (w_k - w_e) + w_i`.
pub fn intermediate_detunings(
    omega1: AngularFrequency,
    omega2: AngularFrequency,
    model: &QuantumDotModel,
    states: &[IntermediateState],
    direction: Direction,
) -> Result<Vec<StateDetunings>> {
    if !(omega1.rad_per_s() > 0.0) {
        return Err(Error::domain("photon 1 frequency", omega1.rad_per_s(), "must be > 0"));
    }
    if !(omega2.rad_per_s() > 0.0) {
        return Err(Error::domain("photon 2 frequency", omega2.rad_per_s(), "must be > 0"));
    }
    if states.is_empty() {
        return Err(Error::domain("intermediate states", 0.0, "at least one state is required"));
    }
    let wd = model.omega_d.rad_per_s();
    states
        .iter()
        .map(|&state| {
            let wk = state.energy_above_ground.rad_per_s();
            let (photon1, photon2) = match direction {
                Direction::Absorption => (wk - omega1.rad_per_s(), wk - omega2.rad_per_s()),
                Direction::Emission => (wk - wd + omega1.rad_per_s(), wk - wd + omega2.rad_per_s()),
            };
            for d in [photon1, photon2] {
                if !(d.abs() >= model.detuning_floor) {
                    return Err(Error::Singularity {
                        state: state.kind.to_string(),
                        detuning: d,
                        floor: model.detuning_floor,
                    });
                }
            }
            Ok(StateDetunings {
                state,
                direction,
                photon1,
                photon2,
            })
        })
        .collect()
}

/// The four overlap factors `psi_gk,1`, `psi_ke,2`, `psi_gk,2`, `psi_ke,1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Overlaps {
    pub gk1: f64,
    pub ke2: f64,
    pub gk2: f64,
    pub ke1: f64,
}

impl Overlaps {
    pub const UNIFORM: Overlaps = Overlaps {
        gk1: 1.0,
        ke2: 1.0,
        gk2: 1.0,
        ke1: 1.0,
    };

    /// Both legs through a mode share that mode's scalar overlap.
    pub fn from_modes(psi1: f64, psi2: f64) -> Self {
        Overlaps {
            gk1: psi1,
            ke2: psi2,
            gk2: psi2,
            ke1: psi1,
        }
    }
}

impl Default for Overlaps {
    fn default() -> Self {
        Overlaps::UNIFORM
    }
}

/// Two-photon matrix element
/// `M12 = |sum_k |d_gk||d_ke| (psi_gk,1 psi_ke,2 / D1 + psi_gk,2 psi_ke,1 / D2)|`
/// in C^2 m^2 s.
pub fn m12(
    omega1: AngularFrequency,
    omega2: AngularFrequency,
    field: LateralField,
    model: &QuantumDotModel,
    states: &[IntermediateState],
    psi: Overlaps,
    direction: Direction,
) -> Result<f64> {
    let detunings = intermediate_detunings(omega1, omega2, model, states, direction)?;
    let product = dipole_product_sp(field, model);
    let sum: f64 = detunings
        .iter()
        .map(|d| {
            let (d1, d2) = d.denominators();
            product * (psi.gk1 * psi.ke2 / d1 + psi.gk2 * psi.ke1 / d2)
        })
        .sum();
    Ok(sum.abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantities::{Wavelength, M_ELECTRON};
    use approx::assert_relative_eq;

    fn preset() -> QuantumDotModel {
        let w1 = AngularFrequency::from_wavelength(Wavelength::from_nm(1550.0).unwrap());
        let w2 = AngularFrequency::from_wavelength(Wavelength::from_nm(2300.0).unwrap());
        QuantumDotModel::new(
            AngularFrequency::new(w1.rad_per_s() + w2.rad_per_s()).unwrap(),
            0.055 * M_ELECTRON,
            0.11 * M_ELECTRON,
            AngularFrequency::from_energy_mev(12.0).unwrap(),
            AngularFrequency::from_energy_mev(6.0).unwrap(),
            0.6e-9,
            BulkHost::new(3.4).unwrap(),
        )
        .unwrap()
    }

    fn field(v_per_um: f64) -> LateralField {
        LateralField::from_volts_per_um(v_per_um).unwrap()
    }

    fn photons() -> (AngularFrequency, AngularFrequency) {
        (
            AngularFrequency::from_wavelength(Wavelength::from_nm(1550.0).unwrap()),
            AngularFrequency::from_wavelength(Wavelength::from_nm(2300.0).unwrap()),
        )
    }

    #[test]
    fn oscillator_length_values() {
        let m = preset();
        assert_relative_eq!(oscillator_length(&m), 7.597_828_748_345_229e-9, max_relative = 1e-12);
        let lh = (HBAR / (2.0 * m.m_h_star * m.omega_h.rad_per_s())).sqrt();
        assert_relative_eq!(oscillator_length(&m), lh, max_relative = 1e-14);
        let heavy = QuantumDotModel {
            m_e_star: 4.0 * m.m_e_star,
            ..m.clone()
        };
        assert_relative_eq!(oscillator_length(&heavy), 0.5 * oscillator_length(&m), max_relative = 1e-14);
    }

    #[test]
    fn displacement_values() {
        let m = preset();
        assert_eq!(stark_displacement(LateralField::ZERO, &m), 0.0);
        assert_relative_eq!(stark_displacement(field(1.0), &m), 2.886_350_084_459_061_7e-8, max_relative = 1e-12);
        assert_relative_eq!(
            stark_displacement(field(0.6), &m),
            2.0 * stark_displacement(field(0.3), &m),
            max_relative = 1e-14
        );
    }

    #[test]
    fn ss_dipole() {
        let m = preset();
        assert_relative_eq!(dipole_ss(LateralField::ZERO, &m).coulomb_meters(), 9.613_059_804e-29, max_relative = 1e-12);

        let l = oscillator_length(&m);
        let e_at_2l = LateralField::new(2.0 * l / stark_coefficient(&m)).unwrap();
        assert_relative_eq!(
            dipole_ss(e_at_2l, &m).coulomb_meters(),
            E_CHARGE * m.r_cv * (-1.0f64).exp(),
            max_relative = 1e-13
        );

        let values: Vec<f64> = (0..100)
            .map(|i| dipole_ss(field(2.0 * i as f64 / 99.0), &m).coulomb_meters())
            .collect();
        assert!(values.windows(2).all(|w| w[1] < w[0]));
    }

    #[test]
    fn sp_product() {
        let m = preset();
        assert_eq!(dipole_product_sp(LateralField::ZERO, &m), 0.0);
        assert_relative_eq!(dipole_product_sp(field(0.75), &m), 4.381_238_526_448_958e-56, max_relative = 1e-12);

        let l = oscillator_length(&m);
        let k = stark_coefficient(&m);
        let peak_field = LateralField::new(2f64.sqrt() * l / k).unwrap();
        let peak = dipole_product_sp(peak_field, &m);
        assert_relative_eq!(
            peak,
            E_CHARGE * E_CHARGE * m.r_cv * 2f64.sqrt() * l * (-0.5f64).exp(),
            max_relative = 1e-13
        );
        for frac in [0.9, 0.99, 1.01, 1.1] {
            let e = LateralField::new(frac * peak_field.volts_per_meter()).unwrap();
            assert!(dipole_product_sp(e, &m) < peak);
        }
        assert!(dipole_product_sp_field_derivative(peak_field, &m).abs() < 1e-12 * peak / peak_field.volts_per_meter());
    }

    #[test]
    fn both_states_carry_the_same_product() {
        let m = preset();
        let states = m.default_states();
        for v in [0.1, 0.5, 1.3] {
            let e = field(v);
            let (a_gk, a_ke) = states[0].dipoles(e, &m);
            let (b_gk, b_ke) = states[1].dipoles(e, &m);
            assert_eq!(
                a_gk.coulomb_meters() * a_ke.coulomb_meters(),
                b_ke.coulomb_meters() * b_gk.coulomb_meters()
            );
            assert_relative_eq!(
                a_gk.coulomb_meters() * a_ke.coulomb_meters(),
                dipole_product_sp(e, &m),
                max_relative = 1e-14
            );
        }
    }

    #[test]
    fn analytic_derivatives_match_finite_differences() {
        let m = preset();
        for v in [0.25, 0.5, 1.0] {
            let e = field(v).volts_per_meter();
            let h = 1e-5 * e;
            let f = |x: f64| dipole_ss(LateralField::new(x).unwrap(), &m).coulomb_meters();
            let g = |x: f64| dipole_product_sp(LateralField::new(x).unwrap(), &m);
            let fd_f = (f(e + h) - f(e - h)) / (2.0 * h);
            let fd_g = (g(e + h) - g(e - h)) / (2.0 * h);
            let an_f = dipole_ss_field_derivative(field(v), &m);
            let an_g = dipole_product_sp_field_derivative(field(v), &m);
            assert_relative_eq!(fd_f, an_f, max_relative = 1e-6);
            assert_relative_eq!(fd_g, an_g, max_relative = 1e-6);
        }
    }

    #[test]
    fn detunings() {
        let m = preset();
        let (w1, w2) = photons();
        let states = m.default_states();
        assert!(states[0].energy_above_ground > m.omega_d);

        let abs = intermediate_detunings(w1, w2, &m, &states, Direction::Absorption).unwrap();
        assert_relative_eq!(abs[0].photon1, 8.372_101_516_939_112e14, max_relative = 1e-12);
        assert_relative_eq!(abs[0].photon1, m.omega_d.rad_per_s() + m.omega_e.rad_per_s() - w1.rad_per_s(), max_relative = 1e-15);

        // on shell the substituted emission denominators equal the absorption ones
        let emi = intermediate_detunings(w1, w2, &m, &states, Direction::Emission).unwrap();
        for (a, e) in abs.iter().zip(&emi) {
            let (a1, a2) = a.denominators();
            let (e1, e2) = e.denominators();
            assert_relative_eq!(a1, e1, max_relative = 1e-12);
            assert_relative_eq!(a2, e2, max_relative = 1e-12);
        }

        let half = AngularFrequency::new(m.omega_d.rad_per_s() / 2.0).unwrap();
        let abs = intermediate_detunings(half, half, &m, &states, Direction::Absorption).unwrap();
        let emi = intermediate_detunings(half, half, &m, &states, Direction::Emission).unwrap();
        for (a, e) in abs.iter().zip(&emi) {
            assert_relative_eq!(a.photon1, e.photon2, max_relative = 1e-14);
            assert_relative_eq!(a.photon2, e.photon1, max_relative = 1e-14);
        }

        // sign flips once the photon outruns the state
        let above = AngularFrequency::new(states[0].energy_above_ground.rad_per_s() * 1.01).unwrap();
        let d = intermediate_detunings(above, w2, &m, &states[..1], Direction::Absorption).unwrap();
        assert!(d[0].photon1 < 0.0 && d[0].photon2 > 0.0);
    }

    #[test]
    fn resonant_state_is_an_error() {
        let m = preset();
        let states = m.default_states();
        let resonant = states[0].energy_above_ground;
        let err = intermediate_detunings(resonant, photons().1, &m, &states, Direction::Absorption).unwrap_err();
        match err {
            Error::Singularity { state, .. } => assert_eq!(state, "conduction-p"),
            other => panic!("unexpected {other}"),
        }
        let near = AngularFrequency::new(resonant.rad_per_s() - 1e8).unwrap();
        assert!(m12(near, photons().1, field(0.5), &m, &states, Overlaps::UNIFORM, Direction::Absorption).is_err());
        assert!(intermediate_detunings(photons().0, photons().1, &m, &[], Direction::Absorption).is_err());
        assert!(intermediate_detunings(AngularFrequency::ZERO, photons().1, &m, &states, Direction::Absorption).is_err());
    }

    #[test]
    fn matrix_element() {
        let m = preset();
        let (w1, w2) = photons();
        let states = m.default_states();
        for dir in [Direction::Absorption, Direction::Emission] {
            assert_eq!(m12(w1, w2, LateralField::ZERO, &m, &states, Overlaps::UNIFORM, dir).unwrap(), 0.0);
            let v = m12(w1, w2, field(0.75), &m, &states, Overlaps::UNIFORM, dir).unwrap();
            assert_relative_eq!(v, 1.765_413_887_104_382e-70, max_relative = 1e-9);
            let swapped = m12(w2, w1, field(0.75), &m, &states, Overlaps::UNIFORM, dir).unwrap();
            assert_relative_eq!(v, swapped, max_relative = 1e-12);
        }
        let half = m12(w1, w2, field(0.75), &m, &states, Overlaps::from_modes(0.5, 1.0), Direction::Absorption).unwrap();
        assert_relative_eq!(half, 0.5 * 1.765_413_887_104_382e-70, max_relative = 1e-9);
    }

    #[test]
    fn parity_rules() {
        assert!(interband_allowed(Shell::S, Shell::S, 1));
        assert!(interband_allowed(Shell::P, Shell::P, 1));
        assert!(!interband_allowed(Shell::S, Shell::P, 1));
        assert!(!interband_allowed(Shell::S, Shell::S, 2));
        assert!(interband_allowed(Shell::S, Shell::P, 2));
        assert!(interband_allowed(Shell::P, Shell::S, 2));
    }

    proptest::proptest! {
        #[test]
        fn parity_zero_iff_no_field(v in 0.0f64..3.0) {
            let m = preset();
            let (w1, w2) = photons();
            let e = field(v);
            let val = m12(w1, w2, e, &m, &m.default_states(), Overlaps::UNIFORM, Direction::Absorption).unwrap();
            let p = dipole_product_sp(e, &m);
            proptest::prop_assert_eq!(val == 0.0, p == 0.0);
            proptest::prop_assert_eq!(p == 0.0, v == 0.0);
        }

        #[test]
        fn exchange_symmetry(frac in 0.05f64..0.95, v in 0.05f64..2.0) {
            let m = preset();
            let wd = m.omega_d.rad_per_s();
            let w1 = AngularFrequency::new(frac * wd).unwrap();
            let w2 = AngularFrequency::new(wd - frac * wd).unwrap();
            let states = m.default_states();
            for dir in [Direction::Absorption, Direction::Emission] {
                let a = m12(w1, w2, field(v), &m, &states, Overlaps::UNIFORM, dir).unwrap();
                let b = m12(w2, w1, field(v), &m, &states, Overlaps::UNIFORM, dir).unwrap();
                proptest::prop_assert!((a - b).abs() <= 1e-12 * a.abs());
            }
        }
    }
}
