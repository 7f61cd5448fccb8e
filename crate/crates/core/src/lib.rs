//! Cavity-enhanced two-photon transition rates of a quantum dot in a
//! photonic crystal nanocavity.
//!
//! The crate covers two-photon absorption (TPA), spontaneous emission
//! (TPSE) and stimulated emission (TPSTE) in bulk and in single- and
//! double-mode cavities, the Purcell-type enhancement factors that relate
//! them, and a lateral-field model of the dot that breaks the parity
//! selection rule forbidding two-photon s-s transitions.
//!
//! ```
//! use twophoton_core::scenario::ScenarioConfig;
//! use twophoton_core::{evaluate_point, LateralField};
//!
//! let config = ScenarioConfig::preset("paper-fig3").unwrap();
//! let report = evaluate_point(LateralField::from_volts_per_um(0.75).unwrap(), &config.setup).unwrap();
//! assert!(report.omega_eff_over_2pi > 0.0);
//! ```

// `!(x > 0.0)` is used on purpose so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::too_many_arguments)]

pub mod cavity;
pub mod error;
pub mod qd_stark;
pub mod quadrature;
pub mod quantities;
pub mod rates;
pub mod scenario;

pub use cavity::{BulkHost, CavityMode};
pub use error::{Error, Result};
pub use qd_stark::{Direction, IntermediateState, LateralField, Overlaps, QuantumDotModel, StateKind};
pub use quadrature::{GridSpec, Integral};
pub use quantities::{AngularFrequency, DipoleMoment, Power, Wavelength};
pub use rates::{evaluate_point, DriveField, Environment, Linewidth, RateReport, Setup};
