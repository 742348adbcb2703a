//! Bound states of position-dependent-mass charges in inverse-power-law
//! magnetic fields with an Aharonov-Bohm flux line.
//!
//! Units are ħ = 2m₀ = 1 throughout. The crate provides
//!
//! * closed-form spectra and wavefunctions for three mass models ([`models`]),
//! * a generic Nikiforov-Uvarov solver ([`nu`]),
//! * an independent finite-difference eigen-solver used as an oracle ([`oracle`]),
//! * parameter sweeps and level-crossing detection ([`sweeps`]).

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod fields;
pub mod grid;
pub mod models;
pub mod nu;
pub mod oracle;
pub mod params;
pub mod specfun;
pub mod sweeps;

pub use error::{Error, Result};
pub use fields::FieldSample;
pub use grid::{RadialFunction, RadialGrid, Spacing};
pub use models::{BoundState, ModelKind, RadialEquation, WaveForm};
pub use nu::{NuCoefficients, NuSolution};
pub use params::{PhysicalParams, QuantumState};
pub use sweeps::{CrossingPoint, SweepParam, SweepRow, SweepSpec};
