//! Normalized closed-form radial wavefunctions.
//!
//! U is normalized in the flat measure, ∫|U|² dρ = 1, and R = √(g/ρ)·U.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::fields::check_rho;
use crate::grid::{RadialFunction, RadialGrid};
use crate::nu::NuCoefficients;
use crate::params::{PhysicalParams, QuantumState};
use crate::specfun::{jacobi, laguerre, normalize};

use super::coulomb::model_b_ell_abs;
use super::{energy, mass_unchecked, model_a_core, model_c_coefficients, ModelKind};

const NORM_POINTS: usize = 20_001;

/// Which closed form to use for model C.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WaveForm {
    /// R = ρ^{−(1−υ)/2} e^{−δρ(1+κ)/2} P_n^{(κ,υ)}(1 − 2e^{−δρ}).
    #[default]
    Rho,
    /// U = ξ^{κ/2} ((1−ξ)/δ)^{(1+υ)/2} P_n^{(κ,υ)}(1 − 2ξ), the exact
    /// solution of the Greene-Aldrich equation.
    Xi,
}

impl fmt::Display for WaveForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WaveForm::Rho => "rho",
            WaveForm::Xi => "xi",
        })
    }
}

impl FromStr for WaveForm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "rho" => Ok(WaveForm::Rho),
            "xi" => Ok(WaveForm::Xi),
            _ => Err(format!("unknown form `{s}`, expected rho or xi")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Shape {
    /// ρ^{ℓ+1/2} e^{−kρ} L_n^{2ℓ}(2kρ).
    Coulomb {
        ell: f64,
        k: f64,
    },
    Jacobi {
        kappa: f64,
        upsilon: f64,
        delta: f64,
        form: WaveForm,
    },
}

/// A closed-form bound state with its normalization constant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundState {
    kind: ModelKind,
    state: QuantumState,
    params: PhysicalParams,
    energy: f64,
    shape: Shape,
    norm: f64,
}

impl BoundState {
    /// `form` only matters for model C.
    pub fn new(kind: ModelKind, state: QuantumState, params: &PhysicalParams, form: WaveForm) -> Result<Self> {
        let e = energy(kind, &state, params)?;
        let shape = match kind {
            ModelKind::A => {
                Shape::Coulomb { ell: model_a_core(&state, params, e).ell_tilde_abs, k: params.binding_scale() }
            }
            ModelKind::B => Shape::Coulomb { ell: model_b_ell_abs(&state, params)?, k: params.binding_scale() },
            ModelKind::C => {
                let core = model_c_coefficients(&state, params, e)?;
                Shape::Jacobi { kappa: core.kappa, upsilon: core.upsilon, delta: params.delta, form }
            }
        };
        let mut bound = Self { kind, state, params: *params, energy: e, shape, norm: 1.0 };
        let grid = bound.normalization_grid()?;
        let raw = grid.sample(|r| bound.u_raw(r))?;
        bound.norm = normalize(&raw)?.factor;
        Ok(bound)
    }

    pub fn kind(&self) -> ModelKind {
        self.kind
    }

    pub fn state(&self) -> QuantumState {
        self.state
    }

    pub fn params(&self) -> &PhysicalParams {
        &self.params
    }

    pub fn energy(&self) -> f64 {
        self.energy
    }

    /// Exponential decay rate of U at large ρ.
    pub fn decay_rate(&self) -> f64 {
        match self.shape {
            Shape::Coulomb { k, .. } => k,
            Shape::Jacobi { kappa, delta, .. } => 0.5 * kappa * delta,
        }
    }

    /// Leading power p of U ~ ρ^p at the origin.
    pub fn origin_exponent(&self) -> f64 {
        match self.shape {
            Shape::Coulomb { ell, .. } => ell + 0.5,
            Shape::Jacobi { upsilon, .. } => 0.5 * (1.0 + upsilon),
        }
    }

    /// (κ, υ) of a model C state.
    pub fn jacobi_parameters(&self) -> Option<(f64, f64)> {
        match self.shape {
            Shape::Jacobi { kappa, upsilon, .. } => Some((kappa, upsilon)),
            Shape::Coulomb { .. } => None,
        }
    }

    /// A log grid reaching well into the exponential tail.
    pub fn normalization_grid(&self) -> Result<RadialGrid> {
        let k = self.decay_rate();
        if !(k > 0.0) {
            return Err(Error::DivergentTail { fraction: f64::INFINITY });
        }
        let n = f64::from(self.state.n_rho);
        RadialGrid::logarithmic(1e-9 / k, (60.0 + 10.0 * n) / k, NORM_POINTS)
    }

    /// Unnormalized U.
    pub fn u_raw(&self, rho: f64) -> f64 {
        let n = self.state.n_rho;
        match self.shape {
            Shape::Coulomb { ell, k } => rho.powf(ell + 0.5) * (-k * rho).exp() * laguerre(n, 2.0 * ell, 2.0 * k * rho),
            Shape::Jacobi { kappa, upsilon, delta, form } => {
                let x = delta * rho;
                let xi = (-x).exp();
                let poly = jacobi(n, kappa, upsilon, 1.0 - 2.0 * xi);
                let decay = (-0.5 * kappa * x).exp();
                let origin = match form {
                    WaveForm::Rho => rho,
                    WaveForm::Xi => -(-x).exp_m1() / delta,
                };
                origin.powf(0.5 * (1.0 + upsilon)) * decay * poly
            }
        }
    }

    /// Normalized U(ρ).
    pub fn u(&self, rho: f64) -> Result<f64> {
        check_rho(rho)?;
        Ok(self.norm * self.u_raw(rho))
    }

    /// R(ρ) = √(g(ρ)/ρ)·U(ρ).
    pub fn r(&self, rho: f64) -> Result<f64> {
        Ok((mass_unchecked(rho, self.kind, &self.params) / rho).sqrt() * self.u(rho)?)
    }

    pub fn sample_u(&self, grid: &RadialGrid) -> Result<RadialFunction> {
        grid.sample(|r| self.norm * self.u_raw(r))
    }

    pub fn sample_r(&self, grid: &RadialGrid) -> Result<RadialFunction> {
        grid.sample(|r| (mass_unchecked(r, self.kind, &self.params) / r).sqrt() * self.norm * self.u_raw(r))
    }

    /// The Nikiforov-Uvarov coefficients behind a model C state.
    pub fn nu_coefficients(&self) -> Option<NuCoefficients> {
        match self.kind {
            ModelKind::C => {
                model_c_coefficients(&self.state, &self.params, self.energy).ok().map(|c| c.nu(self.params.delta))
            }
            _ => None,
        }
    }
}

/// Normalized R(ρ) of model A.
pub fn model_a_wavefunction(state: &QuantumState, params: &PhysicalParams, rho: f64) -> Result<f64> {
    BoundState::new(ModelKind::A, *state, params, WaveForm::Rho)?.r(rho)
}

/// Normalized R(ρ) of model B.
pub fn model_b_wavefunction(state: &QuantumState, params: &PhysicalParams, rho: f64) -> Result<f64> {
    BoundState::new(ModelKind::B, *state, params, WaveForm::Rho)?.r(rho)
}

/// Normalized R(ρ) of model C in the requested form.
pub fn model_c_wavefunction(state: &QuantumState, params: &PhysicalParams, rho: f64, form: WaveForm) -> Result<f64> {
    if params.delta == 0.0 {
        return Err(Error::ZeroDelta);
    }
    BoundState::new(ModelKind::C, *state, params, form)?.r(rho)
}
