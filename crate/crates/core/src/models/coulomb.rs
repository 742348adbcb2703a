//! Models A (g = η/ρ) and B (g = η/ρ²): both collapse to a two-dimensional
//! Coulomb problem −U″ + (ℓ² − 1/4)/ρ² U − Z/ρ U = Ẽ U.

use crate::error::{Error, Result};
use crate::params::{PhysicalParams, QuantumState};

use super::require_sigma_one;

/// α̃ and |ℓ̃| of model A. α̃ depends on the energy it was evaluated at.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelACore {
    pub alpha_tilde: f64,
    pub ell_tilde_abs: f64,
}

/// β́ and |ℓ́| of model B. |ℓ́| depends on the energy it was evaluated at.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelBCore {
    pub beta_acute: f64,
    pub ell_acute_abs: f64,
}

/// m̃ − eB₀β/2.
fn shifted_m(state: &QuantumState, p: &PhysicalParams) -> f64 {
    state.m_tilde(p) - p.e * p.b0 * p.beta / 2.0
}

/// 2em̃B₀μ − e²B₀²μβ, the Coulomb strength shared by both models.
fn field_charge(state: &QuantumState, p: &PhysicalParams) -> f64 {
    let eb = p.e * p.b0;
    2.0 * eb * state.m_tilde(p) * p.mu - eb * eb * p.mu * p.beta
}

pub fn model_a_core(state: &QuantumState, params: &PhysicalParams, energy: f64) -> ModelACore {
    ModelACore {
        alpha_tilde: field_charge(state, params) + params.eta * energy,
        ell_tilde_abs: (shifted_m(state, params).powi(2) + 1.0 / 16.0).sqrt(),
    }
}

/// E = (1/η)[βμe²B₀² − 2em̃B₀μ + 2k(n_ρ + 1/2 + |ℓ̃|)], k = √(kz² + e²B₀²μ²).
pub fn model_a_energy(state: &QuantumState, params: &PhysicalParams) -> Result<f64> {
    params.validate()?;
    require_sigma_one(params)?;
    let k = params.require_binding()?;
    let p = params;
    let eb = p.e * p.b0;
    let ell = model_a_core(state, p, 0.0).ell_tilde_abs;
    let bracket =
        p.beta * p.mu * eb * eb - 2.0 * eb * state.m_tilde(p) * p.mu + 2.0 * k * (f64::from(state.n_rho) + 0.5 + ell);
    Ok(bracket / p.eta)
}

/// Evaluates |ℓ́| = √((m̃ − eB₀β/2)² + 1/4 − ηE) at `energy`.
pub fn model_b_core(state: &QuantumState, params: &PhysicalParams, energy: f64) -> Result<ModelBCore> {
    let radicand = shifted_m(state, params).powi(2) + 0.25 - params.eta * energy;
    if radicand < 0.0 {
        return Err(Error::NegativeRadicand { what: "ℓ́²", value: radicand });
    }
    Ok(ModelBCore { beta_acute: field_charge(state, params), ell_acute_abs: radicand.sqrt() })
}

/// E = (1/η)[(m̃ − eB₀β/2)² + 1/4 − ℓ́²] with |ℓ́| = β́/(2k) − n_ρ − 1/2,
/// which has to be positive.
pub fn model_b_energy(state: &QuantumState, params: &PhysicalParams) -> Result<f64> {
    params.validate()?;
    require_sigma_one(params)?;
    let k = params.require_binding()?;
    let ell = model_b_ell(state, params, k);
    if !(ell > 0.0) {
        return Err(Error::NotBound { n_rho: state.n_rho, m: state.m, ell });
    }
    Ok((shifted_m(state, params).powi(2) + 0.25 - ell * ell) / params.eta)
}

fn model_b_ell(state: &QuantumState, params: &PhysicalParams, k: f64) -> f64 {
    field_charge(state, params) / (2.0 * k) - f64::from(state.n_rho) - 0.5
}

/// |ℓ́| of a valid model B state, evaluated from the quantization condition.
pub(crate) fn model_b_ell_abs(state: &QuantumState, params: &PhysicalParams) -> Result<f64> {
    model_b_energy(state, params)?;
    Ok(model_b_ell(state, params, params.binding_scale()))
}
