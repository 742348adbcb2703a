//! Model C: g = η e^{−δρ}/ρ in V = −V₀e^{−δρ}/ρ − V₁/ρ + V₂/ρ², solved on the
//! Greene-Aldrich form by the Nikiforov-Uvarov reduction with ξ = e^{−δρ}.

use crate::error::{Error, Result};
use crate::nu::NuCoefficients;
use crate::params::{PhysicalParams, QuantumState};

use super::require_sigma_one;

/// Coefficients of model C at a given energy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelCCore {
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
    pub a4: f64,
    pub eps1t: f64,
    pub eps2t: f64,
    pub kappa: f64,
    pub upsilon: f64,
}

impl ModelCCore {
    /// ã₁ = a₁, ã₂ = −a₂/δ, ã₃ = a₃/δ, ã₄ = a₄/δ².
    pub fn nu(&self, delta: f64) -> NuCoefficients {
        NuCoefficients { a1: self.a1, a2: -self.a2 / delta, a3: self.a3 / delta, a4: self.a4 / (delta * delta) }
    }
}

/// a₁ … a₄ of the model C radial equation. Defined for every δ ≥ 0.
pub fn model_c_raw(state: &QuantumState, p: &PhysicalParams, energy: f64) -> [f64; 4] {
    let mt = state.m_tilde(p);
    let eb = p.e * p.b0;
    [
        mt * mt - 3.0 / 16.0 - eb * mt * p.beta + eb * eb * p.beta * p.beta / 4.0 + p.v2,
        eb * eb * p.mu * p.beta - 2.0 * eb * mt * p.mu + 3.0 * p.delta / 8.0 - p.v1,
        p.v0 + p.eta * energy,
        p.kz * p.kz + eb * eb * p.mu * p.mu + p.delta * p.delta / 16.0,
    ]
}

/// The two radicands under ε̃₁ and ε̃₂: X = δ²(ã₁ − ã₂ + ã₄) and
/// Y = (m̃ − eB₀β/2)² + V₂ + 1/16 = ã₁ + 1/4.
fn radicands(state: &QuantumState, p: &PhysicalParams) -> (f64, f64) {
    let d = p.delta;
    let s = state.m_tilde(p) - p.e * p.b0 * p.beta / 2.0;
    let eb_mu = p.e * p.b0 * p.mu;
    let x = d * d * s * s + d * d * p.v2 + d * d / 4.0 - 2.0 * eb_mu * s * d - d * p.v1 + eb_mu * eb_mu + p.kz * p.kz;
    let y = s * s + p.v2 + 1.0 / 16.0;
    (x, y)
}

/// (ε̃₁, ε̃₂), or an error when a radicand is negative or the state does not decay.
fn epsilons(state: &QuantumState, p: &PhysicalParams) -> Result<(f64, f64)> {
    let (x, y) = radicands(state, p);
    if !(x > 0.0) {
        return Err(Error::NoRealBoundLevel { what: "ε̃₁ radicand", value: x });
    }
    if y < 0.0 {
        return Err(Error::NoRealBoundLevel { what: "(m̃ − eB₀β/2)² + V₂ + 1/16", value: y });
    }
    let d = p.delta;
    let s = state.m_tilde(p) - p.e * p.b0 * p.beta / 2.0;
    let eps1 = x.sqrt() + d * y.sqrt();
    let eps2 = 2.0 * (x * y).sqrt() + 2.0 * (d * s * s + d * p.v2 - p.e * p.b0 * p.mu * s) - p.v1;
    Ok((eps1, eps2))
}

/// Coefficients at `energy`, with the ã map. δ = 0 is refused; use
/// [`model_c_raw`] for a₁ … a₄ alone.
pub fn model_c_coefficients(state: &QuantumState, params: &PhysicalParams, energy: f64) -> Result<ModelCCore> {
    params.validate()?;
    if params.delta == 0.0 {
        return Err(Error::ZeroDelta);
    }
    let [a1, a2, a3, a4] = model_c_raw(state, params, energy);
    let (eps1t, eps2t) = epsilons(state, params)?;
    let mut core = ModelCCore { a1, a2, a3, a4, eps1t, eps2t, kappa: 0.0, upsilon: 0.0 };
    let nu = core.nu(params.delta);
    let nu = NuCoefficients::new(nu.a1, nu.a2, nu.a3, nu.a4)?;
    core.kappa = nu.kappa()?;
    core.upsilon = nu.upsilon()?;
    Ok(core)
}

/// E = (1/η)[(n² + n + 1/2)δ + (2n + 1)ε̃₁ + ε̃₂ − V₀].
///
/// Finite at δ = 0, where it coincides with model A.
pub fn model_c_energy(state: &QuantumState, params: &PhysicalParams) -> Result<f64> {
    params.validate()?;
    require_sigma_one(params)?;
    let (eps1, eps2) = epsilons(state, params)?;
    let n = f64::from(state.n_rho);
    Ok(((n * n + n + 0.5) * params.delta + (2.0 * n + 1.0) * eps1 + eps2 - params.v0) / params.eta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::model_a_energy;
    use crate::nu::nu_quantize;

    fn yukawa_params(delta: f64) -> PhysicalParams {
        PhysicalParams { mu: -0.5, kz: 0.5, delta, v0: 1.0, v2: 2.0, ..Default::default() }
    }

    #[test]
    fn raw_coefficient_examples() {
        let p = PhysicalParams { beta: 0.0, ..Default::default() };
        assert_eq!(model_c_raw(&QuantumState::new(0, 0), &p, 0.0)[0], -3.0 / 16.0);
        let p = PhysicalParams { b0: 0.0, kz: 1.0, delta: 0.1, ..Default::default() };
        assert_eq!(model_c_raw(&QuantumState::new(0, 0), &p, 0.0)[3], 1.0 + 0.01 / 16.0);
    }

    #[test]
    fn zero_delta_refuses_the_map() {
        let p = PhysicalParams::default();
        assert_eq!(model_c_coefficients(&QuantumState::new(0, 0), &p, 1.0), Err(Error::ZeroDelta));
    }

    #[test]
    fn reduces_to_model_a() {
        let p = PhysicalParams::default();
        let state = QuantumState::new(0, 0);
        assert_eq!(model_c_energy(&state, &p).unwrap(), 1.5);
        assert_eq!(model_a_energy(&state, &p).unwrap(), 1.5);
    }

    #[test]
    fn invariants_hold_over_delta_range() {
        for i in 0..=25 {
            let delta = 0.05 + 0.01 * f64::from(i);
            for state in
                [QuantumState::new(0, 1), QuantumState::new(1, 0), QuantumState::new(2, 1), QuantumState::new(0, 2)]
            {
                let c = model_c_coefficients(&state, &yukawa_params(delta), 0.0).unwrap();
                assert!(c.kappa > 0.0 && c.upsilon > 0.0);
                assert!(c.a4 > 0.0);
            }
        }
    }

    #[test]
    fn quantization_round_trip() {
        let p = yukawa_params(0.1);
        for n in 0..4 {
            let state = QuantumState::new(n, 1);
            let energy = model_c_energy(&state, &p).unwrap();
            let core = model_c_coefficients(&state, &p, energy).unwrap();
            let nu = core.nu(p.delta);
            let quantized = nu_quantize(nu.a1, nu.a2, nu.a4, n).unwrap();
            assert!((nu.a3 - quantized).abs() <= 1e-9 * quantized.abs().max(1.0), "{} vs {quantized}", nu.a3);
            assert!(((p.v0 + p.eta * energy) / p.delta - quantized).abs() <= 1e-9 * quantized.abs());
        }
    }

    #[test]
    fn v0_shifts_every_level() {
        let p = yukawa_params(0.2);
        let q = PhysicalParams { v0: p.v0 + 0.75, eta: 1.0, ..p };
        for state in [QuantumState::new(0, 1), QuantumState::new(2, -1)] {
            let shift = model_c_energy(&state, &q).unwrap() - model_c_energy(&state, &p).unwrap();
            assert!((shift + 0.75).abs() < 1e-13);
        }
    }

    #[test]
    fn negative_radicand_is_reported() {
        let p = PhysicalParams { v1: 50.0, delta: 0.5, b0: 0.0, kz: 0.1, ..Default::default() };
        assert!(matches!(model_c_energy(&QuantumState::new(0, 0), &p), Err(Error::NoRealBoundLevel { .. })));
    }
}
