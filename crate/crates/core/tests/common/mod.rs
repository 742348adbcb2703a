#![allow(dead_code)]

use pdm_core::nu::NuCoefficients;
use pdm_core::{PhysicalParams, QuantumState};

/// Model C parameter set with a (0,1)/(1,0) crossing inside δ ∈ [0.01, 0.5]
/// and every radicand bounded away from zero there.
pub fn yukawa_params(delta: f64) -> PhysicalParams {
    PhysicalParams { mu: -0.5, kz: 0.5, delta, v0: 1.0, v2: 2.0, ..Default::default() }
}

pub fn model_a_base() -> PhysicalParams {
    PhysicalParams { kz: 1.0, ..Default::default() }
}

pub fn model_b_base() -> PhysicalParams {
    PhysicalParams { mu: 0.5, beta: -2.0, kz: 0.25, alpha_ab: -1.0, ..Default::default() }
}

pub fn crossing_states() -> [QuantumState; 4] {
    [QuantumState::new(0, 1), QuantumState::new(1, 0), QuantumState::new(2, 1), QuantumState::new(0, 2)]
}

/// max |σχ″ + τχ′ + λχ| / max|χ| on ξ ∈ [0.01, 0.99], five-point stencils.
pub fn hypergeometric_residual(c: &NuCoefficients, n: u32) -> f64 {
    let lambda = c.lambda().unwrap();
    let chi = |x: f64| c.chi(n, x).unwrap();
    let h = 1e-3;
    let (mut worst, mut scale) = (0.0f64, 0.0f64);
    for i in 0..=980 {
        let x = 0.01 + 0.001 * f64::from(i);
        let f = [chi(x - 2.0 * h), chi(x - h), chi(x), chi(x + h), chi(x + 2.0 * h)];
        let mid = f[2];
        let d2 = (-f[4] + 16.0 * f[3] - 30.0 * mid + 16.0 * f[1] - f[0]) / (12.0 * h * h);
        let d1 = (-f[4] + 8.0 * f[3] - 8.0 * f[1] + f[0]) / (12.0 * h);
        let r = x * (1.0 - x) * d2 + c.tau(x).unwrap() * d1 + lambda * mid;
        worst = worst.max(r.abs());
        scale = scale.max(mid.abs());
    }
    worst / scale
}
