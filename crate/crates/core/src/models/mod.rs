//! The three exactly solvable mass models, their effective radial
//! potentials, and the Greene-Aldrich replacement 1/ρ ≈ δ/(1 − e^{−δρ}).
//!
//! Model A has g = η/ρ, model B has g = η/ρ², both with V = 0. Model C has
//! g = η e^{−δρ}/ρ in a Yukawa-plus-Kratzer potential. The closed forms need
//! σ = 1; the radial equation itself is available for any σ ≠ 2.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fields::{check_rho, shape_unchecked};
use crate::params::{PhysicalParams, QuantumState};

mod coulomb;
mod wavefunction;
mod yukawa;

pub use coulomb::{model_a_core, model_a_energy, model_b_core, model_b_energy, ModelACore, ModelBCore};
pub use wavefunction::{model_a_wavefunction, model_b_wavefunction, model_c_wavefunction, BoundState, WaveForm};
pub use yukawa::{model_c_coefficients, model_c_energy, model_c_raw, ModelCCore};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ModelKind {
    A,
    B,
    C,
}

impl ModelKind {
    pub const ALL: [ModelKind; 3] = [ModelKind::A, ModelKind::B, ModelKind::C];

    /// Whether the closed-form energy of this model varies with `key`.
    pub fn depends_on(self, key: &str) -> bool {
        match key {
            "e" | "b0" | "mu" | "beta" | "alpha_ab" | "kz" | "eta" => true,
            "delta" | "v0" | "v1" | "v2" => self == ModelKind::C,
            _ => false,
        }
    }
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModelKind::A => "a",
            ModelKind::B => "b",
            ModelKind::C => "c",
        })
    }
}

impl FromStr for ModelKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "a" => Ok(ModelKind::A),
            "b" => Ok(ModelKind::B),
            "c" => Ok(ModelKind::C),
            _ => Err(format!("unknown model `{s}`, expected a, b or c")),
        }
    }
}

/// g(ρ) for the given model.
pub fn mass_function(rho: f64, kind: ModelKind, params: &PhysicalParams) -> Result<f64> {
    check_rho(rho)?;
    Ok(mass_unchecked(rho, kind, params))
}

fn mass_unchecked(rho: f64, kind: ModelKind, params: &PhysicalParams) -> f64 {
    match kind {
        ModelKind::A => params.eta / rho,
        ModelKind::B => params.eta / (rho * rho),
        ModelKind::C => params.eta * (-params.delta * rho).exp() / rho,
    }
}

/// 5/16 (g′/g)² − 1/4 g″/g − 1/4 g′/(ρg), in closed form per model.
pub fn mass_bracket(rho: f64, kind: ModelKind, params: &PhysicalParams) -> f64 {
    let inv2 = 1.0 / (rho * rho);
    match kind {
        ModelKind::A => inv2 / 16.0,
        ModelKind::B => inv2 / 4.0,
        ModelKind::C => {
            let d = params.delta;
            d * d / 16.0 + 3.0 * d / (8.0 * rho) + inv2 / 16.0
        }
    }
}

/// V(ρ) = −V₀ e^{−δρ}/ρ − V₁/ρ + V₂/ρ².
pub fn confining_potential(rho: f64, params: &PhysicalParams) -> Result<f64> {
    check_rho(rho)?;
    Ok(confining_unchecked(rho, params))
}

fn confining_unchecked(rho: f64, p: &PhysicalParams) -> f64 {
    -p.v0 * (-p.delta * rho).exp() / rho - p.v1 / rho + p.v2 / (rho * rho)
}

/// Everything multiplying U in the reduced radial equation except −d²/dρ²,
/// so that −U″ + W U = Ẽ U with Ẽ = −(kz² + e²B₀²μ²).
///
/// Models A and B carry no confining potential. For σ ≠ 1 the field terms
/// are built from S(ρ) directly and shifted by −e²B₀²μ² to share the same Ẽ.
pub fn effective_potential(rho: f64, kind: ModelKind, m: i32, params: &PhysicalParams, energy: f64) -> Result<f64> {
    let problem = RadialProblem::new(kind, m, params, RadialEquation::Exact)?;
    check_rho(rho)?;
    Ok(problem.potential(rho, energy))
}

/// Which radial equation a [`RadialProblem`] represents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RadialEquation {
    /// The reduced equation with the model's exact mass terms.
    Exact,
    /// Model C with every 1/ρ replaced by δ/(1 − e^{−δρ}).
    GreeneAldrich,
}

/// A reduced radial equation whose potential is affine in the energy:
/// W(ρ; E) = base(ρ) − E·mass(ρ).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialProblem {
    pub kind: ModelKind,
    pub m: i32,
    pub params: PhysicalParams,
    pub equation: RadialEquation,
}

impl RadialProblem {
    pub fn new(kind: ModelKind, m: i32, params: &PhysicalParams, equation: RadialEquation) -> Result<Self> {
        params.validate()?;
        if params.sigma == 2.0 {
            return Err(Error::SigmaTwo);
        }
        if equation == RadialEquation::GreeneAldrich {
            if kind != ModelKind::C {
                return Err(Error::InvalidParam {
                    name: "model",
                    reason: "the Greene-Aldrich form exists for model C only".into(),
                });
            }
            if params.sigma != 1.0 {
                return Err(Error::SigmaNotOne(params.sigma));
            }
            if params.delta == 0.0 {
                return Err(Error::ZeroDelta);
            }
        }
        Ok(Self { kind, m, params: *params, equation })
    }

    /// Ẽ = −(kz² + e²B₀²μ²).
    pub fn target(&self) -> f64 {
        self.params.e_tilde()
    }

    /// (base(ρ), mass(ρ)) for ρ > 0.
    pub fn terms(&self, rho: f64) -> (f64, f64) {
        match self.equation {
            RadialEquation::Exact => self.exact_terms(rho),
            RadialEquation::GreeneAldrich => self.ga_terms(rho),
        }
    }

    pub fn potential(&self, rho: f64, energy: f64) -> f64 {
        let (base, mass) = self.terms(rho);
        base - energy * mass
    }

    fn exact_terms(&self, rho: f64) -> (f64, f64) {
        let p = &self.params;
        let mt = f64::from(self.m) - p.alpha_ab;
        let eb = p.e * p.b0;
        let field = if p.sigma == 1.0 {
            (mt * mt - 0.25 - eb * mt * p.beta + eb * eb * p.beta * p.beta / 4.0) / (rho * rho)
                - (2.0 * eb * mt * p.mu - eb * eb * p.mu * p.beta) / rho
        } else {
            let s = shape_unchecked(rho, p);
            (mt * mt - 0.25) / (rho * rho) - eb * mt * s + eb * eb * rho * rho * s * s / 4.0 - eb * eb * p.mu * p.mu
        };
        let v = match self.kind {
            ModelKind::C => confining_unchecked(rho, p),
            _ => 0.0,
        };
        (field + v + mass_bracket(rho, self.kind, p), mass_unchecked(rho, self.kind, p))
    }

    fn ga_terms(&self, rho: f64) -> (f64, f64) {
        let p = &self.params;
        let d = p.delta;
        let [a1, a2, _, _] = model_c_raw(&QuantumState::new(0, self.m), p, 0.0);
        let one_minus = -(-d * rho).exp_m1();
        let inv = d / one_minus;
        let yukawa = d * (-d * rho).exp() / one_minus;
        (a1 * inv * inv + a2 * inv - p.v0 * yukawa + d * d / 16.0, p.eta * yukawa)
    }
}

/// One row of the Greene-Aldrich validity report.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GreeneAldrich {
    pub rho: f64,
    pub delta: f64,
    pub exact: f64,
    pub approx: f64,
    /// |approx − exact|·ρ, i.e. the error relative to 1/ρ.
    pub rel_err: f64,
}

/// Compares 1/ρ with δ/(1 − e^{−δρ}).
pub fn greene_aldrich(rho: f64, delta: f64) -> Result<GreeneAldrich> {
    check_rho(rho)?;
    if !(delta > 0.0 && delta.is_finite()) {
        return Err(Error::InvalidParam { name: "delta", reason: format!("must be positive, got {delta}") });
    }
    let x = delta * rho;
    let approx = delta / -(-x).exp_m1();
    Ok(GreeneAldrich { rho, delta, exact: 1.0 / rho, approx, rel_err: (x / -(-x).exp_m1() - 1.0).abs() })
}

/// Greene-Aldrich rows at δρ = x for each `x`, with δ fixed.
pub fn greene_aldrich_table(delta: f64, products: &[f64]) -> Result<Vec<GreeneAldrich>> {
    products.iter().map(|&x| greene_aldrich(x / delta, delta)).collect()
}

/// Closed-form energy of `state` under `kind`.
pub fn energy(kind: ModelKind, state: &QuantumState, params: &PhysicalParams) -> Result<f64> {
    match kind {
        ModelKind::A => model_a_energy(state, params),
        ModelKind::B => model_b_energy(state, params),
        ModelKind::C => model_c_energy(state, params),
    }
}

pub(crate) fn require_sigma_one(params: &PhysicalParams) -> Result<()> {
    if params.sigma == 1.0 {
        Ok(())
    } else {
        Err(Error::SigmaNotOne(params.sigma))
    }
}
