//! Physical parameters and quantum numbers, in ħ = 2m₀ = 1 units.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Every physical constant of a scenario.
///
/// A plain value object: fields are public, and [`PhysicalParams::validate`]
/// is the single gate that every computing entry point goes through.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalParams {
    /// Particle charge, signed.
    pub e: f64,
    /// Field strength B₀ ≥ 0.
    pub b0: f64,
    /// Field shape parameter μ; μ = 0 switches the field off.
    pub mu: f64,
    /// Offset β of the generating function S(ρ).
    pub beta: f64,
    /// Inverse-power exponent of the field. Closed forms need σ = 1.
    pub sigma: f64,
    /// Aharonov-Bohm flux in units of the flux quantum 2π/e.
    pub alpha_ab: f64,
    /// Axial wavenumber.
    pub kz: f64,
    /// Mass scale η > 0.
    pub eta: f64,
    /// Mass and Yukawa decay rate δ ≥ 0.
    pub delta: f64,
    pub v0: f64,
    pub v1: f64,
    pub v2: f64,
}

impl Default for PhysicalParams {
    fn default() -> Self {
        Self {
            e: 1.0,
            b0: 1.0,
            mu: 1.0,
            beta: 0.0,
            sigma: 1.0,
            alpha_ab: 0.0,
            kz: 0.0,
            eta: 1.0,
            delta: 0.0,
            v0: 0.0,
            v1: 0.0,
            v2: 0.0,
        }
    }
}

/// Config keys, in the order they are echoed.
pub const PARAM_KEYS: [&str; 12] =
    ["e", "b0", "mu", "beta", "sigma", "alpha_ab", "kz", "eta", "delta", "v0", "v1", "v2"];

impl PhysicalParams {
    pub fn validate(&self) -> Result<()> {
        for key in PARAM_KEYS {
            let value = self.get(key).expect("known key");
            if !value.is_finite() {
                return Err(Error::InvalidParam {
                    name: key_static(key),
                    reason: format!("must be finite, got {value}"),
                });
            }
        }
        if self.e == 0.0 {
            return Err(invalid("e", "charge must be nonzero (the flux quantum is 2π/e)"));
        }
        if self.eta <= 0.0 {
            return Err(invalid("eta", format!("mass scale must be positive, got {}", self.eta)));
        }
        if self.delta < 0.0 {
            return Err(invalid("delta", format!("must be non-negative, got {}", self.delta)));
        }
        if self.b0 < 0.0 {
            return Err(invalid("b0", format!("must be non-negative, got {}", self.b0)));
        }
        Ok(())
    }

    /// Ẽ = −(kz² + e²B₀²μ²), always ≤ 0.
    pub fn e_tilde(&self) -> f64 {
        -(self.kz * self.kz + (self.e * self.b0 * self.mu).powi(2))
    }

    /// √(kz² + e²B₀²μ²): the decay rate of the Coulomb-like bound states.
    pub fn binding_scale(&self) -> f64 {
        (-self.e_tilde()).sqrt()
    }

    /// [`binding_scale`](Self::binding_scale), or an error when it vanishes
    /// and models A and B have no bound spectrum.
    pub fn require_binding(&self) -> Result<f64> {
        let k2 = -self.e_tilde();
        if k2 > 0.0 {
            Ok(k2.sqrt())
        } else {
            Err(Error::NoBoundSpectrum(k2))
        }
    }

    pub fn get(&self, key: &str) -> Option<f64> {
        Some(match key {
            "e" => self.e,
            "b0" => self.b0,
            "mu" => self.mu,
            "beta" => self.beta,
            "sigma" => self.sigma,
            "alpha_ab" => self.alpha_ab,
            "kz" => self.kz,
            "eta" => self.eta,
            "delta" => self.delta,
            "v0" => self.v0,
            "v1" => self.v1,
            "v2" => self.v2,
            _ => return None,
        })
    }

    /// Sets a field by its config key. Returns `false` for unknown keys.
    pub fn set(&mut self, key: &str, value: f64) -> bool {
        let slot = match key {
            "e" => &mut self.e,
            "b0" => &mut self.b0,
            "mu" => &mut self.mu,
            "beta" => &mut self.beta,
            "sigma" => &mut self.sigma,
            "alpha_ab" => &mut self.alpha_ab,
            "kz" => &mut self.kz,
            "eta" => &mut self.eta,
            "delta" => &mut self.delta,
            "v0" => &mut self.v0,
            "v1" => &mut self.v1,
            "v2" => &mut self.v2,
            _ => return false,
        };
        *slot = value;
        true
    }

    /// Applies a flat `key = value` config on top of `self`.
    ///
    /// Blank lines and `#` comments are skipped; unknown keys and duplicate
    /// keys are errors. The result is not validated here.
    pub fn apply_config(&mut self, text: &str) -> Result<()> {
        let mut seen = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Config { line: line_no, msg: format!("expected `key = value`, got `{line}`") })?;
            let key = key.trim();
            let value: f64 = value
                .trim()
                .parse()
                .map_err(|_| Error::Config { line: line_no, msg: format!("`{}` is not a number", value.trim()) })?;
            if seen.contains(&key.to_owned()) {
                return Err(Error::Config { line: line_no, msg: format!("duplicate key `{key}`") });
            }
            if !self.set(key, value) {
                return Err(Error::Config { line: line_no, msg: format!("unknown key `{key}`") });
            }
            seen.push(key.to_owned());
        }
        Ok(())
    }

    pub fn from_config_str(text: &str) -> Result<Self> {
        let mut params = Self::default();
        params.apply_config(text)?;
        params.validate()?;
        Ok(params)
    }
}

/// Echoes the parameter set in config syntax, so it can be fed back via `--config`.
impl fmt::Display for PhysicalParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for key in PARAM_KEYS {
            writeln!(f, "{key} = {}", self.get(key).expect("known key"))?;
        }
        Ok(())
    }
}

fn key_static(key: &str) -> &'static str {
    PARAM_KEYS.iter().copied().find(|k| *k == key).unwrap_or("?")
}

fn invalid(name: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidParam { name, reason: reason.into() }
}

/// Radial quantum number n_ρ and magnetic quantum number m.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QuantumState {
    pub n_rho: u32,
    pub m: i32,
}

impl QuantumState {
    pub const fn new(n_rho: u32, m: i32) -> Self {
        Self { n_rho, m }
    }

    /// m̃ = m − α, the flux-shifted magnetic quantum number.
    pub fn m_tilde(&self, params: &PhysicalParams) -> f64 {
        f64::from(self.m) - params.alpha_ab
    }
}

impl fmt::Display for QuantumState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.n_rho, self.m)
    }
}

/// Parses `n_rho:m`, e.g. `0:1` or `2:-3`.
impl FromStr for QuantumState {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let (n, m) = s.split_once(':').ok_or_else(|| format!("expected `n_rho:m`, got `{s}`"))?;
        let n_rho = n.trim().parse().map_err(|_| format!("bad n_rho in `{s}`"))?;
        let m = m.trim().parse().map_err(|_| format!("bad m in `{s}`"))?;
        Ok(Self { n_rho, m })
    }
}
