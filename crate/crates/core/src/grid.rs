//! Discretized radial axis and sampled radial functions.
//!
//! A grid is uniform either in ρ or in t = ln ρ. The logarithmic variant
//! resolves the ρ^{1/2+ℓ} behaviour at the origin without wasting points in
//! the exponential tail.

use crate::error::{Error, Result};

pub const MIN_POINTS: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spacing {
    Uniform,
    Logarithmic,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialGrid {
    rho_min: f64,
    rho_max: f64,
    n_points: usize,
    spacing: Spacing,
}

impl RadialGrid {
    pub fn new(rho_min: f64, rho_max: f64, n_points: usize, spacing: Spacing) -> Result<Self> {
        if !(rho_min > 0.0 && rho_min.is_finite()) {
            return Err(Error::InvalidGrid(format!("rho_min must be positive, got {rho_min}")));
        }
        if !(rho_max > rho_min && rho_max.is_finite()) {
            return Err(Error::InvalidGrid(format!("rho_max = {rho_max} must exceed rho_min = {rho_min}")));
        }
        if n_points < MIN_POINTS {
            return Err(Error::InvalidGrid(format!("need at least {MIN_POINTS} points, got {n_points}")));
        }
        Ok(Self { rho_min, rho_max, n_points, spacing })
    }

    pub fn uniform(rho_min: f64, rho_max: f64, n_points: usize) -> Result<Self> {
        Self::new(rho_min, rho_max, n_points, Spacing::Uniform)
    }

    pub fn logarithmic(rho_min: f64, rho_max: f64, n_points: usize) -> Result<Self> {
        Self::new(rho_min, rho_max, n_points, Spacing::Logarithmic)
    }

    pub fn rho_min(&self) -> f64 {
        self.rho_min
    }

    pub fn rho_max(&self) -> f64 {
        self.rho_max
    }

    pub fn len(&self) -> usize {
        self.n_points
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn spacing(&self) -> Spacing {
        self.spacing
    }

    /// Step in the native coordinate (ρ or ln ρ).
    pub fn step(&self) -> f64 {
        let (a, b) = self.native_bounds();
        (b - a) / (self.n_points - 1) as f64
    }

    fn native_bounds(&self) -> (f64, f64) {
        match self.spacing {
            Spacing::Uniform => (self.rho_min, self.rho_max),
            Spacing::Logarithmic => (self.rho_min.ln(), self.rho_max.ln()),
        }
    }

    pub fn node(&self, i: usize) -> f64 {
        debug_assert!(i < self.n_points);
        if i + 1 == self.n_points {
            return self.rho_max;
        }
        let (a, _) = self.native_bounds();
        let x = a + self.step() * i as f64;
        match self.spacing {
            Spacing::Uniform => x,
            Spacing::Logarithmic => x.exp(),
        }
    }

    pub fn nodes(&self) -> Vec<f64> {
        (0..self.n_points).map(|i| self.node(i)).collect()
    }

    /// dρ/dx at node `i`, x being the native coordinate.
    pub fn jacobian(&self, i: usize) -> f64 {
        match self.spacing {
            Spacing::Uniform => 1.0,
            Spacing::Logarithmic => self.node(i),
        }
    }

    /// Same interval, half the step: `2n − 1` points, every old node kept.
    pub fn refined(&self) -> Self {
        Self { n_points: 2 * self.n_points - 1, ..*self }
    }

    pub fn sample(&self, f: impl Fn(f64) -> f64) -> Result<RadialFunction> {
        RadialFunction::new(*self, self.nodes().into_iter().map(f).collect())
    }
}

/// Values of U(ρ) or R(ρ) on a [`RadialGrid`].
#[derive(Debug, Clone, PartialEq)]
pub struct RadialFunction {
    grid: RadialGrid,
    values: Vec<f64>,
}

impl RadialFunction {
    pub fn new(grid: RadialGrid, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::InvalidGrid(format!("{} values for a grid of {} points", values.len(), grid.len())));
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite(i));
        }
        Ok(Self { grid, values })
    }

    pub fn grid(&self) -> &RadialGrid {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn scaled(mut self, factor: f64) -> Self {
        self.values.iter_mut().for_each(|v| *v *= factor);
        self
    }
}
