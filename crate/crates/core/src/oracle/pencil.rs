//! Second-order finite differences of −U″ + W U = λ U as a symmetric
//! tridiagonal pencil (T, D), with Sturm counts from the LDLᵀ pivots.
//!
//! On a uniform grid the unknowns are U at the nodes, D = I, and U vanishes
//! one step beyond either end. On a logarithmic grid, t = ln ρ and
//! y = U/√ρ turn the equation into −y_tt + (ρ²W + 1/4) y = λ ρ² y; the left
//! end uses the local power law y ∝ e^{st}, s = √(ρ₀²W(ρ₀) + 1/4), as a
//! ghost value, the right end is Dirichlet.

use crate::error::{Error, Result};
use crate::grid::{RadialGrid, Spacing};

/// Discretized pencil for a potential of the form W = base − E·mass.
#[derive(Debug, Clone)]
pub(crate) struct Pencil {
    spacing: Spacing,
    h: f64,
    /// weight·base + shift
    p: Vec<f64>,
    /// weight·mass
    q: Vec<f64>,
    /// diagonal of D
    w: Vec<f64>,
}

impl Pencil {
    pub(crate) fn new(grid: &RadialGrid, terms: impl Fn(f64) -> (f64, f64)) -> Result<Self> {
        let n = grid.len();
        let mut p = Vec::with_capacity(n);
        let mut q = Vec::with_capacity(n);
        let mut w = Vec::with_capacity(n);
        for (i, rho) in grid.nodes().into_iter().enumerate() {
            let (base, mass) = terms(rho);
            if !(base.is_finite() && mass.is_finite()) {
                return Err(Error::NonFinite(i));
            }
            let (weight, shift) = match grid.spacing() {
                Spacing::Uniform => (1.0, 0.0),
                Spacing::Logarithmic => (rho * rho, 0.25),
            };
            p.push(weight * base + shift);
            q.push(weight * mass);
            w.push(weight);
        }
        Ok(Self { spacing: grid.spacing(), h: grid.step(), p, q, w })
    }

    pub(crate) fn len(&self) -> usize {
        self.p.len()
    }

    fn off(&self) -> f64 {
        -1.0 / (self.h * self.h)
    }

    /// Diagonal entry of T(E) at row `i`.
    fn diag(&self, i: usize, energy: f64) -> f64 {
        let potential = self.p[i] - energy * self.q[i];
        let kinetic = 2.0 / (self.h * self.h);
        if i == 0 && self.spacing == Spacing::Logarithmic {
            let s = potential.max(0.0).sqrt();
            kinetic - (-s * self.h).exp() / (self.h * self.h) + potential
        } else {
            kinetic + potential
        }
    }

    /// Number of eigenvalues of T(E) − λD below zero.
    pub(crate) fn count_below(&self, energy: f64, lambda: f64) -> usize {
        let off2 = self.off() * self.off();
        let tiny = f64::MIN_POSITIVE.sqrt();
        let mut count = 0;
        let mut pivot = 1.0;
        for i in 0..self.len() {
            let d = self.diag(i, energy) - lambda * self.w[i];
            pivot = if i == 0 { d } else { d - off2 / pivot };
            if pivot == 0.0 {
                pivot = -tiny;
            }
            if pivot < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// The `index`-th (0-based) eigenvalue λ of T(E) − λD by bisection.
    pub(crate) fn eigenvalue(&self, energy: f64, index: usize) -> Result<f64> {
        let mut lo = -1.0;
        while self.count_below(energy, lo) > index {
            lo *= 2.0;
            if !lo.is_finite() {
                return Err(Error::InvalidGrid("spectrum unbounded below".into()));
            }
        }
        let mut hi = 1.0;
        while self.count_below(energy, hi) <= index {
            hi *= 2.0;
            if !hi.is_finite() {
                return Err(Error::InvalidGrid(format!("fewer than {} eigenvalues", index + 1)));
            }
        }
        Ok(bisect(lo, hi, |l| self.count_below(energy, l) > index))
    }

    /// Eigenvector of T(E) − λD for an accurate eigenvalue, by inverse
    /// iteration, returned in the grid's native unknowns.
    pub(crate) fn eigenvector(&self, energy: f64, lambda: f64) -> Vec<f64> {
        let n = self.len();
        let off = self.off();
        let shift = lambda + 1e-13 * lambda.abs().max(1.0);
        let diag: Vec<f64> = (0..n).map(|i| self.diag(i, energy) - shift * self.w[i]).collect();
        let mut x = vec![1.0; n];
        for _ in 0..4 {
            let rhs: Vec<f64> = x.iter().zip(&self.w).map(|(v, w)| v * w).collect();
            x = solve_tridiagonal(&diag, off, &rhs);
            let max = x.iter().fold(0.0f64, |m, v| m.max(v.abs()));
            x.iter_mut().for_each(|v| *v /= max);
        }
        x
    }
}

/// Smallest `x` in (lo, hi] with `above(x)`, to machine resolution.
/// `above` must be monotone, false at `lo` and true at `hi`.
pub(crate) fn bisect(mut lo: f64, mut hi: f64, above: impl Fn(f64) -> bool) -> f64 {
    loop {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi || hi - lo <= 1e-15 * mid.abs().max(1e-8) {
            return 0.5 * (lo + hi);
        }
        if above(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
}

/// Thomas algorithm for a symmetric tridiagonal system with constant off-diagonal.
fn solve_tridiagonal(diag: &[f64], off: f64, rhs: &[f64]) -> Vec<f64> {
    let n = diag.len();
    let tiny = f64::MIN_POSITIVE.sqrt();
    let mut c = vec![0.0; n];
    let mut d = vec![0.0; n];
    let mut denom = if diag[0] == 0.0 { tiny } else { diag[0] };
    c[0] = off / denom;
    d[0] = rhs[0] / denom;
    for i in 1..n {
        denom = diag[i] - off * c[i - 1];
        if denom == 0.0 {
            denom = tiny;
        }
        c[i] = off / denom;
        d[i] = (rhs[i] - off * d[i - 1]) / denom;
    }
    let mut x = vec![0.0; n];
    x[n - 1] = d[n - 1];
    for i in (0..n - 1).rev() {
        x[i] = d[i] - c[i] * x[i + 1];
    }
    x
}
