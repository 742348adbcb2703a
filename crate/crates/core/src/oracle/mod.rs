//! Finite-difference verification of the closed forms.
//!
//! The energy enters the radial potential through −g(ρ)E while the spectral
//! parameter is pinned at Ẽ = −(kz² + e²B₀²μ²). [`oracle_energy`] therefore
//! solves F(E) = Ẽ_n(E) − Ẽ = 0 in an outer bisection. Because the
//! potential is affine in E with a positive mass term, the number of
//! discrete eigenvalues below Ẽ is nondecreasing in E, and the sign of F is
//! read off a single Sturm count.

mod pencil;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grid::{RadialFunction, RadialGrid, Spacing};
use crate::models::{ModelKind, RadialEquation, RadialProblem};
use crate::params::{PhysicalParams, QuantumState};

use pencil::{bisect, Pencil};

pub const DEFAULT_POINTS: usize = 4000;

/// Lowest `count` eigenvalues of −U″ + W U = λU, ascending.
pub fn fd_eigenvalues(potential: impl Fn(f64) -> f64, grid: &RadialGrid, count: usize) -> Result<Vec<f64>> {
    if count == 0 {
        return Err(Error::InvalidGrid("count must be at least 1".into()));
    }
    let pencil = Pencil::new(grid, |r| (potential(r), 0.0))?;
    (0..count).map(|i| pencil.eigenvalue(0.0, i)).collect()
}

/// [`fd_eigenvalues`], rejected with [`Error::GridTooCoarse`] when refining
/// the grid moves any eigenvalue by more than `tol` (relative to max(1, |λ|)).
pub fn fd_eigenvalues_checked(
    potential: impl Fn(f64) -> f64,
    grid: &RadialGrid,
    count: usize,
    tol: f64,
) -> Result<Vec<f64>> {
    let coarse = fd_eigenvalues(&potential, grid, count)?;
    let fine = fd_eigenvalues(&potential, &grid.refined(), count)?;
    let shift = coarse.iter().zip(&fine).map(|(a, b)| (a - b).abs() / a.abs().max(1.0)).fold(0.0, f64::max);
    if shift > tol {
        return Err(Error::GridTooCoarse { shift, tol });
    }
    Ok(coarse)
}

/// The `index`-th discrete eigenpair; the vector is U sampled on `grid`
/// with max|U| = 1.
pub fn fd_eigenpair(potential: impl Fn(f64) -> f64, grid: &RadialGrid, index: usize) -> Result<(f64, RadialFunction)> {
    let pencil = Pencil::new(grid, |r| (potential(r), 0.0))?;
    let lambda = pencil.eigenvalue(0.0, index)?;
    let x = pencil.eigenvector(0.0, lambda);
    let values = match grid.spacing() {
        Spacing::Uniform => x,
        Spacing::Logarithmic => grid.nodes().iter().zip(x).map(|(r, y)| r.sqrt() * y).collect(),
    };
    let f = RadialFunction::new(*grid, values)?;
    let max = f.max_abs();
    Ok((lambda, f.scaled(1.0 / max)))
}

/// Grid and accuracy settings of the energy oracle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleConfig {
    pub spacing: Spacing,
    pub n_points: usize,
    /// Combine the grid with its refinement as (4E_{h/2} − E_h)/3.
    pub richardson: bool,
    /// Outer radius in units of the decay length 1/√(−Ẽ); grown
    /// automatically until the energy no longer moves.
    pub extent: f64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self { spacing: Spacing::Logarithmic, n_points: DEFAULT_POINTS, richardson: true, extent: 25.0 }
    }
}

impl OracleConfig {
    /// Uniform Dirichlet grid with ρ_min = ρ_max/n_points and no extrapolation.
    pub fn uniform() -> Self {
        Self { spacing: Spacing::Uniform, richardson: false, ..Self::default() }
    }

    fn grid(&self, rho_max: f64, decay: f64) -> Result<RadialGrid> {
        match self.spacing {
            Spacing::Uniform => RadialGrid::uniform(rho_max / self.n_points as f64, rho_max, self.n_points),
            Spacing::Logarithmic => RadialGrid::logarithmic(1e-8 / decay, rho_max, self.n_points),
        }
    }
}

/// Outcome of an oracle solve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OracleEnergy {
    pub energy: f64,
    /// Energy on the base grid alone.
    pub coarse: f64,
    pub rho_max: f64,
    pub n_points: usize,
}

/// Solves for E on the exact radial equation of `kind` within `bracket`.
pub fn oracle_energy(
    kind: ModelKind,
    state: &QuantumState,
    params: &PhysicalParams,
    bracket: (f64, f64),
) -> Result<f64> {
    let problem = RadialProblem::new(kind, state.m, params, RadialEquation::Exact)?;
    Ok(solve_energy(&problem, state.n_rho, Some(bracket), &OracleConfig::default())?.energy)
}

/// Full-control oracle solve. Without a bracket one is grown geometrically
/// around E = 0.
pub fn solve_energy(
    problem: &RadialProblem,
    n_rho: u32,
    bracket: Option<(f64, f64)>,
    config: &OracleConfig,
) -> Result<OracleEnergy> {
    let target = problem.target();
    if !(target < 0.0) {
        return Err(Error::NoBoundSpectrum(-target));
    }
    let decay = (-target).sqrt();
    let n = n_rho as usize;
    let rho_max = (config.extent + 4.0 * f64::from(n_rho)) / decay;

    let mut grid = config.grid(rho_max, decay)?;
    let pencil = Pencil::new(&grid, |r| problem.terms(r))?;
    let bracket = match bracket {
        Some(b) => check_bracket(&pencil, n, target, b)?,
        None => grow_bracket(&pencil, n, target)?,
    };
    let mut energy = root(&pencil, n, target, bracket);

    for _ in 0..12 {
        let wider = widen(&grid, 1.5)?;
        let wide_pencil = Pencil::new(&wider, |r| problem.terms(r))?;
        let b = grow_bracket(&wide_pencil, n, target)?;
        let e = root(&wide_pencil, n, target, b);
        let converged = (e - energy).abs() <= 1e-11 * energy.abs().max(1.0);
        grid = wider;
        energy = e;
        if converged {
            break;
        }
    }

    let coarse = energy;
    if config.richardson {
        let fine_grid = grid.refined();
        let fine = Pencil::new(&fine_grid, |r| problem.terms(r))?;
        let b = grow_bracket(&fine, n, target)?;
        let e_fine = root(&fine, n, target, b);
        energy = (4.0 * e_fine - coarse) / 3.0;
    }
    Ok(OracleEnergy { energy, coarse, rho_max: grid.rho_max(), n_points: grid.len() })
}

/// Same step and inner radius, outer radius scaled by `factor`.
fn widen(grid: &RadialGrid, factor: f64) -> Result<RadialGrid> {
    let rho_max = factor * grid.rho_max();
    let span = match grid.spacing() {
        Spacing::Uniform => rho_max - grid.rho_min(),
        Spacing::Logarithmic => (rho_max / grid.rho_min()).ln(),
    };
    let intervals = (span / grid.step()).ceil();
    let rho_max = match grid.spacing() {
        Spacing::Uniform => grid.rho_min() + intervals * grid.step(),
        Spacing::Logarithmic => grid.rho_min() * (intervals * grid.step()).exp(),
    };
    RadialGrid::new(grid.rho_min(), rho_max, intervals as usize + 1, grid.spacing())
}

/// F(E) = Ẽ_n(E) − Ẽ on `grid`.
pub fn oracle_residual_function(problem: &RadialProblem, n_rho: u32, grid: &RadialGrid, energy: f64) -> Result<f64> {
    let pencil = Pencil::new(grid, |r| problem.terms(r))?;
    Ok(pencil.eigenvalue(energy, n_rho as usize)? - problem.target())
}

/// The oracle grid used by [`solve_energy`] before any widening.
pub fn default_grid(problem: &RadialProblem, n_rho: u32, config: &OracleConfig) -> Result<RadialGrid> {
    let decay = problem.params.binding_scale();
    config.grid((config.extent + 4.0 * f64::from(n_rho)) / decay, decay)
}

/// F(E) ≥ 0 ⇔ at most n eigenvalues lie below Ẽ.
fn f_nonnegative(pencil: &Pencil, n: usize, target: f64, energy: f64) -> bool {
    pencil.count_below(energy, target) <= n
}

fn check_bracket(pencil: &Pencil, n: usize, target: f64, (lo, hi): (f64, f64)) -> Result<(f64, f64)> {
    if !(lo < hi) || !f_nonnegative(pencil, n, target, lo) || f_nonnegative(pencil, n, target, hi) {
        let f = |e: f64| pencil.eigenvalue(e, n).map(|l| l - target).unwrap_or(f64::NAN);
        return Err(Error::Bracketing { lo, hi, f_lo: f(lo), f_hi: f(hi) });
    }
    Ok((lo, hi))
}

fn grow_bracket(pencil: &Pencil, n: usize, target: f64) -> Result<(f64, f64)> {
    let (mut lo, mut hi) = (-1.0, 1.0);
    while !f_nonnegative(pencil, n, target, lo) {
        hi = lo;
        lo *= 2.0;
        if lo < -1e12 {
            return Err(Error::Bracketing { lo, hi, f_lo: f64::NAN, f_hi: f64::NAN });
        }
    }
    while f_nonnegative(pencil, n, target, hi) {
        lo = hi;
        hi *= 2.0;
        if hi > 1e12 {
            return Err(Error::Bracketing { lo, hi, f_lo: f64::NAN, f_hi: f64::NAN });
        }
    }
    Ok((lo, hi))
}

fn root(pencil: &Pencil, n: usize, target: f64, (lo, hi): (f64, f64)) -> f64 {
    bisect(lo, hi, |e| !f_nonnegative(pencil, n, target, e))
}

/// Max-norm of (−U″ + (W − Ẽ)U)/max|U| over interior nodes, with
/// three-point central differences in the grid's native coordinate.
pub fn residual(f: &RadialFunction, potential: impl Fn(f64) -> f64, e_tilde: f64) -> f64 {
    residual_with(f, potential, e_tilde, Stencil::ThreePoint)
}

/// As [`residual`] with a five-point fourth-order second derivative.
pub fn residual_high_order(f: &RadialFunction, potential: impl Fn(f64) -> f64, e_tilde: f64) -> f64 {
    residual_with(f, potential, e_tilde, Stencil::FivePoint)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Stencil {
    ThreePoint,
    FivePoint,
}

fn residual_with(f: &RadialFunction, potential: impl Fn(f64) -> f64, e_tilde: f64, stencil: Stencil) -> f64 {
    let grid = f.grid();
    let nodes = grid.nodes();
    let h = grid.step();
    let log = grid.spacing() == Spacing::Logarithmic;
    // On a log grid the unknown is y = U/√ρ.
    let y: Vec<f64> =
        if log { f.values().iter().zip(&nodes).map(|(u, r)| u / r.sqrt()).collect() } else { f.values().to_vec() };
    let scale = f.max_abs();
    if scale == 0.0 {
        return 0.0;
    }
    let reach = match stencil {
        Stencil::ThreePoint => 1,
        Stencil::FivePoint => 2,
    };
    let mut worst = 0.0f64;
    for i in reach..y.len() - reach {
        let second = match stencil {
            Stencil::ThreePoint => (y[i + 1] - 2.0 * y[i] + y[i - 1]) / (h * h),
            Stencil::FivePoint => {
                (-y[i + 2] + 16.0 * y[i + 1] - 30.0 * y[i] + 16.0 * y[i - 1] - y[i - 2]) / (12.0 * h * h)
            }
        };
        let rho = nodes[i];
        let w = potential(rho) - e_tilde;
        let r = if log { (-second + (rho * rho * w + 0.25) * y[i]) / rho.powf(1.5) } else { -second + w * y[i] };
        worst = worst.max(r.abs());
    }
    worst / scale
}

/// Strict sign changes, skipping values below 1e−12·max|f|.
pub fn node_count(f: &RadialFunction) -> usize {
    let floor = 1e-12 * f.max_abs();
    let mut last = 0.0;
    let mut count = 0;
    for &v in f.values() {
        if v.abs() <= floor {
            continue;
        }
        if last != 0.0 && v.signum() != last {
            count += 1;
        }
        last = v.signum();
    }
    count
}
