use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParam { name: &'static str, reason: String },

    #[error("generator undefined at σ=2")]
    SigmaTwo,

    #[error("radius must be positive and finite, got {0}")]
    NonPositiveRadius(f64),

    #[error("closed forms require σ = 1, got σ = {0}")]
    SigmaNotOne(f64),

    #[error("negative radicand in {what}: {value}")]
    NegativeRadicand { what: &'static str, value: f64 },

    #[error("unphysical branch: k₊ violates the τ′ < 0 / normalizability requirement")]
    UnphysicalBranch,

    #[error("no bound spectrum: kz² + e²B₀²μ² = {0} must be positive")]
    NoBoundSpectrum(f64),

    #[error("state (n_rho={n_rho}, m={m}) not bound for these parameters: effective angular momentum {ell} ≤ 0")]
    NotBound { n_rho: u32, m: i32, ell: f64 },

    #[error("no real bound level: {what} = {value} is negative")]
    NoRealBoundLevel { what: &'static str, value: f64 },

    #[error("delta = 0: the ξ map is undefined, use the model A reduction")]
    ZeroDelta,

    #[error("no sign change in bracket [{lo}, {hi}]: F(lo) = {f_lo}, F(hi) = {f_hi}")]
    Bracketing { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("grid too coarse: eigenvalue shift {shift:e} between n and 2n points exceeds {tol:e}")]
    GridTooCoarse { shift: f64, tol: f64 },

    #[error("non-integrable sample: tail carries {fraction:e} of the norm")]
    DivergentTail { fraction: f64 },

    #[error("non-finite value in radial function at index {0}")]
    NonFinite(usize),

    #[error("states must differ")]
    SameState,

    #[error("invalid sweep: {0}")]
    InvalidSweep(String),

    #[error("config line {line}: {msg}")]
    Config { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
