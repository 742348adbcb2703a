use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use pdm_core::{ModelKind, PhysicalParams, QuantumState, SweepParam, WaveForm};

#[derive(Debug, Parser)]
#[command(
    name = "pdm",
    version,
    about = "Bound states of position-dependent-mass charges in PD-magnetic and Aharonov-Bohm fields"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form energies, CSV `n_rho,m,E`.
    Spectrum(SpectrumArgs),
    /// Normalized radial wavefunction, CSV `rho,R,U`.
    Wavefunction(WavefunctionArgs),
    /// Field profile, CSV `rho,S,Bz,Aphi`.
    Field(FieldArgs),
    /// Energies along one parameter, CSV `param,value,n_rho,m,E,valid`.
    Sweep(SweepArgs),
    /// Level crossings between every pair of the given states, as JSON.
    Crossings(SweepArgs),
    /// Closed forms against the finite-difference oracle. Exit 2 on disagreement.
    Verify(VerifyArgs),
    /// Accuracy of 1/ρ ≈ δ/(1 − e^{−δρ}), CSV `delta_rho,rho,exact,approx,rel_err`.
    GreeneAldrich(GreeneAldrichArgs),
}

#[derive(Debug, Args)]
pub struct ParamArgs {
    /// Flat `key = value` parameter file; flags take precedence.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long, allow_negative_numbers = true)]
    pub e: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub b0: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub mu: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub beta: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub sigma: Option<f64>,
    /// Aharonov-Bohm flux α.
    #[arg(long, alias = "alpha-ab", allow_negative_numbers = true)]
    pub alpha: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub kz: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub eta: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub delta: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub v0: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub v1: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub v2: Option<f64>,
}

impl ParamArgs {
    /// Flag values keyed like the config file.
    pub fn overrides(&self) -> [(&'static str, Option<f64>); 12] {
        [
            ("e", self.e),
            ("b0", self.b0),
            ("mu", self.mu),
            ("beta", self.beta),
            ("sigma", self.sigma),
            ("alpha_ab", self.alpha),
            ("kz", self.kz),
            ("eta", self.eta),
            ("delta", self.delta),
            ("v0", self.v0),
            ("v1", self.v1),
            ("v2", self.v2),
        ]
    }

    pub fn apply(&self, config: Option<&str>) -> pdm_core::Result<PhysicalParams> {
        let mut params = PhysicalParams::default();
        if let Some(text) = config {
            params.apply_config(text)?;
        }
        for (key, value) in self.overrides() {
            if let Some(v) = value {
                params.set(key, v);
            }
        }
        params.validate()?;
        Ok(params)
    }
}

#[derive(Debug, Args)]
pub struct Common {
    #[command(flatten)]
    pub params: ParamArgs,
    /// Write data here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long)]
    pub model: ModelKind,
    #[arg(long, default_value_t = 3)]
    pub nrho_max: u32,
    #[arg(long, default_value_t = -3, allow_negative_numbers = true)]
    pub m_min: i32,
    #[arg(long, default_value_t = 3, allow_negative_numbers = true)]
    pub m_max: i32,
}

#[derive(Debug, Args)]
pub struct WavefunctionArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long)]
    pub model: ModelKind,
    #[arg(long, default_value_t = 0)]
    pub nrho: u32,
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    pub m: i32,
    #[arg(long, default_value_t = 0.01)]
    pub rho_min: f64,
    #[arg(long, default_value_t = 20.0)]
    pub rho_max: f64,
    #[arg(long, default_value_t = 400)]
    pub points: usize,
    /// Model C closed form: `rho` or `xi`.
    #[arg(long, default_value_t = WaveForm::Rho)]
    pub form: WaveForm,
}

#[derive(Debug, Args)]
pub struct FieldArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, default_value_t = 0.1)]
    pub rho_min: f64,
    #[arg(long, default_value_t = 10.0)]
    pub rho_max: f64,
    #[arg(long, default_value_t = 100)]
    pub points: usize,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long)]
    pub model: ModelKind,
    #[arg(long)]
    pub param: SweepParam,
    #[arg(long, allow_negative_numbers = true)]
    pub from: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub to: f64,
    #[arg(long, default_value_t = pdm_core::sweeps::DEFAULT_SCAN_STEPS)]
    pub steps: usize,
    /// Comma-separated `n_rho:m` labels.
    #[arg(long, value_delimiter = ',', default_value = "0:1,1:0,2:1,0:2", allow_negative_numbers = true)]
    pub states: Vec<QuantumState>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long)]
    pub model: ModelKind,
    #[arg(long, default_value_t = 3)]
    pub nrho_max: u32,
    #[arg(long, default_value_t = -3, allow_negative_numbers = true)]
    pub m_min: i32,
    #[arg(long, default_value_t = 3, allow_negative_numbers = true)]
    pub m_max: i32,
    /// Largest accepted relative energy difference.
    #[arg(long, default_value_t = 1e-5)]
    pub tol: f64,
    /// For model C, solve the exact radial equation instead of its
    /// Greene-Aldrich form.
    #[arg(long)]
    pub exact: bool,
}

#[derive(Debug, Args)]
pub struct GreeneAldrichArgs {
    #[arg(long, default_value_t = 0.1)]
    pub delta: f64,
    #[arg(long, default_value_t = 0.01)]
    pub from: f64,
    #[arg(long, default_value_t = 2.0)]
    pub to: f64,
    #[arg(long, default_value_t = 200)]
    pub steps: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}
