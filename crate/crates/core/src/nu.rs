//! Nikiforov-Uvarov reduction for the family
//!
//! ```text
//! U″ + (1−ξ)/(ξ(1−ξ)) U′ + [−C + (−ã₂+ã₃+2ã₄) ξ − (ã₃+ã₄) ξ²] / (ξ(1−ξ))² U = 0,
//! C = ã₁ − ã₂ + ã₄,
//! ```
//!
//! i.e. σ(ξ) = ξ(1−ξ) and τ̃(ξ) = 1−ξ. Everything follows from the four
//! coefficients: the k₋ root of the perfect-square condition, the linear
//! π₋(ξ), the λ = λ_n quantization, and eigenfunctions
//! U = ξ^{√C} (1−ξ)^{(1+υ)/2} P_n^{(κ,υ)}(1−2ξ) with κ = 2√C, υ = √(4ã₁+1).
//!
//! Only the k₋ branch is physical. All square roots are principal; a
//! negative radicand is an error, never a complex continuation.

use crate::error::{Error, Result};
use crate::specfun::jacobi;

/// ã₁ … ã₄.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NuCoefficients {
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
    pub a4: f64,
}

/// Which root of B² = 4AC to take for k.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Minus,
    Plus,
}

/// The quantities derived from the coefficients on the k₋ branch.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NuSolution {
    pub k_minus: f64,
    pub pi_slope: f64,
    pub pi_intercept: f64,
    pub lambda: f64,
    pub kappa: f64,
    pub upsilon: f64,
}

impl NuSolution {
    /// τ′ = −2 − (κ + υ), strictly negative.
    pub fn tau_slope(&self) -> f64 {
        -2.0 - (self.kappa + self.upsilon)
    }
}

impl NuCoefficients {
    /// Checks 4ã₁ + 1 ≥ 0 and ã₁ − ã₂ + ã₄ ≥ 0.
    pub fn new(a1: f64, a2: f64, a3: f64, a4: f64) -> Result<Self> {
        let c = Self { a1, a2, a3, a4 };
        c.sqrt_c()?;
        c.half_upsilon()?;
        if !a3.is_finite() {
            return Err(Error::NegativeRadicand { what: "ã₃ (non-finite)", value: a3 });
        }
        Ok(c)
    }

    /// C = ã₁ − ã₂ + ã₄.
    pub fn c(&self) -> f64 {
        self.a1 - self.a2 + self.a4
    }

    fn sqrt_c(&self) -> Result<f64> {
        checked_sqrt("ã₁ − ã₂ + ã₄", self.c())
    }

    /// √((4ã₁+1)/4) = υ/2.
    fn half_upsilon(&self) -> Result<f64> {
        Ok(0.5 * checked_sqrt("4ã₁ + 1", 4.0 * self.a1 + 1.0)?)
    }

    /// κ = 2√(ã₁ − ã₂ + ã₄).
    pub fn kappa(&self) -> Result<f64> {
        Ok(2.0 * self.sqrt_c()?)
    }

    /// υ = √(4ã₁ + 1).
    pub fn upsilon(&self) -> Result<f64> {
        Ok(2.0 * self.half_upsilon()?)
    }

    /// √C + υ/2, the common slope appearing in π₋, τ′ and λ_n.
    fn slope_sum(&self) -> Result<f64> {
        Ok(self.sqrt_c()? + self.half_upsilon()?)
    }

    /// k₋ = −(2ã₁ − ã₂ − ã₃) − √(C(4ã₁+1)).
    pub fn k_minus(&self) -> Result<f64> {
        let root = 2.0 * self.sqrt_c()? * self.half_upsilon()?;
        Ok(-(2.0 * self.a1 - self.a2 - self.a3) - root)
    }

    /// k on the requested branch. `Plus` is refused: it puts a ξ^{−√C}
    /// factor into φ, which diverges as ρ → ∞.
    pub fn k(&self, branch: Branch) -> Result<f64> {
        match branch {
            Branch::Minus => self.k_minus(),
            Branch::Plus => Err(Error::UnphysicalBranch),
        }
    }

    /// (A, B, C) of the quadratic under the square root of π(ξ), for a given k.
    pub fn radicand_quadratic(&self, k: f64) -> (f64, f64, f64) {
        (0.25 - k + self.a3 + self.a4, k + self.a2 - self.a3 - 2.0 * self.a4, self.c())
    }

    /// π₋(ξ) = slope·ξ + intercept.
    pub fn pi_minus(&self) -> Result<(f64, f64)> {
        Ok((-0.5 - self.slope_sum()?, self.sqrt_c()?))
    }

    /// λ = k₋ + π₋′.
    pub fn lambda(&self) -> Result<f64> {
        Ok(self.k_minus()? + self.pi_minus()?.0)
    }

    /// λ_n = −nτ′ − n(n−1)σ″/2 with σ″ = −2.
    pub fn lambda_n(&self, n: u32) -> Result<f64> {
        let n = f64::from(n);
        Ok(n * (2.0 + 2.0 * self.slope_sum()?) + n * (n - 1.0))
    }

    pub fn solve(&self) -> Result<NuSolution> {
        let (pi_slope, pi_intercept) = self.pi_minus()?;
        let k_minus = self.k_minus()?;
        let sol = NuSolution {
            k_minus,
            pi_slope,
            pi_intercept,
            lambda: k_minus + pi_slope,
            kappa: self.kappa()?,
            upsilon: self.upsilon()?,
        };
        assert!(sol.tau_slope() < 0.0, "τ′ must be negative");
        let (a, _, _) = self.radicand_quadratic(k_minus);
        assert!(a >= -1e-12 * a.abs().max(1.0), "A₋ = {a} must be non-negative");
        Ok(sol)
    }

    /// U(ξ) = φ(ξ) P_n^{(κ,υ)}(1−2ξ), unnormalized.
    pub fn eigenfunction(&self, n: u32, xi: f64) -> Result<f64> {
        if !(0.0..=1.0).contains(&xi) {
            return Err(Error::InvalidGrid(format!("ξ = {xi} outside [0, 1]")));
        }
        let kappa = self.kappa()?;
        let upsilon = self.upsilon()?;
        let phi = xi.powf(0.5 * kappa) * (1.0 - xi).powf(0.5 * (1.0 + upsilon));
        Ok(phi * jacobi(n, kappa, upsilon, 1.0 - 2.0 * xi))
    }

    /// χ_n(ξ) = P_n^{(κ,υ)}(1−2ξ), the hypergeometric-type factor.
    pub fn chi(&self, n: u32, xi: f64) -> Result<f64> {
        Ok(jacobi(n, self.kappa()?, self.upsilon()?, 1.0 - 2.0 * xi))
    }

    /// ω(ξ) = ξ^κ (1−ξ)^υ, satisfying (σω)′ = τω.
    pub fn weight(&self, xi: f64) -> Result<f64> {
        if !(xi > 0.0 && xi < 1.0) {
            return Err(Error::InvalidGrid(format!("ξ = {xi} outside (0, 1)")));
        }
        Ok(xi.powf(self.kappa()?) * (1.0 - xi).powf(self.upsilon()?))
    }

    /// τ(ξ) = τ̃ + 2π₋.
    pub fn tau(&self, xi: f64) -> Result<f64> {
        let (slope, intercept) = self.pi_minus()?;
        Ok(1.0 - xi + 2.0 * (slope * xi + intercept))
    }
}

/// Solves λ(ã₃) = λ_n for ã₃ by safeguarded bisection on a geometrically
/// grown bracket. λ − λ_n is strictly increasing in ã₃.
pub fn nu_quantize(a1: f64, a2: f64, a4: f64, n: u32) -> Result<f64> {
    let base = NuCoefficients::new(a1, a2, 0.0, a4)?;
    let target = base.lambda_n(n)?;
    let residual = |a3: f64| -> f64 {
        let c = NuCoefficients { a3, ..base };
        c.lambda().expect("radicands checked") - target
    };

    let mut half_width = 1.0_f64;
    let (mut lo, mut hi) = (-half_width, half_width);
    while residual(lo) > 0.0 || residual(hi) < 0.0 {
        half_width *= 2.0;
        if half_width > 1e300 {
            return Err(Error::Bracketing { lo, hi, f_lo: residual(lo), f_hi: residual(hi) });
        }
        lo = -half_width;
        hi = half_width;
    }
    for _ in 0..2000 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if residual(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(if residual(lo).abs() <= residual(hi).abs() { lo } else { hi })
}

fn checked_sqrt(what: &'static str, value: f64) -> Result<f64> {
    if value >= 0.0 {
        Ok(value.sqrt())
    } else {
        Err(Error::NegativeRadicand { what, value })
    }
}
