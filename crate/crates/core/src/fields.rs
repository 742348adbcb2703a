//! The PD-magnetic field B = B₀ μ/ρ^σ ẑ, its generating function S(ρ), and the
//! azimuthal vector potential including the Aharonov-Bohm line.
//!
//! The gauge is fixed: A_φ = (B₀/2) ρ S(ρ) + α/(eρ). Only the first term has a
//! curl; B does not depend on β even though S does.

use crate::error::{Error, Result};
use crate::params::PhysicalParams;

/// One sample of the field quantities at radius `rho`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldSample {
    pub rho: f64,
    pub s: f64,
    pub b_z: f64,
    pub a_phi: f64,
}

pub(crate) fn check_rho(rho: f64) -> Result<()> {
    if rho > 0.0 && rho.is_finite() {
        Ok(())
    } else {
        Err(Error::NonPositiveRadius(rho))
    }
}

fn check_sigma(params: &PhysicalParams) -> Result<()> {
    if params.sigma == 2.0 {
        Err(Error::SigmaTwo)
    } else {
        Ok(())
    }
}

/// S(ρ) = (2μ/(2−σ)) ρ^{−σ} + β/ρ².
pub fn shape_function(rho: f64, params: &PhysicalParams) -> Result<f64> {
    check_rho(rho)?;
    check_sigma(params)?;
    Ok(shape_unchecked(rho, params))
}

#[inline]
pub(crate) fn shape_unchecked(rho: f64, params: &PhysicalParams) -> f64 {
    2.0 * params.mu / (2.0 - params.sigma) * rho.powf(-params.sigma) + params.beta / (rho * rho)
}

/// B_z(ρ) = B₀ μ / ρ^σ. Defined for every σ, including σ = 2.
pub fn magnetic_field(rho: f64, params: &PhysicalParams) -> Result<f64> {
    check_rho(rho)?;
    Ok(params.b0 * params.mu * rho.powf(-params.sigma))
}

/// Total azimuthal vector potential A_φ = (B₀/2) ρ S(ρ) + α/(eρ).
pub fn vector_potential(rho: f64, params: &PhysicalParams) -> Result<f64> {
    check_rho(rho)?;
    check_sigma(params)?;
    Ok(field_part(rho, params) + params.alpha_ab / (params.e * rho))
}

/// The curl-carrying part A₁ of the vector potential.
fn field_part(rho: f64, params: &PhysicalParams) -> f64 {
    0.5 * params.b0 * rho * shape_unchecked(rho, params)
}

pub fn sample(rho: f64, params: &PhysicalParams) -> Result<FieldSample> {
    Ok(FieldSample {
        rho,
        s: shape_function(rho, params)?,
        b_z: magnetic_field(rho, params)?,
        a_phi: vector_potential(rho, params)?,
    })
}

/// |(1/ρ) d(ρ A₁)/dρ − B_z| with a central difference of step `h`.
///
/// The Aharonov-Bohm part is curl-free away from the origin and left out.
pub fn verify_curl(rho: f64, params: &PhysicalParams, h: f64) -> Result<f64> {
    check_rho(rho)?;
    check_sigma(params)?;
    if !(h > 0.0 && rho - h > 0.0) {
        return Err(Error::InvalidGrid(format!("curl step h = {h} must satisfy 0 < h < rho = {rho}")));
    }
    let flux = |r: f64| r * field_part(r, params);
    let curl = (flux(rho + h) - flux(rho - h)) / (2.0 * h) / rho;
    Ok((curl - magnetic_field(rho, params)?).abs())
}

/// [`verify_curl`] with the default relative step 1e−4·ρ.
pub fn verify_curl_default(rho: f64, params: &PhysicalParams) -> Result<f64> {
    verify_curl(rho, params, 1e-4 * rho)
}
