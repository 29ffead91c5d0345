//! Closed-form local-field and dielectric-renormalization factors.
//!
//! Everything here is a small pure function of the host refractive index:
//! the Lorentz enhancement factor, the Onsager (real-cavity) factor, the
//! Clausius–Mossotti relation, the polarization envelope, and the two
//! spontaneous-emission scalings (virtual vs real cavity).

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::quantities::SystemParams;

/// Lorentz local-field enhancement ℓ = (n² + 2)/3.
pub fn lorentz_factor(n: C64) -> C64 {
    (n * n + 2.0) / 3.0
}

/// Onsager real-cavity factor 3n²/(2n² + 1).
pub fn onsager_factor(n: C64) -> Result<C64> {
    let denom = 2.0 * n * n + 1.0;
    if denom.norm() < 1e-300 {
        return Err(Error::Domain(format!("onsager factor singular at n = {n}")));
    }
    Ok(3.0 * n * n / denom)
}

/// The local-field factors of a host with index `n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnhancementFactors {
    pub lorentz: C64,
    pub onsager: C64,
    pub index: C64,
}

pub fn enhancement_factors(n: C64) -> Result<EnhancementFactors> {
    Ok(EnhancementFactors {
        lorentz: lorentz_factor(n),
        onsager: onsager_factor(n)?,
        index: n,
    })
}

/// Inverse Clausius–Mossotti relation: given x = (4π/3) p N_d, returns
/// ε = (1 + 2x)/(1 − x). Diverges at x = 1 (polarization catastrophe).
pub fn clausius_mossotti(p_n_scaled: f64) -> Result<f64> {
    if !p_n_scaled.is_finite() {
        return Err(Error::Domain("clausius_mossotti: non-finite input".into()));
    }
    if p_n_scaled >= 1.0 {
        return Err(Error::Domain(format!(
            "clausius_mossotti diverges: (4π/3) p N = {p_n_scaled} ≥ 1"
        )));
    }
    Ok((1.0 + 2.0 * p_n_scaled) / (1.0 - p_n_scaled))
}

/// Total polarization envelope 𝓟 = ((ε−1)/4π) 𝓔 + ((ε+2)/3)·2Nμ·R21, with
/// ε = n² and the resonant prefactor 2Nμ expressed through ν (units with
/// μ = ħ = 1, so 2Nμ = 3ν/2π).
pub fn polarization_envelope(e_field: C64, r21: C64, params: &SystemParams) -> C64 {
    let eps = params.n * params.n;
    let linear = (eps - 1.0) / (4.0 * std::f64::consts::PI) * e_field;
    let two_n_mu = 3.0 * params.nu / (2.0 * std::f64::consts::PI);
    let resonant = (eps + 2.0) / 3.0 * two_n_mu * r21;
    linear + resonant
}

/// Virtual-cavity (Lorentz) spontaneous-rate ratio Γ/Γ₀ = n ℓ²; real n ≥ 1.
pub fn decay_virtual_cavity(n: f64) -> Result<f64> {
    check_rate_index(n)?;
    let l = (n * n + 2.0) / 3.0;
    Ok(n * l * l)
}

/// Real-cavity (Onsager) spontaneous-rate ratio Γ/Γ₀ = n (3n²/(2n²+1))²;
/// real n ≥ 1.
pub fn decay_real_cavity(n: f64) -> Result<f64> {
    check_rate_index(n)?;
    let f = 3.0 * n * n / (2.0 * n * n + 1.0);
    Ok(n * f * f)
}

fn check_rate_index(n: f64) -> Result<()> {
    if !n.is_finite() || n < 1.0 {
        return Err(Error::Domain(format!(
            "decay ratios require a real host index ≥ 1, got {n}"
        )));
    }
    Ok(())
}
