//! Domain types, unit conventions, and the dimensionless normalization used
//! by every other module.
//!
//! All dynamics run in dimensionless units with the transverse dephasing rate
//! as the frequency scale. Physical (Gaussian-unit) inputs live in
//! [`PhysicalInputs`] and are converted by a thin layer here; no other module
//! touches dimensional constants.

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

/// Planck constant over 2π, erg·s (Gaussian units).
pub const HBAR_CGS: f64 = 1.054_571_817e-27;
/// Speed of light, cm/s.
pub const C_CGS: f64 = 2.997_924_58e10;

/// Default tolerance for state-physicality checks (double-precision RK4
/// drift budget at desk-scale durations).
pub const PHYSICALITY_TOL: f64 = 1e-9;

/// Macroscopic atomic state: slowly varying coherence envelope and inversion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochState {
    /// Coherence envelope R21 (dimensionless).
    pub r21: C64,
    /// Inversion W = R22 − R11, in \[-1, 1\].
    pub w: f64,
}

impl BlochState {
    pub fn new(r21: C64, w: f64) -> Self {
        Self { r21, w }
    }

    /// Ground state: W = −1, no coherence.
    pub fn ground() -> Self {
        Self { r21: C64::new(0.0, 0.0), w: -1.0 }
    }

    /// Total population W² + 4|R21|².
    pub fn population(&self) -> f64 {
        self.w * self.w + 4.0 * self.r21.norm_sqr()
    }

    /// Checks |w| ≤ 1, |r21| ≤ 1/2 and population ≤ 1 within `tol`.
    pub fn is_physical(&self, tol: f64) -> bool {
        self.w.abs() <= 1.0 + tol
            && self.r21.norm() <= 0.5 + tol
            && self.population() <= 1.0 + tol
    }
}

/// Dimensionless system parameters. Frequencies and rates are in units of the
/// transverse dephasing rate; `gamma_perp` is 1 by normalization but may be
/// set to 0 for idealized lossless runs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SystemParams {
    /// Complex refractive index of the host.
    pub n: C64,
    /// Near-dipole–dipole strength ν = 4πNμ²/(3ħ), ≥ 0.
    pub nu: f64,
    /// Pump–atom detuning ω_p − ω_a.
    pub delta: f64,
    /// Bare Rabi frequency envelope μ𝓔/ħ (complex).
    pub rabi: C64,
    /// Transverse (dipole dephasing) rate.
    pub gamma_perp: f64,
    /// Longitudinal (population relaxation) rate, ≥ 0.
    pub gamma_par: f64,
    /// Equilibrium inversion, in \[-1, 0\].
    pub w_eq: f64,
    /// Vacuum spontaneous rate Γ₀, ≥ 0.
    pub gamma0: f64,
}

impl Default for SystemParams {
    /// Vacuum host, no dipole–dipole coupling, radiative decay ratios
    /// (γ∥ = 2γ⊥ = Γ₀), ground-state equilibrium.
    fn default() -> Self {
        Self {
            n: C64::new(1.0, 0.0),
            nu: 0.0,
            delta: 0.0,
            rabi: C64::new(0.0, 0.0),
            gamma_perp: 1.0,
            gamma_par: 2.0,
            w_eq: -1.0,
            gamma0: 2.0,
        }
    }
}

impl SystemParams {
    pub fn validate(&self) -> Result<()> {
        if self.n.im < 0.0 {
            return Err(Error::Domain(format!(
                "Im(n) = {} < 0: host must be passive",
                self.n.im
            )));
        }
        for (name, v) in [
            ("nu", self.nu),
            ("gamma_perp", self.gamma_perp),
            ("gamma_par", self.gamma_par),
            ("gamma0", self.gamma0),
        ] {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::Domain(format!("{name} = {v} must be finite and ≥ 0")));
            }
        }
        if !(-1.0..=0.0).contains(&self.w_eq) {
            return Err(Error::Domain(format!("w_eq = {} outside [-1, 0]", self.w_eq)));
        }
        if !self.delta.is_finite() || !self.rabi.is_finite() || !self.n.is_finite() {
            return Err(Error::Domain("non-finite parameter".into()));
        }
        Ok(())
    }
}

/// Physical inputs in Gaussian (CGS) units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalInputs {
    /// Transition dipole moment, statC·cm.
    pub dipole_moment: f64,
    /// Number density, cm⁻³.
    pub number_density: f64,
    /// Transition angular frequency, rad/s.
    pub transition_angular_frequency: f64,
}

impl PhysicalInputs {
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("dipole_moment", self.dipole_moment),
            ("number_density", self.number_density),
            ("transition_angular_frequency", self.transition_angular_frequency),
        ] {
            if !v.is_finite() || v <= 0.0 {
                return Err(Error::Domain(format!("{name} = {v} must be finite and > 0")));
            }
        }
        Ok(())
    }
}

/// Near-dipole–dipole strength ν = 4πNμ²/(3ħ), rad/s.
pub fn ndd_strength(p: &PhysicalInputs) -> Result<f64> {
    p.validate()?;
    let mu2 = p.dipole_moment * p.dipole_moment;
    Ok(4.0 * std::f64::consts::PI * p.number_density * mu2 / (3.0 * HBAR_CGS))
}

/// Vacuum spontaneous decay rate γ = 4ω³μ²/(3ħc³), rad/s.
pub fn vacuum_decay_rate(p: &PhysicalInputs) -> Result<f64> {
    p.validate()?;
    let mu2 = p.dipole_moment * p.dipole_moment;
    let w3 = p.transition_angular_frequency.powi(3);
    Ok(4.0 * w3 * mu2 / (3.0 * HBAR_CGS * C_CGS.powi(3)))
}

/// Dimensionless (ν, Γ₀) pair for a chosen transverse rate in rad/s.
pub fn to_dimensionless(p: &PhysicalInputs, gamma_perp_rad_s: f64) -> Result<(f64, f64)> {
    if !(gamma_perp_rad_s.is_finite() && gamma_perp_rad_s > 0.0) {
        return Err(Error::Domain(format!(
            "gamma_perp_rad_s = {gamma_perp_rad_s} must be finite and > 0"
        )));
    }
    Ok((
        ndd_strength(p)? / gamma_perp_rad_s,
        vacuum_decay_rate(p)? / gamma_perp_rad_s,
    ))
}

/// Inverse of [`to_dimensionless`]: recovers (μ, N) from dimensionless
/// (ν, Γ₀) given the transition frequency and the normalizing rate.
pub fn from_dimensionless(
    nu: f64,
    gamma0: f64,
    transition_angular_frequency: f64,
    gamma_perp_rad_s: f64,
) -> Result<PhysicalInputs> {
    if nu <= 0.0 || gamma0 <= 0.0 || transition_angular_frequency <= 0.0 || gamma_perp_rad_s <= 0.0
    {
        return Err(Error::Domain("dimensionless inputs must be > 0".into()));
    }
    let w3 = transition_angular_frequency.powi(3);
    let mu2 = 3.0 * HBAR_CGS * C_CGS.powi(3) * gamma0 * gamma_perp_rad_s / (4.0 * w3);
    let mu = mu2.sqrt();
    let n_density = 3.0 * HBAR_CGS * nu * gamma_perp_rad_s / (4.0 * std::f64::consts::PI * mu2);
    Ok(PhysicalInputs {
        dipole_moment: mu,
        number_density: n_density,
        transition_angular_frequency,
    })
}
