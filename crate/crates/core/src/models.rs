//! The four equation-of-motion variants for dielectric-embedded two-level
//! atoms, encoded as one generic kernel plus a per-model coefficient set.
//!
//! The four models differ only in how the host index enters the
//! inversion-dependent frequency shift, the drive, and the decay rates:
//!
//! | model                  | shift | field | decay scaling |
//! |------------------------|-------|-------|---------------|
//! | classical Lorentz      | ℓ     | ℓ     | phenomenological γ⊥, γ∥ |
//! | macroscopic QED        | n     | 1     | n·Γ₀          |
//! | macroscopic QED + ℓ    | nℓ²   | ℓ     | nℓ²·Γ₀        |
//! | microscopic QED        | Re ℓ  | ℓ     | none (Im ℓ terms instead) |
//!
//! `model_coefficients` is the only model-specific code; the right-hand side
//! is a single function of the coefficients, which makes cross-model
//! comparisons structural rather than incidental.

use num_complex::Complex64 as C64;

use crate::localfield::lorentz_factor;
use crate::quantities::{BlochState, SystemParams};

/// The model selector. A closed enumeration: every kernel dispatch is total.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModelKind {
    /// Lorentz local-field condition applied to the optical Bloch equations.
    ClassicalLorentz,
    /// Weisskopf–Wigner theory on the macroscopically quantized field.
    MacroscopicQed,
    /// Same, with the ad hoc local-field factor on each dipole moment.
    MacroscopicQedLocalField,
    /// Two-species microscopic QED with the host eliminated.
    MicroscopicQed,
}

impl ModelKind {
    pub const ALL: [ModelKind; 4] = [
        ModelKind::ClassicalLorentz,
        ModelKind::MacroscopicQed,
        ModelKind::MacroscopicQedLocalField,
        ModelKind::MicroscopicQed,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ModelKind::ClassicalLorentz => "classical",
            ModelKind::MacroscopicQed => "macroscopic",
            ModelKind::MacroscopicQedLocalField => "macroscopic-local-field",
            ModelKind::MicroscopicQed => "microscopic",
        }
    }
}

/// Sign convention for the Im(ℓ) coherence-damping term of the microscopic
/// model. `Paper` keeps the printed sign; `Expansion` uses the sign obtained
/// by expanding −iℓνWR21 with complex ℓ, which conserves W² + 4|R21|²
/// exactly. The two differ only when Im(ℓ) ≠ 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SignConvention {
    #[default]
    Paper,
    Expansion,
}

/// Per-model enhancement factors and decay rates; fully parameterizes the
/// generic kernel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelCoefficients {
    /// Multiplies νW in the detuning.
    pub shift_factor: C64,
    /// Multiplies the bare Rabi frequency.
    pub field_factor: C64,
    /// Coherence decay rate, ≥ 0.
    pub transverse_decay: f64,
    /// Inversion relaxation rate, ≥ 0.
    pub longitudinal_decay: f64,
    /// Inversion relaxation target.
    pub w_relax_target: f64,
    /// Coefficient of the ℓ_i ν W R21 coherence term (microscopic only).
    pub extra_coherence_damp: f64,
    /// Coefficient of the 4 ℓ_i ν |R21|² inversion term (microscopic only).
    pub extra_inversion_damp: f64,
}

/// Reads the coefficient set of `kind` off the corresponding equations.
/// The macroscopic decay scalings use the real part of the index; complex
/// hosts are the microscopic model's domain.
pub fn model_coefficients(kind: ModelKind, params: &SystemParams) -> ModelCoefficients {
    let n = params.n;
    let l = lorentz_factor(n);
    match kind {
        ModelKind::ClassicalLorentz => ModelCoefficients {
            shift_factor: l,
            field_factor: l,
            transverse_decay: params.gamma_perp,
            longitudinal_decay: params.gamma_par,
            w_relax_target: params.w_eq,
            extra_coherence_damp: 0.0,
            extra_inversion_damp: 0.0,
        },
        ModelKind::MacroscopicQed => ModelCoefficients {
            shift_factor: n,
            field_factor: C64::new(1.0, 0.0),
            transverse_decay: n.re * params.gamma0 / 2.0,
            longitudinal_decay: n.re * params.gamma0,
            w_relax_target: -1.0,
            extra_coherence_damp: 0.0,
            extra_inversion_damp: 0.0,
        },
        ModelKind::MacroscopicQedLocalField => {
            let nl2 = n * l * l;
            ModelCoefficients {
                shift_factor: nl2,
                field_factor: l,
                transverse_decay: nl2.re * params.gamma0 / 2.0,
                longitudinal_decay: nl2.re * params.gamma0,
                w_relax_target: -1.0,
                extra_coherence_damp: 0.0,
                extra_inversion_damp: 0.0,
            }
        }
        ModelKind::MicroscopicQed => ModelCoefficients {
            shift_factor: C64::new(l.re, 0.0),
            field_factor: l,
            transverse_decay: 0.0,
            longitudinal_decay: 0.0,
            w_relax_target: -1.0,
            extra_coherence_damp: l.im,
            extra_inversion_damp: l.im,
        },
    }
}

/// A precomputed right-hand-side kernel: model coefficients plus the shared
/// parameters, ready for repeated evaluation inside an integrator.
#[derive(Debug, Clone, Copy)]
pub struct Kernel {
    coeffs: ModelCoefficients,
    nu: f64,
    delta: f64,
    /// +1 for the paper sign of the ℓ_i coherence term, −1 for expansion.
    coherence_damp_sign: f64,
}

impl Kernel {
    pub fn new(kind: ModelKind, params: &SystemParams) -> Self {
        Self::with_convention(kind, SignConvention::default(), params)
    }

    pub fn with_convention(
        kind: ModelKind,
        convention: SignConvention,
        params: &SystemParams,
    ) -> Self {
        Self {
            coeffs: model_coefficients(kind, params),
            nu: params.nu,
            delta: params.delta,
            coherence_damp_sign: match convention {
                SignConvention::Paper => 1.0,
                SignConvention::Expansion => -1.0,
            },
        }
    }

    pub fn coefficients(&self) -> &ModelCoefficients {
        &self.coeffs
    }

    /// Time derivative (dR21/dt, dW/dt) at `state` under drive envelope `rabi`.
    pub fn eval(&self, state: &BlochState, rabi: C64) -> (C64, f64) {
        let c = &self.coeffs;
        let r = state.r21;
        let w = state.w;
        let drive = c.field_factor * rabi;

        let detuning = C64::new(self.delta, 0.0) - c.shift_factor * (self.nu * w);
        let mut dr = C64::i() * detuning * r
            - C64::i() * 0.5 * drive * w
            - c.transverse_decay * r;
        if c.extra_coherence_damp != 0.0 {
            dr -= self.coherence_damp_sign * c.extra_coherence_damp * self.nu * w * r;
        }

        let mut dw = -2.0 * (drive * r.conj()).im
            - c.longitudinal_decay * (w - c.w_relax_target);
        if c.extra_inversion_damp != 0.0 {
            dw -= 4.0 * c.extra_inversion_damp * self.nu * r.norm_sqr();
        }
        (dr, dw)
    }
}

/// Time derivative of `state` under model `kind` with the constant drive
/// envelope from `params`. The paper sign convention is used; see
/// [`Kernel::with_convention`] for the alternative.
pub fn rhs(kind: ModelKind, state: &BlochState, params: &SystemParams, _t: f64) -> (C64, f64) {
    Kernel::new(kind, params).eval(state, params.rabi)
}

/// One comparison row of [`factor_table`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FactorRow {
    pub kind: ModelKind,
    pub shift_factor: C64,
    pub field_factor: C64,
    /// Multiplier of Γ₀ in the spontaneous terms; 1 marks the classical
    /// model's phenomenological rates, 0 the microscopic model's absence of
    /// a spontaneous term.
    pub decay_scaling: f64,
}

/// Shift/field/decay factors of all four models side by side.
pub fn factor_table(params: &SystemParams) -> Vec<FactorRow> {
    ModelKind::ALL
        .iter()
        .map(|&kind| {
            let c = model_coefficients(kind, params);
            let decay_scaling = match kind {
                ModelKind::ClassicalLorentz => 1.0,
                ModelKind::MacroscopicQed => params.n.re,
                ModelKind::MacroscopicQedLocalField => {
                    let l = lorentz_factor(params.n);
                    (params.n * l * l).re
                }
                ModelKind::MicroscopicQed => 0.0,
            };
            FactorRow {
                kind,
                shift_factor: c.shift_factor,
                field_factor: c.field_factor,
                decay_scaling,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn lossless(n: C64, nu: f64, delta: f64, rabi: C64) -> SystemParams {
        SystemParams {
            n,
            nu,
            delta,
            rabi,
            gamma_perp: 0.0,
            gamma_par: 0.0,
            gamma0: 0.0,
            ..SystemParams::default()
        }
    }

    struct Lcg(u64);
    impl Lcg {
        fn f64(&mut self) -> f64 {
            self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((self.0 >> 11) as f64) / ((1u64 << 53) as f64)
        }
        fn state(&mut self) -> BlochState {
            let w = 2.0 * self.f64() - 1.0;
            let cap = 0.5 * (1.0 - w * w).max(0.0).sqrt();
            let mag = cap * self.f64();
            let ph = 2.0 * std::f64::consts::PI * self.f64();
            BlochState::new(C64::from_polar(mag, ph), w)
        }
    }

    #[test]
    fn vacuum_coefficients_identical() {
        let p = lossless(C64::new(1.0, 0.0), 1.3, 0.4, C64::new(0.7, 0.1));
        let base = model_coefficients(ModelKind::ClassicalLorentz, &p);
        for kind in ModelKind::ALL {
            let c = model_coefficients(kind, &p);
            assert_eq!(c.shift_factor, C64::new(1.0, 0.0));
            assert_eq!(c.field_factor, C64::new(1.0, 0.0));
            assert_eq!(c.extra_coherence_damp, 0.0);
            assert_eq!(c.extra_inversion_damp, 0.0);
            assert_eq!(c.transverse_decay, base.transverse_decay);
            assert_eq!(c.longitudinal_decay, base.longitudinal_decay);
        }
    }

    #[test]
    fn coefficient_examples_at_n2() {
        let p = lossless(C64::new(2.0, 0.0), 1.0, 0.0, C64::new(0.0, 0.0));
        let macro_ = model_coefficients(ModelKind::MacroscopicQed, &p);
        assert_eq!(macro_.shift_factor, C64::new(2.0, 0.0));
        assert_eq!(macro_.field_factor, C64::new(1.0, 0.0));
        let ll = model_coefficients(ModelKind::MacroscopicQedLocalField, &p);
        assert_relative_eq!(ll.shift_factor.re, 8.0, max_relative = 1e-15);
        assert_relative_eq!(ll.field_factor.re, 2.0, max_relative = 1e-15);
        let micro = model_coefficients(ModelKind::MicroscopicQed, &p);
        assert_eq!(micro.shift_factor, C64::new(2.0, 0.0));
        assert_eq!(micro.field_factor, C64::new(2.0, 0.0));
    }

    #[test]
    fn vacuum_degeneracy_pointwise() {
        let p = lossless(C64::new(1.0, 0.0), 1.3, 0.7, C64::new(0.9, 0.2));
        let mut rng = Lcg(42);
        for _ in 0..100 {
            let s = rng.state();
            let (dr0, dw0) = rhs(ModelKind::ClassicalLorentz, &s, &p, 0.0);
            for kind in &ModelKind::ALL[1..] {
                let (dr, dw) = rhs(*kind, &s, &p, 0.0);
                assert!((dr - dr0).norm() <= 1e-14);
                assert!((dw - dw0).abs() <= 1e-14);
            }
        }
    }

    #[test]
    fn ground_state_stationary_without_drive() {
        let mut p = SystemParams::default();
        p.n = C64::new(1.5, 0.0);
        p.nu = 2.0;
        let s = BlochState::ground();
        let (dr, dw) = rhs(ModelKind::MacroscopicQed, &s, &p, 0.0);
        assert_eq!(dr, C64::new(0.0, 0.0));
        assert_eq!(dw, 0.0);
    }

    #[test]
    fn undriven_undamped_coherence_rotates_at_shifted_detuning() {
        // Classical model, E = 0, gamma = 0, W = -1: dR21/dt = i(delta + nu*l) R21.
        let p = lossless(C64::new(1.5, 0.0), 3.0, 0.7, C64::new(0.0, 0.0));
        let l = (1.5f64 * 1.5 + 2.0) / 3.0;
        let r0 = C64::new(0.2, -0.05);
        let s = BlochState::new(r0, -1.0);
        let (dr, dw) = rhs(ModelKind::ClassicalLorentz, &s, &p, 0.0);
        let expect = C64::i() * (p.delta + p.nu * l) * r0;
        assert!((dr - expect).norm() < 1e-14);
        assert_eq!(dw, 0.0);
    }

    /// Independent term-by-term transcription of the classical equations,
    /// kept deliberately separate from the kernel implementation.
    fn classical_rhs_oracle(s: &BlochState, p: &SystemParams) -> (C64, f64) {
        let l = (p.n * p.n + 2.0) / 3.0;
        let i = C64::i();
        let dr = i * (p.delta - p.nu * (l * s.w).re) * s.r21
            + i * C64::new(0.0, -(p.nu * (l * s.w).im)) * s.r21
            - i / 2.0 * l * p.rabi * s.w
            - p.gamma_perp * s.r21;
        let term = l * p.rabi * s.r21.conj();
        let dw = -i.im * 0.0 - 2.0 * term.im - p.gamma_par * (s.w - p.w_eq);
        (dr, dw)
    }

    #[test]
    fn classical_rhs_matches_substitution_oracle() {
        let p = SystemParams {
            n: C64::new(1.7, 0.0),
            nu: 2.3,
            delta: -0.8,
            rabi: C64::new(1.1, 0.4),
            gamma_perp: 0.9,
            gamma_par: 1.7,
            w_eq: -0.6,
            gamma0: 1.0,
        };
        let mut rng = Lcg(7);
        for _ in 0..50 {
            let s = rng.state();
            let (dr, dw) = rhs(ModelKind::ClassicalLorentz, &s, &p, 0.0);
            let (or, ow) = classical_rhs_oracle(&s, &p);
            assert!((dr - or).norm() <= 1e-14 * (1.0 + or.norm()));
            assert!((dw - ow).abs() <= 1e-14 * (1.0 + ow.abs()));
        }
    }

    #[test]
    fn microscopic_conserves_population_at_rhs_level() {
        // d/dt (W^2 + 4|R21|^2) = 2 W dW + 8 Re(conj(R21) dR21) must vanish
        // for real l, any drive, no decay.
        let p = lossless(C64::new(1.8, 0.0), 4.0, 1.1, C64::new(0.8, -0.3));
        let mut rng = Lcg(11);
        for _ in 0..50 {
            let s = rng.state();
            let (dr, dw) = rhs(ModelKind::MicroscopicQed, &s, &p, 0.0);
            let ddt = 2.0 * s.w * dw + 8.0 * (s.r21.conj() * dr).re;
            assert!(ddt.abs() <= 1e-14);
        }
    }

    #[test]
    fn expansion_convention_conserves_with_complex_index() {
        let p = lossless(C64::new(1.5, 0.2), 4.0, 0.3, C64::new(0.6, 0.1));
        let k = Kernel::with_convention(ModelKind::MicroscopicQed, SignConvention::Expansion, &p);
        let mut rng = Lcg(13);
        for _ in 0..50 {
            let s = rng.state();
            let (dr, dw) = k.eval(&s, p.rabi);
            let ddt = 2.0 * s.w * dw + 8.0 * (s.r21.conj() * dr).re;
            assert!(ddt.abs() <= 1e-13, "ddt = {ddt}");
        }
    }

    #[test]
    fn paper_and_expansion_differ_only_for_complex_index() {
        let preal = lossless(C64::new(1.5, 0.0), 4.0, 0.3, C64::new(0.6, 0.1));
        let pcplx = lossless(C64::new(1.5, 0.2), 4.0, 0.3, C64::new(0.6, 0.1));
        let s = BlochState::new(C64::new(0.2, 0.1), -0.7);
        for (p, same) in [(preal, true), (pcplx, false)] {
            let a = Kernel::with_convention(ModelKind::MicroscopicQed, SignConvention::Paper, &p)
                .eval(&s, p.rabi);
            let b =
                Kernel::with_convention(ModelKind::MicroscopicQed, SignConvention::Expansion, &p)
                    .eval(&s, p.rabi);
            assert_eq!((a.0 - b.0).norm() < 1e-15, same);
        }
    }

    #[test]
    fn factor_table_columns() {
        let mut p = SystemParams::default();
        p.n = C64::new(1.0, 0.0);
        let rows = factor_table(&p);
        for r in &rows {
            assert_eq!(r.shift_factor, C64::new(1.0, 0.0));
            assert_eq!(r.field_factor, C64::new(1.0, 0.0));
        }

        p.n = C64::new(2.0, 0.0);
        let rows = factor_table(&p);
        let shift = |k: ModelKind| rows.iter().find(|r| r.kind == k).unwrap().shift_factor.re;
        assert_relative_eq!(shift(ModelKind::MacroscopicQed), 2.0, max_relative = 1e-15);
        assert_relative_eq!(shift(ModelKind::MacroscopicQedLocalField), 8.0, max_relative = 1e-15);
        assert_relative_eq!(shift(ModelKind::ClassicalLorentz), 2.0, max_relative = 1e-15);
        assert_relative_eq!(shift(ModelKind::MicroscopicQed), 2.0, max_relative = 1e-15);

        // n = 2 is the accidental l = n point; at n = 1.5 the columns differ.
        p.n = C64::new(1.5, 0.0);
        let rows = factor_table(&p);
        let l = (1.5f64 * 1.5 + 2.0) / 3.0;
        let shift = |k: ModelKind| rows.iter().find(|r| r.kind == k).unwrap().shift_factor.re;
        assert_relative_eq!(shift(ModelKind::ClassicalLorentz), l, max_relative = 1e-14);
        assert_relative_eq!(shift(ModelKind::MicroscopicQed), l, max_relative = 1e-14);
        assert_relative_eq!(shift(ModelKind::MacroscopicQed), 1.5, max_relative = 1e-14);
        assert_relative_eq!(
            shift(ModelKind::MacroscopicQedLocalField),
            1.5 * l * l,
            max_relative = 1e-14
        );
    }
}
