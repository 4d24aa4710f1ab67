//! First-order Wirtinger data of a mapping at a point.

use num_complex::Complex64;

/// Value and first Wirtinger derivatives of `f` at a point:
/// `f_z = ∂f/∂z`, `f_zbar = ∂f/∂z̄`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WirtingerJet {
    pub value: Complex64,
    pub fz: Complex64,
    pub fzbar: Complex64,
}

/// Pointwise distortion data derived from a jet:
/// `‖D_f‖ = |f_z| + |f_z̄|`, `λ(D_f) = ||f_z| - |f_z̄||`,
/// `J_f = |f_z|² - |f_z̄|²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JetNorms {
    pub op_norm: f64,
    pub min_stretch: f64,
    pub jacobian: f64,
}

impl WirtingerJet {
    pub fn new(value: Complex64, fz: Complex64, fzbar: Complex64) -> Self {
        Self { value, fz, fzbar }
    }

    /// `|f_z| + |f_z̄|`: the operator norm of the real differential.
    pub fn op_norm(&self) -> f64 {
        self.fz.norm() + self.fzbar.norm()
    }

    /// `||f_z| - |f_z̄||`: the smallest singular value of the differential.
    pub fn min_stretch(&self) -> f64 {
        (self.fz.norm() - self.fzbar.norm()).abs()
    }

    /// `|f_z|² - |f_z̄|²`; positive exactly for sense-preserving points.
    pub fn jacobian(&self) -> f64 {
        self.fz.norm_sqr() - self.fzbar.norm_sqr()
    }

    pub fn norms(&self) -> JetNorms {
        JetNorms {
            op_norm: self.op_norm(),
            min_stretch: self.min_stretch(),
            jacobian: self.jacobian(),
        }
    }

    /// Derivative of `θ ↦ f(a + ρe^{iθ})` divided by `iρe^{iθ}`:
    /// the tangential symbol `f_z - e^{-2iθ} f_z̄`.
    pub fn tangential_symbol(&self, theta: f64) -> Complex64 {
        self.fz - Complex64::from_polar(1.0, -2.0 * theta) * self.fzbar
    }

    /// Derivative of `ρ ↦ f(a + ρe^{iθ})` divided by `e^{iθ}`:
    /// the radial symbol `f_z + e^{-2iθ} f_z̄`.
    pub fn radial_symbol(&self, theta: f64) -> Complex64 {
        self.fz + Complex64::from_polar(1.0, -2.0 * theta) * self.fzbar
    }
}
