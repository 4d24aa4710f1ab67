//! Quadrature-backed evaluation of `f = P[ψ] - G[g]` and its first
//! derivatives.
//!
//! The Poisson integral uses the periodic trapezoid rule over the boundary
//! samples; it converges spectrally while `1 - |z|` stays above roughly
//! `10/N`. The Green potential integrates in polar coordinates centered at
//! the evaluation point, which soaks up the logarithmic singularity of the
//! kernel; radial integrals run over panels graded geometrically toward the
//! center (see [`GradedRadial`]) and the angular node count is scaled up as
//! the evaluation point approaches the boundary, where the integrand
//! develops a peak of width `~d(z)`.

use crate::boundary::{BoundaryData, SourceField};
use crate::disk::DiskPoint;
use crate::error::{Error, Result};
use crate::jet::WirtingerJet;
use crate::quad::GradedRadial;
use num_complex::Complex64;
use std::f64::consts::TAU;

/// Node counts for the two quadratures.
#[derive(Debug, Clone)]
pub struct QuadratureConfig {
    /// Boundary samples `N` for the Poisson integral (power of two, >= 16).
    pub boundary_nodes: usize,
    /// Radial budget for the Green potential; the graded rule uses
    /// `max(8, radial_nodes/4)` Gauss–Legendre nodes per panel.
    pub radial_nodes: usize,
    /// Baseline uniform angular nodes for the Green potential.
    pub angular_nodes: usize,
    /// Near the boundary the angular count grows like `angular_boost / d(z)`.
    pub angular_boost: f64,
    /// Hard cap on the angular count.
    pub angular_cap: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            boundary_nodes: 2048,
            radial_nodes: 64,
            angular_nodes: 128,
            angular_boost: 24.0,
            angular_cap: 1 << 18,
        }
    }
}

impl QuadratureConfig {
    pub fn panel_nodes(&self) -> usize {
        (self.radial_nodes / 4).max(8)
    }

    pub fn angular_count(&self, boundary_distance: f64) -> usize {
        let boosted = (self.angular_boost / boundary_distance.max(1e-9)).ceil() as usize;
        boosted.clamp(self.angular_nodes, self.angular_cap)
    }

    fn validate(&self) -> Result<()> {
        if self.boundary_nodes < 16 || !self.boundary_nodes.is_power_of_two() {
            return Err(Error::InvalidResolution(format!(
                "boundary_nodes must be a power of two >= 16, got {}",
                self.boundary_nodes
            )));
        }
        if self.angular_nodes < 16 {
            return Err(Error::InvalidResolution(
                "angular_nodes must be at least 16".into(),
            ));
        }
        Ok(())
    }
}

/// Common interface of catalog mappings and quadrature-backed solutions:
/// everything the functionals need to evaluate and differentiate a map.
///
/// `value` and `jet` take plain complex arguments for the benefit of grid
/// loops; callers must stay inside `radius_cap()`.
pub trait DiskMap: Send + Sync {
    fn label(&self) -> String;
    fn value(&self, z: Complex64) -> Complex64;
    fn jet(&self, z: Complex64) -> WirtingerJet;
    /// Boundary samples of the map at `n` uniform nodes.
    fn boundary_data(&self, n: usize) -> Result<BoundaryData>;
    fn source(&self) -> &SourceField;
    /// Exact quasiconformal constant where known (catalog ground truth).
    fn exact_k(&self) -> Option<f64> {
        None
    }
    /// Whether jets are closed forms valid on the closed disk.
    fn closed_disk(&self) -> bool {
        false
    }
    /// Absolute tolerance class for checks against this map's jets.
    fn jet_tolerance(&self) -> f64 {
        if self.closed_disk() {
            1e-8
        } else {
            1e-4
        }
    }
    /// Largest radius at which jets are trustworthy.
    fn radius_cap(&self) -> f64 {
        if self.closed_disk() {
            1.0
        } else {
            0.992
        }
    }
}

/// `P[ψ](z)`: the mean of the Poisson kernel against the boundary samples.
pub fn poisson_value(boundary: &BoundaryData, z: Complex64) -> Complex64 {
    let zz = z.norm_sqr();
    let mut acc = Complex64::new(0.0, 0.0);
    for (u, psi) in boundary.units().iter().zip(boundary.samples()) {
        let a = 1.0 - z * u.conj();
        acc += (1.0 - zz) / a.norm_sqr() * psi;
    }
    acc / boundary.len() as f64
}

/// Value and Wirtinger derivatives of `P[ψ]` at `z` in one boundary sweep,
/// using the closed-form kernel derivatives.
pub fn poisson_jet(boundary: &BoundaryData, z: Complex64) -> WirtingerJet {
    let zz = z.norm_sqr();
    let zc = z.conj();
    let mut v = Complex64::new(0.0, 0.0);
    let mut dz = Complex64::new(0.0, 0.0);
    let mut dzbar = Complex64::new(0.0, 0.0);
    for (u, psi) in boundary.units().iter().zip(boundary.samples()) {
        let uc = u.conj();
        let a = 1.0 - z * uc;
        v += (1.0 - zz) / a.norm_sqr() * psi;
        dz += uc / (a * a) * psi;
        let b = 1.0 - zc * u;
        dzbar += u / (b * b) * psi;
    }
    let n = boundary.len() as f64;
    WirtingerJet::new(v / n, dz / n, dzbar / n)
}

struct GreenSweep {
    value: Complex64,
    dz: Complex64,
    dzbar: Complex64,
}

fn green_sweep(
    source: &SourceField,
    radial: &GradedRadial,
    angular: usize,
    z: Complex64,
    want_value: bool,
    want_gradient: bool,
) -> GreenSweep {
    let zc = z.conj();
    let c = 1.0 - z.norm_sqr();
    let mut value = Complex64::new(0.0, 0.0);
    let mut dz = Complex64::new(0.0, 0.0);
    let mut dzbar = Complex64::new(0.0, 0.0);
    for j in 0..angular {
        let phi = TAU * j as f64 / angular as f64;
        let e = Complex64::from_polar(1.0, phi);
        // distance from z to the boundary circle along direction e^{iφ};
        // quotient form avoids cancellation when z is near the boundary
        let s = (zc * e).re;
        let reach = if s > 0.0 {
            c / (s + (s * s + c).sqrt())
        } else {
            (s * s + c).sqrt() - s
        };
        let mut val_in = Complex64::new(0.0, 0.0);
        let mut dz_in = Complex64::new(0.0, 0.0);
        let mut dzbar_in = Complex64::new(0.0, 0.0);
        radial.for_each_node(reach, |rho, weight| {
            let w = z + rho * e;
            let g = source.eval(w);
            let aw = 1.0 - z * w.conj();
            if want_value {
                val_in += weight * rho * 0.5 * (aw.norm_sqr() / (rho * rho)).ln() * g;
            }
            if want_gradient {
                let t = w.norm_sqr() - 1.0;
                dz_in += weight * t / aw * g;
                dzbar_in += weight * t / (1.0 - zc * w) * g;
            }
        });
        value += val_in;
        dz += -0.5 * e.conj() * dz_in;
        dzbar += -0.5 * e * dzbar_in;
    }
    let m = angular as f64;
    GreenSweep {
        value: value / m,
        dz: dz / m,
        dzbar: dzbar / m,
    }
}

/// `G[g](z) = (1/2π) ∫_D G(z,w) g(w) dA(w)` for a bare source field.
pub fn green_potential_of(source: &SourceField, cfg: &QuadratureConfig, z: DiskPoint) -> Complex64 {
    if source.is_zero() {
        return Complex64::new(0.0, 0.0);
    }
    let radial = GradedRadial::solver_default(cfg.panel_nodes());
    let m = cfg.angular_count(z.boundary_distance());
    green_sweep(source, &radial, m, z.z(), true, false).value
}

/// `(∂_z G[g], ∂_z̄ G[g])` at `z`.
pub fn green_gradient_of(
    source: &SourceField,
    cfg: &QuadratureConfig,
    z: DiskPoint,
) -> (Complex64, Complex64) {
    if source.is_zero() {
        return (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
    }
    let radial = GradedRadial::solver_default(cfg.panel_nodes());
    let m = cfg.angular_count(z.boundary_distance());
    let sweep = green_sweep(source, &radial, m, z.z(), false, true);
    (sweep.dz, sweep.dzbar)
}

/// The representation `f = P[ψ] - G[g]` with fixed quadrature resolution.
#[derive(Debug, Clone)]
pub struct PoissonSolution {
    boundary: BoundaryData,
    source: SourceField,
    cfg: QuadratureConfig,
    radial: GradedRadial,
    label: String,
}

impl PoissonSolution {
    pub fn new(boundary: BoundaryData, source: SourceField, cfg: QuadratureConfig) -> Result<Self> {
        cfg.validate()?;
        if boundary.len() != cfg.boundary_nodes {
            return Err(Error::InvalidResolution(format!(
                "boundary data has {} samples but the configuration expects {}",
                boundary.len(),
                cfg.boundary_nodes
            )));
        }
        let radial = GradedRadial::solver_default(cfg.panel_nodes());
        let label = format!("solution[g={}]", source.label());
        Ok(Self {
            boundary,
            source,
            cfg,
            radial,
            label,
        })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn boundary(&self) -> &BoundaryData {
        &self.boundary
    }

    pub fn config(&self) -> &QuadratureConfig {
        &self.cfg
    }

    /// True when `z` is far enough from the boundary for the Poisson
    /// quadrature to resolve the kernel peak (`1 - |z| >= 10/N`).
    pub fn resolution_ok(&self, z: DiskPoint) -> bool {
        z.boundary_distance() >= 10.0 / self.boundary.len() as f64
    }

    pub fn poisson_integral(&self, z: DiskPoint) -> Complex64 {
        poisson_value(&self.boundary, z.z())
    }

    /// Jet of the harmonic part `P[ψ]` alone.
    pub fn harmonic_jet(&self, z: DiskPoint) -> WirtingerJet {
        poisson_jet(&self.boundary, z.z())
    }

    pub fn green_potential(&self, z: DiskPoint) -> Complex64 {
        if self.source.is_zero() {
            return Complex64::new(0.0, 0.0);
        }
        let m = self.cfg.angular_count(z.boundary_distance());
        green_sweep(&self.source, &self.radial, m, z.z(), true, false).value
    }

    /// Green potential evaluated at two resolutions; errors when they
    /// disagree beyond `tol`.
    pub fn green_potential_checked(&self, z: DiskPoint, tol: f64) -> Result<Complex64> {
        let coarse = self.green_potential(z);
        if self.source.is_zero() {
            return Ok(coarse);
        }
        let fine_radial = GradedRadial::solver_default(self.cfg.panel_nodes() * 2);
        let m = 2 * self.cfg.angular_count(z.boundary_distance());
        let fine = green_sweep(&self.source, &fine_radial, m, z.z(), true, false).value;
        let disagreement = (coarse - fine).norm();
        if disagreement > tol * (1.0 + fine.norm()) {
            return Err(Error::QuadratureDivergence {
                what: "green potential refinement",
                disagreement,
            });
        }
        Ok(fine)
    }

    pub fn green_gradient(&self, z: DiskPoint) -> (Complex64, Complex64) {
        if self.source.is_zero() {
            return (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
        }
        let m = self.cfg.angular_count(z.boundary_distance());
        let sweep = green_sweep(&self.source, &self.radial, m, z.z(), false, true);
        (sweep.dz, sweep.dzbar)
    }

    /// `f(z) = P[ψ](z) - G[g](z)`.
    pub fn solve(&self, z: DiskPoint) -> Complex64 {
        self.poisson_integral(z) - self.green_potential(z)
    }

    /// Value and first derivatives of `f` by the closed-form kernel
    /// derivatives (no finite differences).
    pub fn wirtinger_jet(&self, z: DiskPoint) -> WirtingerJet {
        let p = self.harmonic_jet(z);
        if self.source.is_zero() {
            return p;
        }
        let m = self.cfg.angular_count(z.boundary_distance());
        let g = green_sweep(&self.source, &self.radial, m, z.z(), true, true);
        WirtingerJet::new(p.value - g.value, p.fz - g.dz, p.fzbar - g.dzbar)
    }

    /// `|Δ_h f(z) - g(z)|` with the five-point stencil at step `h`.
    pub fn laplacian_residual(&self, z: DiskPoint, h: f64) -> Result<f64> {
        if h <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "stencil step must be positive, got {h}"
            )));
        }
        if z.modulus() + h >= 1.0 {
            return Err(Error::OutOfDomain {
                what: "five-point stencil leaves the disk",
                z: z.z(),
                modulus: z.modulus() + h,
            });
        }
        let c = z.z();
        let ih = Complex64::new(0.0, h);
        let center = self.solve(z);
        let stencil: Complex64 = [c + h, c - h, c + ih, c - ih]
            .into_iter()
            .map(|p| self.solve(DiskPoint::interior(p).expect("stencil stays interior")))
            .sum::<Complex64>();
        let lap = (stencil - 4.0 * center) / (h * h);
        Ok((lap - self.source.eval(c)).norm())
    }
}

impl DiskMap for PoissonSolution {
    fn label(&self) -> String {
        self.label.clone()
    }

    fn value(&self, z: Complex64) -> Complex64 {
        self.solve(DiskPoint::interior(z).expect("solution evaluated at interior points"))
    }

    fn jet(&self, z: Complex64) -> WirtingerJet {
        self.wirtinger_jet(DiskPoint::interior(z).expect("solution jets need interior points"))
    }

    fn boundary_data(&self, n: usize) -> Result<BoundaryData> {
        let have = self.boundary.len();
        if n == have {
            return Ok(self.boundary.clone());
        }
        if n < have && have % n == 0 {
            let stride = have / n;
            let samples = (0..n).map(|k| self.boundary.samples()[k * stride]).collect();
            return BoundaryData::from_samples(samples);
        }
        Err(Error::InvalidResolution(format!(
            "cannot resample {have} boundary samples to {n}"
        )))
    }

    fn source(&self) -> &SourceField {
        &self.source
    }

    fn radius_cap(&self) -> f64 {
        1.0 - 16.0 / self.boundary.len() as f64
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn dp(x: f64, y: f64) -> DiskPoint {
        DiskPoint::interior_xy(x, y).unwrap()
    }

    fn unit_source_solution() -> PoissonSolution {
        let cfg = QuadratureConfig::default();
        PoissonSolution::new(
            BoundaryData::zero(cfg.boundary_nodes).unwrap(),
            SourceField::constant(c64(1.0, 0.0)),
            cfg,
        )
        .unwrap()
    }

    #[test]
    fn poisson_integral_reproduces_harmonic_polynomials() {
        // ψ = 2e^{iθ} + (0.3-0.1i)e^{-iθ} extends to 2z + (0.3-0.1i) z̄
        let b = BoundaryData::from_fn(2048, |t| {
            2.0 * Complex64::from_polar(1.0, t) + c64(0.3, -0.1) * Complex64::from_polar(1.0, -t)
        })
        .unwrap();
        let z = c64(0.3, 0.2);
        let expected = 2.0 * z + c64(0.3, -0.1) * z.conj();
        let got = poisson_value(&b, z);
        assert_relative_eq!((got - expected).norm(), 0.0, epsilon = 1e-12);

        let jet = poisson_jet(&b, z);
        assert_relative_eq!((jet.fz - c64(2.0, 0.0)).norm(), 0.0, epsilon = 1e-12);
        assert_relative_eq!((jet.fzbar - c64(0.3, -0.1)).norm(), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn unit_source_gives_quarter_depression() {
        // ψ ≡ 0, g ≡ 1: f(z) = -(1 - |z|²)/4
        let sol = unit_source_solution();
        let f0 = sol.solve(DiskPoint::origin());
        assert_abs_diff_eq!(f0.re, -0.25, epsilon = 1e-9);
        assert_abs_diff_eq!(f0.im, 0.0, epsilon = 1e-12);
        for &(x, y) in &[(0.5, 0.0), (0.3, -0.4), (0.0, 0.9), (-0.85, 0.1)] {
            let z = dp(x, y);
            let expected = -(1.0 - z.modulus() * z.modulus()) / 4.0;
            let got = sol.solve(z);
            assert_abs_diff_eq!(got.re, expected, epsilon = 1e-9);
            assert_abs_diff_eq!(got.im, 0.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn unit_source_gradient_matches_closed_form() {
        // G[1] = (1-|z|²)/4 so ∂_z G[1] = -z̄/4
        let sol = unit_source_solution();
        for &(x, y) in &[(0.0, 0.0), (0.5, 0.1), (-0.2, 0.7), (0.9, 0.0)] {
            let z = dp(x, y);
            let (dz, dzbar) = sol.green_gradient(z);
            let expected = -z.z().conj() / 4.0;
            assert_abs_diff_eq!((dz - expected).norm(), 0.0, epsilon = 1e-9);
            assert_abs_diff_eq!((dzbar - expected.conj()).norm(), 0.0, epsilon = 1e-9);
        }
    }

    #[test]
    fn green_gradient_accurate_in_boundary_layer() {
        // the acceptance grid for the gradient bound reaches d(z) = 2e-4
        let sol = unit_source_solution();
        for &d in &[1e-2, 1e-3, 2e-4] {
            let z = dp(1.0 - d, 0.0);
            let (dz, _) = sol.green_gradient(z);
            let expected = -(1.0 - d) / 4.0;
            assert!(
                (dz.re - expected).abs() < 2e-5,
                "d = {d}: got {} expected {expected}",
                dz.re
            );
            assert!(dz.im.abs() < 2e-5);
        }
    }

    #[test]
    fn jet_matches_finite_differences_of_solve() {
        // mixed boundary + source; oracle step 1e-5·d(z)
        let cfg = QuadratureConfig::default();
        let b = BoundaryData::from_fn(cfg.boundary_nodes, |t| {
            Complex64::from_polar(1.0, t) + 0.25 * Complex64::from_polar(1.0, -t)
        })
        .unwrap();
        let sol = PoissonSolution::new(b, SourceField::constant(c64(0.7, 0.2)), cfg).unwrap();
        for &(x, y) in &[(0.0, 0.0), (0.4, 0.3), (-0.6, 0.2), (0.0, -0.88)] {
            let z = dp(x, y);
            let h = 1e-5 * z.boundary_distance();
            let f = |p: Complex64| sol.solve(DiskPoint::interior(p).unwrap());
            let fx = (f(z.z() + h) - f(z.z() - h)) / (2.0 * h);
            let fy = (f(z.z() + c64(0.0, h)) - f(z.z() - c64(0.0, h))) / (2.0 * h);
            let fd_dz = 0.5 * (fx - c64(0.0, 1.0) * fy);
            let fd_dzbar = 0.5 * (fx + c64(0.0, 1.0) * fy);
            let jet = sol.wirtinger_jet(z);
            let scale = jet.op_norm().max(1.0);
            assert!(
                (jet.fz - fd_dz).norm() <= 1e-4 * scale,
                "fz mismatch at ({x},{y}): {:?} vs {:?}",
                jet.fz,
                fd_dz
            );
            assert!(
                (jet.fzbar - fd_dzbar).norm() <= 1e-4 * scale,
                "fzbar mismatch at ({x},{y}): {:?} vs {:?}",
                jet.fzbar,
                fd_dzbar
            );
        }
    }

    #[test]
    fn laplacian_residual_small_for_unit_source() {
        let sol = unit_source_solution();
        for &(x, y) in &[(0.1, 0.2), (-0.5, 0.3), (0.0, 0.0)] {
            let r = sol.laplacian_residual(dp(x, y), 1e-3).unwrap();
            assert!(r < 1e-5, "residual {r} at ({x},{y})");
        }
    }

    #[test]
    fn laplacian_residual_stencil_domain_check() {
        let sol = unit_source_solution();
        assert!(sol.laplacian_residual(dp(0.999, 0.0), 1e-2).is_err());
    }

    #[test]
    fn solution_is_linear_in_data() {
        let cfg = QuadratureConfig::default();
        let b1 = BoundaryData::from_fn(cfg.boundary_nodes, |t| Complex64::from_polar(1.0, t))
            .unwrap();
        let b2 = BoundaryData::from_fn(cfg.boundary_nodes, |t| {
            c64(0.2, 0.0) * Complex64::from_polar(2.0, -t)
        })
        .unwrap();
        let sum = BoundaryData::from_samples(
            b1.samples()
                .iter()
                .zip(b2.samples())
                .map(|(a, b)| a + b)
                .collect(),
        )
        .unwrap();
        let s1 = PoissonSolution::new(b1, SourceField::constant(c64(1.0, 0.0)), cfg.clone())
            .unwrap();
        let s2 = PoissonSolution::new(b2, SourceField::constant(c64(0.0, 0.5)), cfg.clone())
            .unwrap();
        let s12 = PoissonSolution::new(sum, SourceField::constant(c64(1.0, 0.5)), cfg).unwrap();
        for &(x, y) in &[(0.3, 0.3), (-0.7, 0.1)] {
            let z = dp(x, y);
            let lhs = s12.solve(z);
            let rhs = s1.solve(z) + s2.solve(z);
            assert_abs_diff_eq!((lhs - rhs).norm(), 0.0, epsilon = 1e-11);
        }
    }

    #[test]
    fn near_boundary_accuracy_improves_with_resolution() {
        // ψ = e^{iθ} + 0.25 e^{-iθ}, g ≡ 1 has the closed form
        // f(z) = z + 0.25 z̄ - (1-|z|²)/4; at radius 1-1e-3 the Poisson
        // trapezoid error ~ r^{N-1} dominates and halves its exponent as N
        // doubles.
        let mut errors = Vec::new();
        for &n in &[2048usize, 4096, 8192, 16384] {
            let cfg = QuadratureConfig {
                boundary_nodes: n,
                ..QuadratureConfig::default()
            };
            let b = BoundaryData::from_fn(n, |t| {
                Complex64::from_polar(1.0, t) + 0.25 * Complex64::from_polar(1.0, -t)
            })
            .unwrap();
            let sol = PoissonSolution::new(b, SourceField::constant(c64(1.0, 0.0)), cfg).unwrap();
            let z = dp(1.0 - 1e-3, 0.0);
            let exact = z.z() + 0.25 * z.z().conj() - c64(1.0 - z.z().norm_sqr(), 0.0) / 4.0;
            errors.push((sol.solve(z) - exact).norm());
        }
        for pair in errors.windows(2) {
            assert!(
                pair[1] <= pair[0] * 1.05,
                "errors failed to decrease: {errors:?}"
            );
        }
        assert!(errors[3] < 1e-6, "final error {}", errors[3]);
    }

    #[test]
    fn resolution_flag_tracks_threshold() {
        let sol = unit_source_solution(); // N = 2048, 10/N ≈ 4.9e-3
        assert!(sol.resolution_ok(dp(0.99, 0.0)));
        assert!(!sol.resolution_ok(dp(0.9999, 0.0)));
    }

    #[test]
    fn checked_potential_agrees_on_smooth_source() {
        let sol = unit_source_solution();
        let v = sol.green_potential_checked(dp(0.3, 0.4), 1e-8).unwrap();
        assert_abs_diff_eq!(v.re, (1.0 - 0.25) / 4.0, epsilon = 1e-9);
    }
}
