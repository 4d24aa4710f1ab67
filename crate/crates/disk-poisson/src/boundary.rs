//! Boundary samples and source terms feeding the solver.

use crate::error::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::TAU;
use std::fmt;
use std::sync::Arc;

/// Uniform samples of boundary data `ψ` at `θ_k = 2πk/N`.
///
/// `N` must be a power of two, at least 16, so the sample set is directly
/// usable by the FFT-based coefficient extraction.
#[derive(Debug, Clone)]
pub struct BoundaryData {
    samples: Vec<Complex64>,
    units: Vec<Complex64>,
}

impl BoundaryData {
    pub fn from_samples(samples: Vec<Complex64>) -> Result<Self> {
        let n = samples.len();
        if n < 16 || !n.is_power_of_two() {
            return Err(Error::InvalidResolution(format!(
                "boundary sample count must be a power of two >= 16, got {n}"
            )));
        }
        let units = (0..n)
            .map(|k| Complex64::from_polar(1.0, TAU * k as f64 / n as f64))
            .collect();
        Ok(Self { samples, units })
    }

    pub fn from_fn(n: usize, mut psi: impl FnMut(f64) -> Complex64) -> Result<Self> {
        let samples = (0..n).map(|k| psi(TAU * k as f64 / n as f64)).collect();
        Self::from_samples(samples)
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::from_samples(vec![Complex64::new(0.0, 0.0); n])
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }

    /// Precomputed boundary points `e^{iθ_k}`.
    pub fn units(&self) -> &[Complex64] {
        &self.units
    }

    pub fn theta(&self, k: usize) -> f64 {
        TAU * k as f64 / self.samples.len() as f64
    }

    /// Sample whose node angle is closest to `theta`.
    pub fn nearest_sample(&self, theta: f64) -> Complex64 {
        let n = self.samples.len();
        let k = (theta.rem_euclid(TAU) / TAU * n as f64).round() as usize % n;
        self.samples[k]
    }

    /// Adjacent-sample jump heuristic for the continuity assumption on `ψ`.
    pub fn looks_continuous(&self) -> bool {
        let max_abs = self
            .samples
            .iter()
            .map(|s| s.norm())
            .fold(0.0f64, f64::max);
        let max_jump = (0..self.samples.len())
            .map(|k| {
                let next = (k + 1) % self.samples.len();
                (self.samples[next] - self.samples[k]).norm()
            })
            .fold(0.0f64, f64::max);
        max_jump <= 0.2 * (1.0 + max_abs)
    }
}

/// A continuous source term `g` on the closed disk with a grid-estimated sup
/// norm.
#[derive(Clone)]
pub struct SourceField {
    f: Arc<dyn Fn(Complex64) -> Complex64 + Send + Sync>,
    label: String,
    /// Grid max of `|g|` inflated by 1%.
    sup_norm: f64,
    raw_sup: f64,
    looks_continuous: bool,
}

impl fmt::Debug for SourceField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SourceField")
            .field("label", &self.label)
            .field("sup_norm", &self.sup_norm)
            .field("looks_continuous", &self.looks_continuous)
            .finish()
    }
}

const SUP_GRID: usize = 201;

impl SourceField {
    pub fn new(
        label: impl Into<String>,
        f: impl Fn(Complex64) -> Complex64 + Send + Sync + 'static,
    ) -> Self {
        let f: Arc<dyn Fn(Complex64) -> Complex64 + Send + Sync> = Arc::new(f);
        // 201×201 polar scan of the closed disk; catches the boundary since
        // r runs up to 1 inclusive.
        let mut raw_sup = 0.0f64;
        let mut max_jump = 0.0f64;
        let mut prev_ring: Option<Vec<Complex64>> = None;
        for i in 0..SUP_GRID {
            let r = i as f64 / (SUP_GRID - 1) as f64;
            let ring: Vec<Complex64> = (0..SUP_GRID)
                .map(|j| f(Complex64::from_polar(r, TAU * j as f64 / SUP_GRID as f64)))
                .collect();
            for (j, v) in ring.iter().enumerate() {
                raw_sup = raw_sup.max(v.norm());
                let next = ring[(j + 1) % SUP_GRID];
                max_jump = max_jump.max((next - v).norm());
                if let Some(prev) = &prev_ring {
                    max_jump = max_jump.max((prev[j] - v).norm());
                }
            }
            prev_ring = Some(ring);
        }
        let looks_continuous = max_jump <= 0.2 * (1.0 + raw_sup);
        Self {
            f,
            label: label.into(),
            sup_norm: raw_sup * 1.01,
            raw_sup,
            looks_continuous,
        }
    }

    pub fn zero() -> Self {
        Self::new("0", |_| Complex64::new(0.0, 0.0))
    }

    pub fn constant(c: Complex64) -> Self {
        Self::new(format!("{c}"), move |_| c)
    }

    /// Evaluate `g`, projecting arguments that rounding pushed slightly
    /// outside the closed disk back onto the boundary.
    pub fn eval(&self, w: Complex64) -> Complex64 {
        let n = w.norm();
        if n > 1.0 {
            (self.f)(w / n)
        } else {
            (self.f)(w)
        }
    }

    /// Estimated `‖g‖_∞` (grid max inflated by 1%).
    pub fn sup_norm(&self) -> f64 {
        self.sup_norm
    }

    /// Exact zero on the whole estimation grid; the Green potential of such a
    /// field is skipped entirely.
    pub fn is_zero(&self) -> bool {
        self.raw_sup == 0.0
    }

    pub fn looks_continuous(&self) -> bool {
        self.looks_continuous
    }

    pub fn label(&self) -> &str {
        &self.label
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;
    use approx::assert_relative_eq;

    #[test]
    fn boundary_data_validates_length() {
        assert!(BoundaryData::zero(8).is_err());
        assert!(BoundaryData::zero(100).is_err());
        assert!(BoundaryData::zero(16).is_ok());
        assert!(BoundaryData::zero(2048).is_ok());
    }

    #[test]
    fn boundary_units_on_circle() {
        let b = BoundaryData::from_fn(64, |t| c64(t.cos(), t.sin())).unwrap();
        for (k, u) in b.units().iter().enumerate() {
            assert_relative_eq!(u.norm(), 1.0, max_relative = 1e-14);
            assert_relative_eq!((u - b.samples()[k]).norm(), 0.0, epsilon = 1e-14);
        }
        assert!(b.looks_continuous());
    }

    #[test]
    fn step_boundary_flagged_discontinuous() {
        let b = BoundaryData::from_fn(256, |t| {
            if t < std::f64::consts::PI {
                c64(1.0, 0.0)
            } else {
                c64(-1.0, 0.0)
            }
        })
        .unwrap();
        assert!(!b.looks_continuous());
    }

    #[test]
    fn source_sup_norm_inflated_grid_max() {
        let s = SourceField::constant(c64(1.0, 0.0));
        assert_relative_eq!(s.sup_norm(), 1.01, max_relative = 1e-12);
        assert!(!s.is_zero());
        assert!(s.looks_continuous());

        // g(w) = 8·0.1·w has |g| up to 0.8 on the closed disk
        let s = SourceField::new("8cw", |w| 0.8 * w);
        assert_relative_eq!(s.sup_norm(), 0.8 * 1.01, max_relative = 1e-12);

        let z = SourceField::zero();
        assert!(z.is_zero());
        assert_relative_eq!(z.sup_norm(), 0.0, epsilon = 0.0);
    }

    #[test]
    fn source_step_flagged() {
        let s = SourceField::new("step", |w| {
            if w.re > 0.0 {
                c64(1.0, 0.0)
            } else {
                c64(0.0, 0.0)
            }
        });
        assert!(!s.looks_continuous());
    }

    #[test]
    fn source_eval_projects_outside_points() {
        let s = SourceField::new("|w|", |w| c64(w.norm(), 0.0));
        let v = s.eval(c64(1.0 + 1e-14, 0.0));
        assert!(v.re <= 1.0);
    }
}
