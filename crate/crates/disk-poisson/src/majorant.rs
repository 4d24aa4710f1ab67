//! Majorants (moduli of continuity) and their regularity conditions.
//!
//! A majorant ω is admissible when ω(0⁺) = 0, ω is non-decreasing, and
//! t ↦ ω(t)/t is non-increasing. Regularity additionally asks for finite
//! constants in
//!
//! * small scales: `∫_0^δ ω(t)/t dt ≤ C ω(δ)`,
//! * large scales: `δ ∫_δ^∞ ω(t)/t² dt ≤ C ω(δ)`,
//!
//! uniformly over δ. Both integrals are evaluated with dyadic panels plus a
//! geometric-tail extrapolation, so power majorants come out to their exact
//! constants (1/α and 1/(1−α)) instead of a truncation-dependent undercount.

use crate::error::{Error, Result};
use crate::quad::{dyadic_integral, DyadicDirection};
use std::fmt;
use std::sync::Arc;

#[derive(Clone)]
pub struct Majorant {
    label: String,
    f: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
}

impl fmt::Debug for Majorant {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        fm.debug_struct("Majorant").field("label", &self.label).finish()
    }
}

impl Majorant {
    /// `ω(t) = t^alpha` with `0 < alpha <= 1`. Regular iff `alpha < 1`.
    pub fn power(alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(Error::InvalidParameter(format!(
                "power majorant needs 0 < alpha <= 1, got {alpha}"
            )));
        }
        Ok(Self {
            label: format!("t^{alpha}"),
            f: Arc::new(move |t| t.powf(alpha)),
        })
    }

    /// `ω(t) = t`: admissible but not regular (the large-scale integral is a
    /// divergent logarithm).
    pub fn linear() -> Self {
        Self {
            label: "t".into(),
            f: Arc::new(|t| t),
        }
    }

    /// `ω(t) = min(t, cap)`, `cap > 0`.
    pub fn capped(cap: f64) -> Result<Self> {
        if !(cap > 0.0 && cap.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "cap must be positive and finite, got {cap}"
            )));
        }
        Ok(Self {
            label: format!("min(t,{cap})"),
            f: Arc::new(move |t| t.min(cap)),
        })
    }

    pub fn custom(
        label: impl Into<String>,
        f: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        Self {
            label: label.into(),
            f: Arc::new(f),
        }
    }

    pub fn eval(&self, t: f64) -> f64 {
        (self.f)(t)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Checks the majorant axioms on a logarithmic grid up to `t_max` and
    /// reports the first violation.
    pub fn check_axioms(&self, t_max: f64) -> Result<()> {
        if !(t_max > 0.0 && t_max.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "axiom check needs a positive finite scale, got {t_max}"
            )));
        }
        // Vanishing at 0 is probed extremely deep so that slowly-vanishing
        // admissible majorants (small powers, logarithmic rates) still pass,
        // while anything with a genuine positive limit is caught.
        let tiny = self.eval(1e-300 * t_max);
        if !(tiny.abs() <= 1e-2 * (1.0 + self.eval(t_max).abs())) {
            return Err(Error::InvalidParameter(format!(
                "majorant '{}' does not vanish at 0: ω(1e-300·t_max) = {tiny}",
                self.label
            )));
        }
        const POINTS: usize = 240;
        let lo = 1e-10 * t_max;
        let step = (t_max / lo).powf(1.0 / (POINTS - 1) as f64);
        let mut prev_t = lo;
        let mut prev_v = self.eval(lo);
        if !(prev_v >= 0.0) {
            return Err(Error::InvalidParameter(format!(
                "majorant '{}' is negative at t = {prev_t}",
                self.label
            )));
        }
        for k in 1..POINTS {
            let t = lo * step.powi(k as i32);
            let v = self.eval(t);
            if !v.is_finite() || v < 0.0 {
                return Err(Error::InvalidParameter(format!(
                    "majorant '{}' is not finite/nonnegative at t = {t}",
                    self.label
                )));
            }
            if v + 1e-12 * (1.0 + v.abs()) < prev_v {
                return Err(Error::InvalidParameter(format!(
                    "majorant '{}' decreases between t = {prev_t} and t = {t}",
                    self.label
                )));
            }
            // ω(t)/t must not increase with t
            let slope_prev = prev_v / prev_t;
            let slope = v / t;
            if slope > slope_prev * (1.0 + 1e-9) {
                return Err(Error::InvalidParameter(format!(
                    "majorant '{}': ω(t)/t increases between t = {prev_t} and t = {t}",
                    self.label
                )));
            }
            prev_t = t;
            prev_v = v;
        }
        Ok(())
    }

    /// Measures both regularity constants over a grid of base scales
    /// `δ ∈ [1e-4·delta0, delta0]`.
    pub fn regularity(&self, delta0: f64) -> Result<RegularityReport> {
        if !(delta0 > 0.0 && delta0.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "regularity scan needs a positive finite base scale, got {delta0}"
            )));
        }
        const GRID: usize = 64;
        let lo = 1e-4 * delta0;
        let ratio = (delta0 / lo).powf(1.0 / (GRID - 1) as f64);
        let mut small = ConditionEstimate::new();
        let mut large = ConditionEstimate::new();
        for k in 0..GRID {
            let delta = lo * ratio.powi(k as i32);
            let omega = self.eval(delta);
            if omega <= 0.0 {
                return Err(Error::InvalidParameter(format!(
                    "majorant '{}' vanishes at δ = {delta}; constants undefined",
                    self.label
                )));
            }
            let inner = dyadic_integral(DyadicDirection::Inward, delta, 4096, 1e-12, |t| {
                self.eval(t) / t
            });
            small.absorb(inner.value / omega, delta, !inner.converged);
            // divide twice: t*t overflows long before the dyadic sweep runs
            // out of panels, which would silently zero the integrand
            let outer = dyadic_integral(DyadicDirection::Outward, delta, 4096, 1e-12, |t| {
                self.eval(t) / t / t
            });
            large.absorb(delta * outer.value / omega, delta, !outer.converged);
        }
        Ok(RegularityReport {
            label: self.label.clone(),
            small_scale: small,
            large_scale: large,
        })
    }
}

/// Worst-case constant observed for one regularity condition.
#[derive(Debug, Clone, Copy)]
pub struct ConditionEstimate {
    pub constant: f64,
    pub worst_delta: f64,
    pub divergent: bool,
}

impl ConditionEstimate {
    fn new() -> Self {
        Self {
            constant: 0.0,
            worst_delta: f64::NAN,
            divergent: false,
        }
    }

    fn absorb(&mut self, c: f64, delta: f64, divergent: bool) {
        self.divergent |= divergent;
        if c > self.constant {
            self.constant = c;
            self.worst_delta = delta;
        }
    }

    pub fn holds(&self) -> bool {
        !self.divergent && self.constant.is_finite()
    }
}

#[derive(Debug, Clone)]
pub struct RegularityReport {
    pub label: String,
    pub small_scale: ConditionEstimate,
    pub large_scale: ConditionEstimate,
}

impl RegularityReport {
    pub fn is_regular(&self) -> bool {
        self.small_scale.holds() && self.large_scale.holds()
    }
}
