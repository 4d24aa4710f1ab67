//! Geometric functionals of a disk map: circle-image perimeter, radial path
//! length, image area, the isoperimetric comparison, and the measured
//! dilatation constant.

use crate::error::{Error, Result};
use crate::quad::{gauss_legendre, periodic_trapezoid_real};
use crate::solver::DiskMap;
use crate::Complex64;
use std::f64::consts::{PI, TAU};

fn check_radius(map: &dyn DiskMap, r: f64) -> Result<()> {
    if !(r >= 0.0 && r.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "radius must be a nonnegative finite number, got {r}"
        )));
    }
    if r > map.radius_cap() + 1e-12 {
        return Err(Error::OutOfDomain {
            what: "circle radius beyond the map's trusted evaluation cap",
            z: Complex64::new(r, 0.0),
            modulus: r,
        });
    }
    Ok(())
}

/// Length of the image of the circle `|z| = r`:
/// `ℓ(r) = r ∮ |f_z - e^{-2iθ} f_z̄| dθ`.
pub fn perimeter(map: &dyn DiskMap, r: f64, nodes: usize) -> Result<f64> {
    check_radius(map, r)?;
    if r == 0.0 {
        return Ok(0.0);
    }
    let value = periodic_trapezoid_real(nodes.max(16), |t| {
        map.jet(Complex64::from_polar(r, t)).tangential_symbol(t).norm()
    });
    Ok(r * value)
}

/// Length of the image of the radius segment `[0, r e^{iθ}]`:
/// `ℓ*(r,θ) = ∫_0^r |f_z + e^{-2iθ} f_z̄| dρ`.
pub fn radial_length(map: &dyn DiskMap, r: f64, theta: f64, nodes: usize) -> Result<f64> {
    check_radius(map, r)?;
    let gl = gauss_legendre(nodes.max(16));
    Ok(gl.integrate(0.0, r, |rho| {
        map.jet(Complex64::from_polar(rho, theta)).radial_symbol(theta).norm()
    }))
}

/// Perimeter sampled along `r_k = 1 - 2^{-k}` up to the map's radius cap,
/// with `r = 1` appended when the map's jets extend to the closed disk.
#[derive(Debug, Clone)]
pub struct LengthProfile {
    pub radii: Vec<f64>,
    pub lengths: Vec<f64>,
}

impl LengthProfile {
    pub fn sup(&self) -> f64 {
        self.lengths.iter().copied().fold(0.0, f64::max)
    }

    /// True when the profile was still growing at its largest radius and the
    /// largest radius is interior — the sup may then undercount
    /// `sup_r ℓ(r)`.
    pub fn still_increasing(&self) -> bool {
        let n = self.lengths.len();
        if n < 2 || self.radii[n - 1] >= 1.0 {
            return false;
        }
        let last = self.lengths[n - 1];
        let prev = self.lengths[n - 2];
        last > prev * (1.0 + 1e-6)
    }
}

pub fn length_profile(map: &dyn DiskMap, nodes: usize) -> Result<LengthProfile> {
    let cap = map.radius_cap();
    let mut radii: Vec<f64> = (1..=12)
        .map(|k| 1.0 - 0.5f64.powi(k))
        .filter(|&r| r <= cap + 1e-12)
        .collect();
    if map.closed_disk() {
        radii.push(1.0);
    }
    let lengths = radii
        .iter()
        .map(|&r| perimeter(map, r, nodes))
        .collect::<Result<Vec<_>>>()?;
    Ok(LengthProfile { radii, lengths })
}

/// Area of `f({|z| < r})` counted with multiplicity:
/// `∫_0^{2π} ∫_0^r J_f(ρ e^{iθ}) ρ dρ dθ`. Errors on a negative Jacobian.
pub fn image_area(
    map: &dyn DiskMap,
    r: f64,
    radial_nodes: usize,
    angular_nodes: usize,
) -> Result<f64> {
    check_radius(map, r)?;
    let gl = gauss_legendre(radial_nodes.max(16));
    let m = angular_nodes.max(16);
    let mut acc = 0.0;
    for j in 0..m {
        let theta = TAU * j as f64 / m as f64;
        let e = Complex64::from_polar(1.0, theta);
        let mut bad: Option<(Complex64, f64)> = None;
        acc += gl.integrate(0.0, r, |rho| {
            let z = rho * e;
            let jet = map.jet(z);
            let jac = jet.jacobian();
            if jac < -1e-9 * (1.0 + jet.op_norm() * jet.op_norm()) && bad.is_none() {
                bad = Some((z, jac));
            }
            jac * rho
        });
        if let Some((z, jacobian)) = bad {
            return Err(Error::SenseReversal { z, jacobian });
        }
    }
    Ok(acc * TAU / m as f64)
}

/// Same-radius isoperimetric comparison: the area of `f({|z| < r})` against
/// `ℓ(r)² / 4π`.
#[derive(Debug, Clone, Copy)]
pub struct IsoperimetricReport {
    pub radius: f64,
    pub area: f64,
    pub perimeter: f64,
    pub bound: f64,
    /// `bound - area`; nonnegative (up to tolerance) when the inequality holds.
    pub margin: f64,
}

impl IsoperimetricReport {
    pub fn holds(&self, tol: f64) -> bool {
        self.margin >= -tol
    }

    pub fn sharp(&self, tol: f64) -> bool {
        self.margin.abs() <= tol * self.bound.max(1.0)
    }
}

pub fn isoperimetric_check(
    map: &dyn DiskMap,
    r: f64,
    radial_nodes: usize,
    angular_nodes: usize,
) -> Result<IsoperimetricReport> {
    let perimeter = perimeter(map, r, angular_nodes)?;
    let area = image_area(map, r, radial_nodes, angular_nodes)?;
    let bound = perimeter * perimeter / (4.0 * PI);
    Ok(IsoperimetricReport {
        radius: r,
        area,
        perimeter,
        bound,
        margin: bound - area,
    })
}

/// Grid maximum of `(|f_z| + |f_z̄|) / (|f_z| - |f_z̄|)` over the polar grid
/// `r_i = cap·(i+1)/n`, `θ_j = 2πj/m`, plus the origin. Errors when the
/// differential degenerates.
pub fn distortion_constant(
    map: &dyn DiskMap,
    radial_samples: usize,
    angular_samples: usize,
) -> Result<f64> {
    let cap = map.radius_cap();
    let n = radial_samples.max(4);
    let m = angular_samples.max(8);
    let mut best: f64 = 0.0;
    let mut consider = |z: Complex64| -> Result<()> {
        let jet = map.jet(z);
        let lambda = jet.min_stretch();
        if lambda < 1e-12 {
            return Err(Error::DegenerateJet { z, lambda });
        }
        best = best.max(jet.op_norm() / lambda);
        Ok(())
    };
    consider(Complex64::new(0.0, 0.0))?;
    for i in 0..n {
        let r = cap * (i + 1) as f64 / n as f64;
        for j in 0..m {
            consider(Complex64::from_polar(r, TAU * j as f64 / m as f64))?;
        }
    }
    Ok(best)
}
