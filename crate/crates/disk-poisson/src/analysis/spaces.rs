//! Norms and oscillation functionals on disk maps: weighted derivative
//! suprema, mean oscillation over subdisks, pairwise Lipschitz-type
//! constants, and per-ray cumulative profiles.

use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};
use crate::majorant::Majorant;
use crate::quad::gauss_legendre;
use crate::solver::DiskMap;
use crate::Complex64;

/// Mean of `|f(ζ) - f(z)|` over the disk `D(z, r)`:
/// `(1/(π r²)) ∫_{D(z,r)} |f(ζ) - f(z)| dA(ζ)`.
///
/// The disk must stay inside the closed unit disk.
pub fn mean_oscillation(
    map: &dyn DiskMap,
    z: Complex64,
    r: f64,
    radial_nodes: usize,
    angular_nodes: usize,
) -> Result<f64> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "mean oscillation radius must be positive and finite, got {r}"
        )));
    }
    if z.norm() + r > 1.0 + 1e-12 {
        return Err(Error::OutOfDomain {
            what: "mean-oscillation disk",
            z,
            modulus: z.norm() + r,
        });
    }
    let center = map.value(z);
    let gl = gauss_legendre(radial_nodes.max(8));
    let m = angular_nodes.max(8);
    let mut acc = 0.0;
    for j in 0..m {
        let e = Complex64::from_polar(1.0, TAU * j as f64 / m as f64);
        acc += gl.integrate(0.0, r, |rho| (map.value(z + rho * e) - center).norm() * rho);
    }
    Ok(acc * (TAU / m as f64) / (PI * r * r))
}

/// Supremum of `‖D_f(z)‖ ω(d(z)^α)` over a boundary-refined polar grid,
/// where `d(z) = 1 - |z|`.
pub fn derivative_sup_weighted(
    map: &dyn DiskMap,
    omega: &Majorant,
    alpha: f64,
    levels: usize,
    angular: usize,
) -> Result<f64> {
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "weight exponent must be positive, got {alpha}"
        )));
    }
    let radii = crate::sampling::boundary_refined_radii(levels, map.radius_cap());
    let m = angular.max(4);
    let mut best: f64 = 0.0;
    for &r in &radii {
        let d = 1.0 - r;
        let weight = omega.eval(d.powf(alpha));
        if weight == 0.0 {
            continue;
        }
        let angles = if r == 0.0 { 1 } else { m };
        for j in 0..angles {
            let z = Complex64::from_polar(r, TAU * j as f64 / angles as f64);
            best = best.max(map.jet(z).op_norm() * weight);
        }
    }
    Ok(best)
}

/// `|f(0)|` plus the weighted derivative supremum: the norm whose
/// finiteness defines the weighted Bloch-type class.
pub fn bloch_norm(
    map: &dyn DiskMap,
    omega: &Majorant,
    alpha: f64,
    levels: usize,
    angular: usize,
) -> Result<f64> {
    let origin = map.value(Complex64::new(0.0, 0.0)).norm();
    Ok(origin + derivative_sup_weighted(map, omega, alpha, levels, angular)?)
}

/// Supremum of `|f(a) - f(b)| / ω(|a - b|)` over the given pairs.
pub fn lipschitz_constant(
    map: &dyn DiskMap,
    omega: &Majorant,
    pairs: &[(Complex64, Complex64)],
) -> f64 {
    let mut best: f64 = 0.0;
    for &(a, b) in pairs {
        let sep = (a - b).norm();
        if sep < 1e-14 {
            continue;
        }
        let w = omega.eval(sep);
        if w <= 0.0 {
            continue;
        }
        best = best.max((map.value(a) - map.value(b)).norm() / w);
    }
    best
}

/// Supremum of `|f(a) - f(b)| · ω(d(a)^s d(b)^{α-s}) / |a - b|`, the constant
/// in the distance-weighted Lipschitz condition. Requires `0 ≤ s < 1` and
/// `1 ≤ α ≤ s + 1`.
pub fn weighted_lipschitz(
    map: &dyn DiskMap,
    omega: &Majorant,
    s: f64,
    alpha: f64,
    pairs: &[(Complex64, Complex64)],
) -> Result<f64> {
    if !(0.0..1.0).contains(&s) {
        return Err(Error::InvalidParameter(format!(
            "weight split must satisfy 0 <= s < 1, got {s}"
        )));
    }
    if !(1.0..=s + 1.0).contains(&alpha) {
        return Err(Error::InvalidParameter(format!(
            "weight exponent must satisfy 1 <= alpha <= s + 1, got {alpha} (s = {s})"
        )));
    }
    let mut best: f64 = 0.0;
    for &(a, b) in pairs {
        let sep = (a - b).norm();
        if sep < 1e-14 {
            continue;
        }
        let da = 1.0 - a.norm();
        let db = 1.0 - b.norm();
        let w = omega.eval(da.powf(s) * db.powf(alpha - s));
        best = best.max((map.value(a) - map.value(b)).norm() * w / sep);
    }
    Ok(best)
}

/// `∫_0^1 ‖D_f(a + t(b-a))‖ |b - a| dt`: the derivative integrated along
/// the straight segment from `a` to `b`.
pub fn segment_derivative_integral(
    map: &dyn DiskMap,
    a: Complex64,
    b: Complex64,
    nodes: usize,
) -> f64 {
    let sep = (b - a).norm();
    if sep == 0.0 {
        return 0.0;
    }
    gauss_legendre(nodes.max(8)).integrate(0.0, 1.0, |t| map.jet(a + t * (b - a)).op_norm()) * sep
}

/// Supremum over pairs of `∫_seg ω(d(ζ))/d(ζ) ds / ω(|a - b|)` with the
/// segment joining the pair: the constant in the curve condition that turns
/// derivative bounds into moduli of continuity.
pub fn curve_condition_constant(
    omega: &Majorant,
    pairs: &[(Complex64, Complex64)],
    nodes: usize,
) -> f64 {
    let gl = gauss_legendre(nodes.max(8));
    let mut best: f64 = 0.0;
    for &(a, b) in pairs {
        let sep = (b - a).norm();
        if sep < 1e-14 {
            continue;
        }
        let w = omega.eval(sep);
        if w <= 0.0 {
            continue;
        }
        let integral = gl.integrate(0.0, 1.0, |t| {
            let d = 1.0 - (a + t * (b - a)).norm();
            omega.eval(d) / d
        }) * sep;
        best = best.max(integral / w);
    }
    best
}

/// Cumulative per-ray integrals `A(r_i) = max_θ ∫_0^{r_i} φ(ρ e^{iθ}) dρ`
/// for an ascending radius grid. Panel-wise Gauss-Legendre along each ray.
pub fn radial_profile(
    phi: &dyn Fn(Complex64) -> f64,
    radii: &[f64],
    angular: usize,
    gl_nodes: usize,
) -> Vec<f64> {
    let gl = gauss_legendre(gl_nodes.max(4));
    let m = angular.max(1);
    let mut sup = vec![0.0f64; radii.len()];
    for j in 0..m {
        let e = Complex64::from_polar(1.0, TAU * j as f64 / m as f64);
        let mut prefix = 0.0;
        let mut prev = 0.0;
        for (i, &r) in radii.iter().enumerate() {
            prefix += gl.integrate(prev, r, |rho| phi(rho * e));
            prev = r;
            sup[i] = sup[i].max(prefix);
        }
    }
    sup
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boundary::{BoundaryData, SourceField};
    use crate::c64;
    use crate::catalog::CatalogMap;
    use crate::sampling::{adversarial_pairs, PairSampler};
    use crate::solver::{PoissonSolution, QuadratureConfig};
    use approx::assert_abs_diff_eq;

    fn raw_pairs(pairs: Vec<(crate::disk::DiskPoint, crate::disk::DiskPoint)>) -> Vec<(Complex64, Complex64)> {
        pairs.into_iter().map(|(a, b)| (a.z(), b.z())).collect()
    }

    #[test]
    fn identity_mean_oscillation_is_two_thirds_r() {
        let map = CatalogMap::parse("identity").unwrap();
        for &r in &[0.1, 0.5, 0.9] {
            let mo = mean_oscillation(&map, c64(0.0, 0.0), r, 32, 64).unwrap();
            assert_abs_diff_eq!(mo, 2.0 * r / 3.0, epsilon = 1e-12);
        }
        // translation invariance of the identity's oscillation
        let mo = mean_oscillation(&map, c64(0.3, 0.2), 0.2, 32, 64).unwrap();
        assert_abs_diff_eq!(mo, 2.0 * 0.2 / 3.0, epsilon = 1e-12);
    }

    #[test]
    fn mean_oscillation_rejects_disks_leaving_the_domain() {
        let map = CatalogMap::parse("identity").unwrap();
        assert!(mean_oscillation(&map, c64(0.8, 0.0), 0.5, 16, 16).is_err());
        assert!(mean_oscillation(&map, c64(0.0, 0.0), 0.0, 16, 16).is_err());
    }

    #[test]
    fn identity_bloch_norm_is_one() {
        let map = CatalogMap::parse("identity").unwrap();
        let omega = Majorant::linear();
        let norm = bloch_norm(&map, &omega, 1.0, 12, 16).unwrap();
        assert_abs_diff_eq!(norm, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn unit_source_solution_bloch_norm() {
        // f = -(1-|z|^2)/4 has |f(0)| = 1/4 and ‖D_f(z)‖ (1-|z|) = |z|(1-|z|)/2,
        // maximal 1/8 at |z| = 1/2, so the norm is 3/8.
        let cfg = QuadratureConfig::default();
        let boundary = BoundaryData::zero(cfg.boundary_nodes).unwrap();
        let solution =
            PoissonSolution::new(boundary, SourceField::constant(c64(1.0, 0.0)), cfg).unwrap();
        let omega = Majorant::linear();
        let norm = bloch_norm(&solution, &omega, 1.0, 8, 8).unwrap();
        assert_abs_diff_eq!(norm, 0.375, epsilon = 5e-5);
    }

    #[test]
    fn identity_weighted_lipschitz_near_one() {
        let map = CatalogMap::parse("identity").unwrap();
        let omega = Majorant::linear();
        let mut sampler = PairSampler::new(11, 0.999);
        let mut pairs = raw_pairs(sampler.pairs(2000));
        pairs.extend(raw_pairs(adversarial_pairs(0.999)));
        let c = weighted_lipschitz(&map, &omega, 0.0, 1.0, &pairs).unwrap();
        assert!(c <= 1.0 + 1e-12, "identity constant exceeds 1: {c}");
        assert!(c > 1.0 - 1e-3, "near-center pairs should push it to 1: {c}");
    }

    #[test]
    fn weighted_lipschitz_rejects_out_of_range_exponents() {
        let map = CatalogMap::parse("identity").unwrap();
        let omega = Majorant::linear();
        let pairs = [(c64(0.0, 0.0), c64(0.5, 0.0))];
        assert!(weighted_lipschitz(&map, &omega, 1.0, 1.5, &pairs).is_err());
        assert!(weighted_lipschitz(&map, &omega, 0.5, 0.9, &pairs).is_err());
        assert!(weighted_lipschitz(&map, &omega, 0.5, 1.6, &pairs).is_err());
    }

    #[test]
    fn linear_majorant_curve_condition_is_exactly_one() {
        // ω(t) = t makes the integrand 1, so the integral is the chord length.
        let omega = Majorant::linear();
        let mut sampler = PairSampler::new(3, 0.99);
        let pairs = raw_pairs(sampler.pairs(50));
        let c = curve_condition_constant(&omega, &pairs, 16);
        assert_abs_diff_eq!(c, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn sqrt_majorant_curve_condition_is_finite_and_bigger() {
        let omega = Majorant::power(0.5).unwrap();
        let mut pairs = raw_pairs(adversarial_pairs(0.999));
        pairs.extend(raw_pairs(PairSampler::new(5, 0.999).pairs(200)));
        let c = curve_condition_constant(&omega, &pairs, 32);
        assert!(c.is_finite());
        assert!(c >= 1.0, "sqrt weight can only widen the ratio: {c}");
    }

    #[test]
    fn segment_integral_of_identity_is_chord_length() {
        let map = CatalogMap::parse("identity").unwrap();
        let a = c64(-0.3, 0.4);
        let b = c64(0.5, -0.1);
        let got = segment_derivative_integral(&map, a, b, 16);
        assert_abs_diff_eq!(got, (b - a).norm(), epsilon = 1e-13);
    }

    #[test]
    fn radial_profile_of_constants_and_linear_fields() {
        let radii: Vec<f64> = (1..=10).map(|i| i as f64 / 10.0).collect();
        let ones = radial_profile(&|_| 1.0, &radii, 8, 8);
        for (a, r) in ones.iter().zip(&radii) {
            assert_abs_diff_eq!(*a, *r, epsilon = 1e-12);
        }
        let linear = radial_profile(&|z: Complex64| 2.0 * z.norm(), &radii, 8, 8);
        for (a, r) in linear.iter().zip(&radii) {
            assert_abs_diff_eq!(*a, r * r, epsilon = 1e-12);
        }
    }

    #[test]
    fn radial_profile_takes_the_worst_ray() {
        // φ = ρ (1 + cos θ)/... use (1 + cos²θ) ρ: worst ray θ = 0 gives r².
        let radii = [0.25, 0.5, 1.0];
        let phi = |z: Complex64| {
            let theta = z.arg();
            z.norm() * (1.0 + theta.cos() * theta.cos())
        };
        let prof = radial_profile(&phi, &radii, 64, 16);
        for (a, r) in prof.iter().zip(&radii) {
            assert_abs_diff_eq!(*a, r * r, epsilon = 1e-12);
        }
    }
}
