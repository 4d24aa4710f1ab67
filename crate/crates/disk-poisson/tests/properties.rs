//! Randomized invariants of the kernels, jets, functionals, and the solver,
//! plus an end-to-end check that the solver reproduces the reference
//! mappings from their own boundary data and source.

use disk_poisson::analysis::spectrum::harmonic_coefficients;
use disk_poisson::geometry;
use disk_poisson::kernels::{green_kernel, poisson_kernel};
use disk_poisson::quad::periodic_trapezoid_real;
use disk_poisson::sampling::PairSampler;
use disk_poisson::{
    BoundaryAngle, BoundaryData, CatalogMap, DiskMap, DiskPoint, PoissonSolution,
    QuadratureConfig, SourceField, WirtingerJet,
};
use num_complex::Complex64;
use proptest::prelude::*;
use std::f64::consts::{PI, TAU};

fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Interior points kept away from the rim, where quadrature tolerances are
/// uniform and none of the properties below degenerate.
fn interior(max_r: f64) -> impl Strategy<Value = DiskPoint> {
    (0.0..max_r, 0.0..TAU)
        .prop_map(|(r, t)| DiskPoint::interior(Complex64::from_polar(r, t)).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn green_kernel_symmetric_and_positive(z in interior(0.93), w in interior(0.93)) {
        prop_assume!((z.z() - w.z()).norm() > 1e-6);
        let a = green_kernel(z, w).unwrap();
        let b = green_kernel(w, z).unwrap();
        prop_assert!(a > 0.0);
        prop_assert!((a - b).abs() <= 1e-11 * (1.0 + a.abs()));
    }

    #[test]
    fn poisson_kernel_has_unit_mean(z in interior(0.9)) {
        let mean = periodic_trapezoid_real(512, |t| {
            poisson_kernel(z, BoundaryAngle::new(t))
        }) / TAU;
        prop_assert!((mean - 1.0).abs() < 1e-10);
    }

    #[test]
    fn jet_norms_satisfy_jacobian_identity(
        (ar, ai, br, bi) in (-5.0..5.0f64, -5.0..5.0f64, -5.0..5.0f64, -5.0..5.0f64)
    ) {
        let jet = WirtingerJet::new(c64(0.0, 0.0), c64(ar, ai), c64(br, bi));
        let n = jet.norms();
        // |J| = (|f_z|+|f_z̄|)·||f_z|-|f_z̄|| and ‖D‖ ≥ λ ≥ 0
        prop_assert!(n.op_norm >= n.min_stretch - 1e-15);
        prop_assert!(n.min_stretch >= 0.0);
        prop_assert!((n.jacobian.abs() - n.op_norm * n.min_stretch).abs()
            <= 1e-12 * (1.0 + n.jacobian.abs()));
    }

    #[test]
    fn dilation_scales_perimeter_and_area(m in 0.2..5.0f64, r in 0.1..1.0f64) {
        let base = CatalogMap::parse("identity").unwrap();
        let scaled = CatalogMap::parse(&format!("scale:{m}")).unwrap();
        let p0 = geometry::perimeter(&base, r, 512).unwrap();
        let p1 = geometry::perimeter(&scaled, r, 512).unwrap();
        prop_assert!((p1 - m * p0).abs() <= 1e-9 * p1.abs());
        let a0 = geometry::image_area(&base, r, 32, 128).unwrap();
        let a1 = geometry::image_area(&scaled, r, 32, 128).unwrap();
        prop_assert!((a1 - m * m * a0).abs() <= 1e-9 * a1.abs());
    }

    #[test]
    fn harmonic_extension_is_linear_in_boundary_data(
        s in 0.25..4.0f64,
        z in interior(0.8),
    ) {
        let n = 256;
        let psi1 = BoundaryData::from_fn(n, |t| Complex64::from_polar(1.0, t)).unwrap();
        let psi2 = BoundaryData::from_fn(n, |t| {
            0.3 * Complex64::from_polar(1.0, -2.0 * t) + c64(0.1, 0.4)
        }).unwrap();
        let combined = BoundaryData::from_fn(n, |t| {
            s * (Complex64::from_polar(1.0, t)
                + 0.3 * Complex64::from_polar(1.0, -2.0 * t)
                + c64(0.1, 0.4))
        }).unwrap();
        let cfg = QuadratureConfig { boundary_nodes: n, ..QuadratureConfig::default() };
        let f1 = PoissonSolution::new(psi1, SourceField::zero(), cfg.clone()).unwrap();
        let f2 = PoissonSolution::new(psi2, SourceField::zero(), cfg.clone()).unwrap();
        let f = PoissonSolution::new(combined, SourceField::zero(), cfg).unwrap();
        let direct = f.solve(z);
        let summed = s * (f1.solve(z) + f2.solve(z));
        prop_assert!((direct - summed).norm() <= 1e-10 * (1.0 + summed.norm()));
    }

    #[test]
    fn spectrum_round_trips_band_limited_data(
        (a1r, a1i, a3r, b2r, b2i) in
            (-1.0..1.0f64, -1.0..1.0f64, -1.0..1.0f64, -1.0..1.0f64, -1.0..1.0f64),
    ) {
        let (a1, a3, b2) = (c64(a1r, a1i), c64(a3r, 0.0), c64(b2r, b2i));
        let data = BoundaryData::from_fn(64, |t| {
            let u = Complex64::from_polar(1.0, t);
            a1 * u + a3 * u * u * u + (b2 * u * u).conj()
        }).unwrap();
        let spec = harmonic_coefficients(&data).unwrap();
        prop_assert!((spec.a(1) - a1).norm() < 1e-12);
        prop_assert!((spec.a(3) - a3).norm() < 1e-12);
        prop_assert!((spec.b(2) - b2).norm() < 1e-12);
        prop_assert!(spec.a(2).norm() < 1e-12);
        prop_assert!(spec.b(1).norm() < 1e-12);
        prop_assert!(!spec.aliasing_suspect());
        // interior evaluation agrees with the closed form
        let z = Complex64::from_polar(0.7, 1.1);
        let expect = a1 * z + a3 * z * z * z + (b2 * z * z).conj();
        prop_assert!((spec.evaluate(z) - expect).norm() < 1e-12);
    }
}

/// The solver, fed nothing but a reference map's boundary samples and source
/// term, must reproduce the map in the interior.
#[test]
fn solver_reproduces_reference_maps() {
    let cfg = QuadratureConfig::default();
    let mut sampler = PairSampler::new(13, 0.7);
    let probes: Vec<DiskPoint> = (0..5).map(|_| sampler.point()).collect();
    for map in CatalogMap::default_set() {
        let boundary = map.boundary_data(cfg.boundary_nodes).unwrap();
        let sol = PoissonSolution::new(boundary, map.source().clone(), cfg.clone()).unwrap();
        for &z in &probes {
            let got = sol.solve(z);
            let want = map.value(z.z());
            assert!(
                (got - want).norm() < 1e-4,
                "{}: solver drifts at {}: {} vs {}",
                map.label(),
                z.z(),
                got,
                want
            );
        }
    }
}

/// Green potential of the unit source against its closed form
/// G[1] = (1 - |z|²)/4 on a ring of interior points.
#[test]
fn unit_source_potential_matches_closed_form() {
    let cfg = QuadratureConfig {
        boundary_nodes: 512,
        ..QuadratureConfig::default()
    };
    let boundary = BoundaryData::zero(512).unwrap();
    let sol =
        PoissonSolution::new(boundary, SourceField::constant(c64(1.0, 0.0)), cfg).unwrap();
    for k in 0..8 {
        let z = DiskPoint::interior(Complex64::from_polar(
            0.1 + 0.1 * k as f64,
            0.9 * k as f64,
        ))
        .unwrap();
        let want = -(1.0 - z.modulus() * z.modulus()) / 4.0;
        let got = sol.solve(z);
        assert!(
            (got - c64(want, 0.0)).norm() < 1e-5,
            "G[1] wrong at |z| = {}: {} vs {}",
            z.modulus(),
            got,
            want
        );
    }
}

/// Isoperimetric comparison under refinement: the measured image area of the
/// unit disk under `z + 0.3 z̄` converges to π(1 - 0.09) from either side
/// within the stated tolerance as the grid doubles.
#[test]
fn shear_area_converges_under_refinement() {
    let map = CatalogMap::parse("shear:0.3").unwrap();
    let exact = PI * (1.0 - 0.09);
    let mut errs = Vec::new();
    for (rad, ang) in [(16, 64), (32, 128), (64, 256)] {
        let a = geometry::image_area(&map, 1.0, rad, ang).unwrap();
        errs.push((a - exact).abs());
    }
    assert!(errs[2] < 1e-9, "finest error {}", errs[2]);
    assert!(errs[2] <= errs[0] * 1.05 + 1e-12, "no refinement gain: {errs:?}");
}
