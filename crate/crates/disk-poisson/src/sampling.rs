//! Deterministic point and pair sampling for sup-norm estimation.
//!
//! Seeded quasi-random interior pairs are supplemented with fixed adversarial
//! configurations (near-boundary, near-diagonal, near-center) where Lipschitz
//! weights degenerate and kernel quadratures are most strained.

use crate::disk::DiskPoint;
use crate::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::TAU;

/// Uniform-area sampler over `|z| <= max_radius`, reproducible from the seed.
#[derive(Debug, Clone)]
pub struct PairSampler {
    rng: ChaCha8Rng,
    max_radius: f64,
}

impl PairSampler {
    pub fn new(seed: u64, max_radius: f64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
            max_radius: max_radius.clamp(0.0, 1.0 - 1e-9),
        }
    }

    pub fn point(&mut self) -> DiskPoint {
        // r = R√u gives the uniform area density
        let r = self.max_radius * self.rng.gen::<f64>().sqrt();
        let t = TAU * self.rng.gen::<f64>();
        DiskPoint::interior(Complex64::from_polar(r, t)).expect("sampled inside the open disk")
    }

    pub fn pair(&mut self) -> (DiskPoint, DiskPoint) {
        loop {
            let a = self.point();
            let b = self.point();
            if (a.z() - b.z()).norm() > 1e-12 {
                return (a, b);
            }
        }
    }

    pub fn pairs(&mut self, n: usize) -> Vec<(DiskPoint, DiskPoint)> {
        (0..n).map(|_| self.pair()).collect()
    }
}

/// Fixed configurations that stress the estimators: points hugging the
/// boundary, pairs separated by ~1e-7, and a near-center antipodal pair.
/// Pairs whose points exceed `max_radius` are dropped.
pub fn adversarial_pairs(max_radius: f64) -> Vec<(DiskPoint, DiskPoint)> {
    let polar = |r: f64, t: f64| Complex64::from_polar(r, t);
    let raw = [
        // antipodal near the boundary
        (polar(1.0 - 1e-2, 0.3), polar(1.0 - 1e-2, 0.3 + 0.5 * TAU)),
        // deep boundary point against the center region
        (polar(1.0 - 1e-3, 2.0), polar(0.05, 1.0)),
        // same-ray boundary-layer pair
        (polar(1.0 - 2e-4, 0.0), polar(1.0 - 4e-4, 0.0)),
        // near-diagonal pair (distance 1e-7)
        (
            Complex64::new(0.5, 0.0),
            Complex64::new(0.5 + 1e-7 / 2f64.sqrt(), 1e-7 / 2f64.sqrt()),
        ),
        // near-center antipodal pair
        (Complex64::new(1e-4, 0.0), Complex64::new(-1e-4, 0.0)),
        // moderate pair with very different boundary distances
        (polar(0.9, 4.0), polar(0.1, 4.1)),
    ];
    raw.iter()
        .filter(|(a, b)| a.norm() <= max_radius && b.norm() <= max_radius)
        .map(|&(a, b)| {
            (
                DiskPoint::interior(a).expect("adversarial points are interior"),
                DiskPoint::interior(b).expect("adversarial points are interior"),
            )
        })
        .collect()
}

/// Polar evaluation grid: the origin plus `radial × angular` points with
/// radii `r_max·(i+1)/radial`.
pub fn polar_grid(radial: usize, angular: usize, r_max: f64) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(radial * angular + 1);
    out.push(Complex64::new(0.0, 0.0));
    for i in 0..radial {
        let r = r_max * (i + 1) as f64 / radial as f64;
        for j in 0..angular {
            out.push(Complex64::from_polar(r, TAU * j as f64 / angular as f64));
        }
    }
    out
}

/// Radii accumulating geometrically at the boundary: `{0} ∪ {1 - 2^{-k/2}}`,
/// truncated at `cap`.
pub fn boundary_refined_radii(levels: usize, cap: f64) -> Vec<f64> {
    let mut out = vec![0.0];
    for k in 1..=levels {
        let r = 1.0 - 0.5f64.powf(k as f64 / 2.0);
        if r <= cap {
            out.push(r);
        }
    }
    out
}
