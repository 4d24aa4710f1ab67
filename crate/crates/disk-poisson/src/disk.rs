//! Points of the unit disk and angles of its boundary circle.

use crate::error::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::TAU;

/// A point of the unit disk. `interior` constructors enforce `|z| < 1`;
/// `closed` admits the boundary circle as well.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskPoint {
    z: Complex64,
}

impl DiskPoint {
    /// Strict interior point, `|z| < 1`.
    pub fn interior(z: Complex64) -> Result<Self> {
        let modulus = z.norm();
        if modulus < 1.0 {
            Ok(Self { z })
        } else {
            Err(Error::OutOfDomain {
                what: "interior point required",
                z,
                modulus,
            })
        }
    }

    pub fn interior_xy(x: f64, y: f64) -> Result<Self> {
        Self::interior(Complex64::new(x, y))
    }

    /// Point of the closed disk, `|z| <= 1` (tolerates rounding by 1e-12).
    pub fn closed(z: Complex64) -> Result<Self> {
        let modulus = z.norm();
        if modulus <= 1.0 + 1e-12 {
            Ok(Self { z })
        } else {
            Err(Error::OutOfDomain {
                what: "closed-disk point required",
                z,
                modulus,
            })
        }
    }

    pub fn origin() -> Self {
        Self {
            z: Complex64::new(0.0, 0.0),
        }
    }

    pub fn z(&self) -> Complex64 {
        self.z
    }

    pub fn modulus(&self) -> f64 {
        self.z.norm()
    }

    /// Distance to the boundary circle, `d(z) = 1 - |z|`.
    pub fn boundary_distance(&self) -> f64 {
        (1.0 - self.z.norm()).max(0.0)
    }
}

impl From<DiskPoint> for Complex64 {
    fn from(p: DiskPoint) -> Self {
        p.z
    }
}

/// An angle on the boundary circle, normalized to `[0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryAngle {
    theta: f64,
}

impl BoundaryAngle {
    pub fn new(theta: f64) -> Self {
        let mut t = theta.rem_euclid(TAU);
        // rem_euclid can round up to TAU itself when theta is a tiny negative.
        if t >= TAU {
            t = 0.0;
        }
        Self { theta: t }
    }

    pub fn radians(&self) -> f64 {
        self.theta
    }

    /// The boundary point `e^{iθ}`.
    pub fn unit(&self) -> Complex64 {
        Complex64::from_polar(1.0, self.theta)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interior_rejects_boundary() {
        assert!(DiskPoint::interior_xy(1.0, 0.0).is_err());
        assert!(DiskPoint::interior_xy(0.999999, 0.0).is_ok());
        assert!(DiskPoint::closed(Complex64::new(1.0, 0.0)).is_ok());
        assert!(DiskPoint::closed(Complex64::new(1.5, 0.0)).is_err());
    }

    #[test]
    fn boundary_distance_matches_definition() {
        let p = DiskPoint::interior_xy(0.3, 0.4).unwrap();
        assert!((p.boundary_distance() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn angle_normalizes_mod_tau() {
        let a = BoundaryAngle::new(-1.0);
        assert!((a.radians() - (TAU - 1.0)).abs() < 1e-12);
        let b = BoundaryAngle::new(3.0 * TAU + 0.25);
        assert!((b.radians() - 0.25).abs() < 1e-12);
        assert!((BoundaryAngle::new(0.0).unit() - Complex64::new(1.0, 0.0)).norm() < 1e-15);
    }
}
