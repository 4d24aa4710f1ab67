//! Green and Poisson kernels of the unit disk together with the closed-form
//! Wirtinger derivatives of their rescaled versions.
//!
//! The Green kernel is
//!
//! ```text
//!     G(z, w) = log | (1 - z w̄) / (z - w) |,
//! ```
//!
//! positive and symmetric on the disk, with a logarithmic singularity on the
//! diagonal. The Poisson kernel is
//!
//! ```text
//!     P(z, e^{iθ}) = (1 - |z|²) / |1 - z e^{-iθ}|².
//! ```
//!
//! The `scaled_*` functions differentiate the kernels composed with
//! `w ↦ (w - z)/r`, which is exactly what the derivative of a Poisson-type
//! representation on a sub-disk `D(z, r)` needs. All derivatives here are
//! closed forms; finite differences appear only in tests as oracles.

use crate::disk::{BoundaryAngle, DiskPoint};
use crate::error::{Error, Result};
use num_complex::Complex64;

/// Inputs closer than this to a singular configuration are rejected instead
/// of returning huge values of the wrong sign.
pub const COLLISION_EPSILON: f64 = 1e-12;

/// `G(z, w)` on interior points. Errors when `|z - w|` is below the collision
/// epsilon.
pub fn green_kernel(z: DiskPoint, w: DiskPoint) -> Result<f64> {
    let dist = (z.z() - w.z()).norm();
    if dist <= COLLISION_EPSILON {
        return Err(Error::KernelCollision {
            dist,
            eps: COLLISION_EPSILON,
        });
    }
    Ok(green_raw(z.z(), w.z()))
}

/// `P(z, e^{iθ})` for interior `z`.
pub fn poisson_kernel(z: DiskPoint, theta: BoundaryAngle) -> f64 {
    poisson_raw(z.z(), theta.unit())
}

/// ∂/∂w of `P((w - z)/r, e^{iθ})`.
///
/// In the scaled variable `u = (w-z)/r` the kernel is
/// `(r² - |w-z|²) / |w - z - r e^{iθ}|²`, and the derivative is
///
/// ```text
///     [ -(w̄-z̄) |w-z-re^{iθ}|² - (r²-|w-z|²)(w̄-z̄-re^{-iθ}) ] / |w-z-re^{iθ}|⁴ .
/// ```
///
/// At `w = z` this reduces to `e^{-iθ}/r`, and on `|w-z| < r/2` its modulus
/// is at most `10/r`.
pub fn scaled_poisson_dw(w: Complex64, z: Complex64, r: f64, theta: BoundaryAngle) -> Result<Complex64> {
    check_scale(w, z, r)?;
    let d = w - z;
    let rim = d - Complex64::from_polar(r, theta.radians());
    let rim2 = rim.norm_sqr();
    let num = -d.conj() * rim2 - (r * r - d.norm_sqr()) * rim.conj();
    Ok(num / (rim2 * rim2))
}

/// ∂/∂w̄ of `P((w - z)/r, e^{iθ})`; the complex conjugate of
/// [`scaled_poisson_dw`] because the kernel is real-valued.
pub fn scaled_poisson_dwbar(
    w: Complex64,
    z: Complex64,
    r: f64,
    theta: BoundaryAngle,
) -> Result<Complex64> {
    Ok(scaled_poisson_dw(w, z, r, theta)?.conj())
}

/// ∂/∂w of `G((w - z)/r, ζ)`:
///
/// ```text
///     (1/2) · r (|ζ|² - 1) / ( [r - (w-z) ζ̄] · [w - z - r ζ] ).
/// ```
///
/// Errors when `(w-z)/r` collides with `ζ` (relative epsilon) or `|w-z| ≥ r`.
pub fn scaled_green_dw(w: Complex64, z: Complex64, r: f64, zeta: Complex64) -> Result<Complex64> {
    check_scale(w, z, r)?;
    let d = w - z;
    let dist = (d - r * zeta).norm();
    if dist <= COLLISION_EPSILON * r {
        return Err(Error::KernelCollision {
            dist,
            eps: COLLISION_EPSILON * r,
        });
    }
    let num = 0.5 * r * (zeta.norm_sqr() - 1.0);
    Ok(num / ((r - d * zeta.conj()) * (d - r * zeta)))
}

/// ∂/∂w̄ of `G((w - z)/r, ζ)`; conjugate-symmetric partner of
/// [`scaled_green_dw`].
pub fn scaled_green_dwbar(w: Complex64, z: Complex64, r: f64, zeta: Complex64) -> Result<Complex64> {
    Ok(scaled_green_dw(w, z, r, zeta)?.conj())
}

fn check_scale(w: Complex64, z: Complex64, r: f64) -> Result<()> {
    if !(r > 0.0 && r <= 1.0) {
        return Err(Error::InvalidParameter(format!(
            "scale radius must lie in (0, 1], got {r}"
        )));
    }
    let d = (w - z).norm();
    if d >= r {
        return Err(Error::OutOfDomain {
            what: "scaled kernel needs |w - z| < r",
            z: w - z,
            modulus: d / r,
        });
    }
    Ok(())
}

// ---- raw forms on Complex64, shared with the solver hot loops ----

/// `G(z, w)` as ½ log of a ratio of squared moduli; assumes `z ≠ w`.
#[inline]
pub fn green_raw(z: Complex64, w: Complex64) -> f64 {
    let num = (1.0 - z * w.conj()).norm_sqr();
    let den = (z - w).norm_sqr();
    0.5 * (num / den).ln()
}

/// ∂G/∂z (z, w) = ½ (|w|² - 1) / ( (1 - z w̄)(z - w) ).
#[inline]
pub fn green_dz_raw(z: Complex64, w: Complex64) -> Complex64 {
    0.5 * (w.norm_sqr() - 1.0) / ((1.0 - z * w.conj()) * (z - w))
}

/// `P(z, u)` with `u` on the unit circle.
#[inline]
pub fn poisson_raw(z: Complex64, u: Complex64) -> f64 {
    (1.0 - z.norm_sqr()) / (1.0 - z * u.conj()).norm_sqr()
}

/// ∂P/∂z (z, u) = ū / (1 - z ū)²  — the `r = 1`, `z = 0` case of
/// [`scaled_poisson_dw`] in simplified form.
#[inline]
pub fn poisson_dz_raw(z: Complex64, u: Complex64) -> Complex64 {
    let t = 1.0 - z * u.conj();
    u.conj() / (t * t)
}

/// ∂P/∂z̄ (z, u) = u / (1 - z̄ u)².
#[inline]
pub fn poisson_dzbar_raw(z: Complex64, u: Complex64) -> Complex64 {
    let t = 1.0 - z.conj() * u;
    u / (t * t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn disk(x: f64, y: f64) -> DiskPoint {
        DiskPoint::interior_xy(x, y).unwrap()
    }

    /// Central-difference Wirtinger derivatives of a real-valued function —
    /// the independent oracle for every closed form in this module.
    fn wirtinger_fd(
        f: impl Fn(Complex64) -> f64,
        at: Complex64,
        h: f64,
    ) -> (Complex64, Complex64) {
        let fx = (f(at + c64(h, 0.0)) - f(at - c64(h, 0.0))) / (2.0 * h);
        let fy = (f(at + c64(0.0, h)) - f(at - c64(0.0, h))) / (2.0 * h);
        (
            0.5 * c64(fx, -fy), // ∂/∂w
            0.5 * c64(fx, fy),  // ∂/∂w̄
        )
    }

    #[test]
    fn green_at_center_is_minus_log() {
        let g = green_kernel(disk(0.0, 0.0), disk(0.5, 0.0)).unwrap();
        assert_relative_eq!(g, 2f64.ln(), max_relative = 1e-14);
    }

    #[test]
    fn green_symmetric_and_positive() {
        let pts = [
            (disk(0.3, 0.1), disk(-0.2, 0.4)),
            (disk(0.0, 0.0), disk(0.9, 0.0)),
            (disk(-0.7, 0.2), disk(0.1, -0.6)),
            (disk(0.5, 0.5), disk(0.49, 0.52)),
        ];
        for (z, w) in pts {
            let a = green_kernel(z, w).unwrap();
            let b = green_kernel(w, z).unwrap();
            assert_abs_diff_eq!(a, b, epsilon = 1e-12);
            assert!(a > 0.0, "G({:?},{:?}) = {} not positive", z, w, a);
        }
    }

    #[test]
    fn green_near_diagonal_grows_like_log() {
        // frozen oracle: log|(1 - 0.5(0.5+1e-6)) / 1e-6| = 13.5278278188456...
        let g = green_kernel(disk(0.5, 0.0), disk(0.5 + 1e-6, 0.0)).unwrap();
        assert_relative_eq!(g, 13.527_827_818_845_604, max_relative = 1e-9);
        assert!(g >= 1e5f64.ln());
    }

    #[test]
    fn green_collision_rejected() {
        let err = green_kernel(disk(0.5, 0.0), disk(0.5, 0.0)).unwrap_err();
        assert!(matches!(err, Error::KernelCollision { .. }));
    }

    #[test]
    fn poisson_value_and_positivity() {
        let p = poisson_kernel(disk(0.5, 0.0), BoundaryAngle::new(0.0));
        assert_relative_eq!(p, 3.0, max_relative = 1e-14);
        for &(x, y) in &[(0.0, 0.0), (0.8, 0.1), (-0.3, -0.6)] {
            for k in 0..16 {
                let t = BoundaryAngle::new(0.4 * k as f64);
                assert!(poisson_kernel(disk(x, y), t) > 0.0);
            }
        }
    }

    #[test]
    fn poisson_unit_mass() {
        use crate::quad::periodic_trapezoid_real;
        use std::f64::consts::TAU;
        let z = disk(0.3, 0.4);
        let mean =
            periodic_trapezoid_real(512, |t| poisson_kernel(z, BoundaryAngle::new(t))) / TAU;
        assert_relative_eq!(mean, 1.0, max_relative = 1e-12);
    }

    #[test]
    fn scaled_poisson_dw_at_center() {
        // exact value e^{-iθ}/r at w = z
        for &(r, th) in &[(1.0, 0.0), (0.25, 1.3), (0.6, 4.0)] {
            let v = scaled_poisson_dw(c64(0.1, 0.2), c64(0.1, 0.2), r, BoundaryAngle::new(th))
                .unwrap();
            let expected = Complex64::from_polar(1.0 / r, -th);
            assert_relative_eq!((v - expected).norm(), 0.0, epsilon = 1e-12 / r);
        }
    }

    #[test]
    fn scaled_poisson_matches_finite_differences() {
        // oracle step 1e-7·r per the central-difference error balance
        let configs = [
            (c64(0.32, -0.11), c64(0.3, -0.1), 0.5, 2.1),
            (c64(0.05, 0.02), c64(0.0, 0.0), 0.3, 0.7),
            (c64(-0.2, 0.4), c64(-0.25, 0.33), 0.8, 5.9),
        ];
        for (w, z, r, th) in configs {
            let theta = BoundaryAngle::new(th);
            let scaled = move |p: Complex64| poisson_raw((p - z) / r, theta.unit());
            let (fd_dw, fd_dwbar) = wirtinger_fd(scaled, w, 1e-7 * r);
            let dw = scaled_poisson_dw(w, z, r, theta).unwrap();
            let dwbar = scaled_poisson_dwbar(w, z, r, theta).unwrap();
            assert_relative_eq!((dw - fd_dw).norm(), 0.0, epsilon = 1e-6 * dw.norm());
            assert_relative_eq!((dwbar - fd_dwbar).norm(), 0.0, epsilon = 1e-6 * dwbar.norm());
        }
    }

    #[test]
    fn scaled_poisson_ten_over_r_bound() {
        // |∂_w P((w-z)/r, e^{iθ})| ≤ 10/r on |w - z| < r/2
        for &r in &[0.2, 0.5, 1.0] {
            let z = c64(0.1, -0.05);
            for i in 0..10 {
                for j in 0..16 {
                    let rho = 0.499 * r * (i as f64 + 0.5) / 10.0;
                    let phi = std::f64::consts::TAU * j as f64 / 16.0;
                    let w = z + Complex64::from_polar(rho, phi);
                    for k in 0..8 {
                        let th = BoundaryAngle::new(0.7 * k as f64);
                        let v = scaled_poisson_dw(w, z, r, th).unwrap();
                        assert!(
                            v.norm() <= 10.0 / r + 1e-9,
                            "bound violated: |dP| = {} > 10/r = {}",
                            v.norm(),
                            10.0 / r
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn scaled_poisson_domain_check() {
        let err = scaled_poisson_dw(c64(0.6, 0.0), c64(0.0, 0.0), 0.5, BoundaryAngle::new(0.0));
        assert!(matches!(err, Err(Error::OutOfDomain { .. })));
    }

    #[test]
    fn scaled_green_dw_reference_value() {
        // w = z, r = 1, ζ = 1/2: ½·(¼-1)/((1)(−½)) = ¾
        let v = scaled_green_dw(c64(0.2, 0.1), c64(0.2, 0.1), 1.0, c64(0.5, 0.0)).unwrap();
        assert_relative_eq!(v.re, 0.75, max_relative = 1e-13);
        assert_abs_diff_eq!(v.im, 0.0, epsilon = 1e-13);
    }

    #[test]
    fn scaled_green_matches_finite_differences() {
        let configs = [
            (c64(0.3, 0.0), c64(0.28, 0.02), 0.6, c64(0.4, 0.3)),
            (c64(-0.1, 0.2), c64(0.0, 0.15), 0.9, c64(-0.5, 0.1)),
            (c64(0.02, -0.07), c64(0.0, 0.0), 0.2, c64(0.2, -0.6)),
        ];
        for (w, z, r, zeta) in configs {
            let scaled = move |p: Complex64| green_raw((p - z) / r, zeta);
            let (fd_dw, fd_dwbar) = wirtinger_fd(scaled, w, 1e-7 * r);
            let dw = scaled_green_dw(w, z, r, zeta).unwrap();
            let dwbar = scaled_green_dwbar(w, z, r, zeta).unwrap();
            assert_relative_eq!((dw - fd_dw).norm(), 0.0, epsilon = 1e-6 * dw.norm().max(1.0));
            assert_relative_eq!(
                (dwbar - fd_dwbar).norm(),
                0.0,
                epsilon = 1e-6 * dwbar.norm().max(1.0)
            );
        }
    }

    #[test]
    fn scaled_green_conjugate_pairing() {
        let (w, z, r, zeta) = (c64(0.1, 0.3), c64(0.05, 0.25), 0.7, c64(0.3, -0.4));
        let dw = scaled_green_dw(w, z, r, zeta).unwrap();
        let dwbar = scaled_green_dwbar(w, z, r, zeta).unwrap();
        assert_abs_diff_eq!((dw.conj() - dwbar).norm(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn scaled_green_collision_rejected() {
        // (w - z)/r exactly ζ
        let z = c64(0.0, 0.0);
        let zeta = c64(0.3, 0.2);
        let w = 0.5 * zeta;
        let err = scaled_green_dw(w, z, 0.5, zeta);
        assert!(matches!(err, Err(Error::KernelCollision { .. })));
    }

    #[test]
    fn unscaled_poisson_derivative_agrees_with_scaled() {
        // ∂P/∂z(z, e^{iθ}) is the z-center, r=1 specialization
        let z = c64(0.3, -0.2);
        let th = BoundaryAngle::new(1.1);
        let simplified = poisson_dz_raw(z, th.unit());
        let general = scaled_poisson_dw(z, c64(0.0, 0.0), 1.0, th).unwrap();
        assert_relative_eq!((simplified - general).norm(), 0.0, epsilon = 1e-12);
    }
}
