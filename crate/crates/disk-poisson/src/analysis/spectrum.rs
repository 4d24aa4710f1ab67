//! Fourier coefficients of boundary data and the harmonic extension
//! they define.
//!
//! A square-integrable boundary function expands as
//! `psi(theta) = sum_n a_n e^{i n theta} + sum_{n>=1} conj(b_n) e^{-i n theta}`,
//! and its harmonic extension into the disk is
//! `h(z) = sum_n a_n z^n + conj(sum_{n>=1} b_n z^n)`.
//! With `N` equispaced samples the forward DFT recovers `a_n` from bin `n`
//! and `conj(b_n)` from bin `N - n`; the top-quarter bins only carry energy
//! when the data is under-resolved, so their energy fraction doubles as an
//! aliasing diagnostic.

use rustfft::FftPlanner;

use crate::boundary::BoundaryData;
use crate::c64;
use crate::error::{Error, Result};
use crate::Complex64;

/// Energy fraction in the top-quarter frequency bins above which the
/// sampled data is considered under-resolved.
pub const ALIASING_ENERGY_FRACTION: f64 = 1e-8;

/// Harmonic expansion coefficients of sampled boundary data.
#[derive(Debug, Clone)]
pub struct CoefficientSpectrum {
    /// `a_n` for `n = 0 .. N/2 - 1`: coefficients of `z^n`.
    analytic: Vec<Complex64>,
    /// `b_n` for `n = 1 .. N/2 - 1`; index 0 is unused and kept zero so the
    /// vector indexes directly by `n`.
    antianalytic: Vec<Complex64>,
    /// Mean-square energy of the samples, `(1/N) sum |psi_k|^2`.
    sample_energy: f64,
    /// Total spectral energy, `sum_m |X_m / N|^2`.
    spectral_energy: f64,
    /// Fraction of spectral energy in bins with `|frequency| >= N/4`.
    tail_fraction: f64,
    sample_count: usize,
}

impl CoefficientSpectrum {
    /// Highest retained mode index, `N/2 - 1`.
    pub fn n_max(&self) -> usize {
        self.analytic.len() - 1
    }

    /// Number of boundary samples the spectrum was computed from.
    pub fn sample_count(&self) -> usize {
        self.sample_count
    }

    /// Coefficient of `z^n`; zero beyond the retained range.
    pub fn a(&self, n: usize) -> Complex64 {
        self.analytic.get(n).copied().unwrap_or_else(|| c64(0.0, 0.0))
    }

    /// Coefficient `b_n` (the extension carries `conj(b_n) zbar^n`);
    /// zero for `n = 0` and beyond the retained range.
    pub fn b(&self, n: usize) -> Complex64 {
        if n == 0 {
            return c64(0.0, 0.0);
        }
        self.antianalytic.get(n).copied().unwrap_or_else(|| c64(0.0, 0.0))
    }

    /// `|a_n| + |b_n|`, the quantity the coefficient inequalities bound.
    pub fn pair_norm(&self, n: usize) -> f64 {
        self.a(n).norm() + self.b(n).norm()
    }

    /// Absolute gap between sample energy and spectral energy; should be at
    /// rounding level for any input.
    pub fn parseval_gap(&self) -> f64 {
        (self.sample_energy - self.spectral_energy).abs()
    }

    /// Fraction of spectral energy carried by the top-quarter bins.
    pub fn tail_fraction(&self) -> f64 {
        self.tail_fraction
    }

    /// True when enough energy sits in the top-quarter bins that the
    /// coefficients are suspect.
    pub fn aliasing_suspect(&self) -> bool {
        self.tail_fraction > ALIASING_ENERGY_FRACTION
    }

    /// Harmonic extension `h(z) = sum a_n z^n + conj(sum b_n z^n)` evaluated
    /// by Horner's scheme. Valid on the closed disk.
    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        let analytic = horner(&self.analytic, z);
        // conj(b_n) zbar^n = conj(b_n z^n), so the anti-analytic part is the
        // conjugate of a plain polynomial in z.
        let antianalytic = horner(&self.antianalytic, z);
        analytic + antianalytic.conj()
    }

    /// Resample the truncated expansion on the unit circle.
    pub fn reconstruct(&self, samples: usize) -> Result<BoundaryData> {
        BoundaryData::from_fn(samples, |theta| self.evaluate(Complex64::from_polar(1.0, theta)))
    }
}

fn horner(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    let mut acc = c64(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        acc = acc * z + c;
    }
    acc
}

/// Compute the harmonic expansion coefficients of sampled boundary data.
///
/// Retains `a_0 .. a_{N/2-1}` and `b_1 .. b_{N/2-1}`; the Nyquist bin is
/// never assigned to either family and is counted toward the aliasing tail.
pub fn harmonic_coefficients(boundary: &BoundaryData) -> Result<CoefficientSpectrum> {
    let n = boundary.len();
    if n < 16 {
        return Err(Error::InvalidResolution(format!(
            "need at least 16 boundary samples for a spectrum, got {n}"
        )));
    }

    let mut buffer: Vec<Complex64> = boundary.samples().to_vec();
    FftPlanner::new().plan_fft_forward(n).process(&mut buffer);

    let scale = 1.0 / n as f64;
    let bins: Vec<Complex64> = buffer.into_iter().map(|x| x * scale).collect();

    let sample_energy =
        boundary.samples().iter().map(|s| s.norm_sqr()).sum::<f64>() * scale;
    let spectral_energy: f64 = bins.iter().map(|x| x.norm_sqr()).sum();

    // Bin m carries frequency m for m <= N/2 and m - N above; the top
    // quarter is |frequency| >= N/4, i.e. bins N/4 ..= 3N/4.
    let tail_energy: f64 = bins
        .iter()
        .enumerate()
        .filter(|(m, _)| *m >= n / 4 && *m <= 3 * n / 4)
        .map(|(_, x)| x.norm_sqr())
        .sum();
    let tail_fraction = if spectral_energy > 0.0 { tail_energy / spectral_energy } else { 0.0 };

    let half = n / 2;
    let analytic: Vec<Complex64> = bins[..half].to_vec();
    let mut antianalytic = vec![c64(0.0, 0.0); half];
    for m in 1..half {
        antianalytic[m] = bins[n - m].conj();
    }

    Ok(CoefficientSpectrum {
        analytic,
        antianalytic,
        sample_energy,
        spectral_energy,
        tail_fraction,
        sample_count: n,
    })
}
