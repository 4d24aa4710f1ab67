//! Solutions of `Δf = g` on the unit disk and the geometry of the mappings
//! they define.
//!
//! A solution is represented through its boundary values and source term,
//!
//! ```text
//!     f = P[ψ] - G[g],
//! ```
//!
//! where `P` is the Poisson integral of the boundary data `ψ` and `G` is the
//! Green potential of the source `g`. The crate provides
//!
//! * closed-form kernels and their Wirtinger derivatives ([`kernels`]),
//! * quadrature-backed evaluation of `f` and its first derivatives
//!   ([`solver`]),
//! * geometric functionals of disk mappings: circle perimeter, radial
//!   length, image area, quasiconformal constant ([`geometry`]),
//! * function-space measurements and inequality verification: Fourier
//!   coefficient bounds, Bloch/Lipschitz/mean-oscillation norms, majorant
//!   regularity, radial profiles ([`analysis`], [`majorant`]),
//! * a catalog of closed-form reference mappings used as ground truth
//!   ([`catalog`]).
//!
//! All estimators are deterministic: fixed grids, fixed quadrature rules, and
//! seeded sampling, so repeated runs produce identical reports.

pub mod analysis;
pub mod boundary;
pub mod catalog;
pub mod disk;
pub mod error;
pub mod geometry;
pub mod jet;
pub mod kernels;
pub mod majorant;
pub mod quad;
pub mod sampling;
pub mod solver;

pub use analysis::{run_suite, Suite, VerificationReport, VerifyOptions};
pub use boundary::{BoundaryData, SourceField};
pub use catalog::CatalogMap;
pub use disk::{BoundaryAngle, DiskPoint};
pub use error::{Error, Result};
pub use jet::{JetNorms, WirtingerJet};
pub use solver::{DiskMap, PoissonSolution, QuadratureConfig};

use num_complex::Complex64;

/// Shorthand used throughout: `z = x + iy`.
pub(crate) fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}
