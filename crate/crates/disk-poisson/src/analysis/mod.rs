//! Function-space analysis: boundary spectra, norms and oscillation
//! functionals, inequality verifiers, and their report types.

pub mod report;
pub mod spaces;
pub mod spectrum;
pub mod verify;

pub use report::{ResolutionRecord, VerificationReport};
pub use spectrum::{harmonic_coefficients, CoefficientSpectrum};
pub use verify::{run_suite, unit_source_reference, Suite, VerifyOptions};
