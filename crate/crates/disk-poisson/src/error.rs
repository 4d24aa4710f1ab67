use num_complex::Complex64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Kernel arguments within `eps` of the singular diagonal.
    #[error("kernel arguments collide: distance {dist:.3e} below epsilon {eps:.3e}")]
    KernelCollision { dist: f64, eps: f64 },

    /// A point left the domain the operation is defined on.
    #[error("{what}: |{z}| = {modulus}")]
    OutOfDomain {
        what: &'static str,
        z: Complex64,
        modulus: f64,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Grid or node counts that the quadrature rules cannot accept.
    #[error("invalid resolution: {0}")]
    InvalidResolution(String),

    /// Successive refinements kept disagreeing above the requested tolerance.
    #[error("quadrature did not converge: {what} (last disagreement {disagreement:.3e})")]
    QuadratureDivergence { what: &'static str, disagreement: f64 },

    /// `λ(D_f)` collapsed at a grid node, so no quasiconformal constant exists.
    #[error("degenerate differential at z = {z}: lambda = {lambda:.3e}")]
    DegenerateJet { z: Complex64, lambda: f64 },

    /// Negative Jacobian where a sense-preserving map was required.
    #[error("sense-reversing map at z = {z}: jacobian = {jacobian:.3e}")]
    SenseReversal { z: Complex64, jacobian: f64 },

    #[error("unknown catalog label: {0}")]
    UnknownLabel(String),
}
