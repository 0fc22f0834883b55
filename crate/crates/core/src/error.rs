//! Crate-wide error type.

use num_complex::Complex64;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("basis index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("quadrature grid under-resolved: {0}")]
    UnderResolved(String),

    #[error("QR iteration did not converge: {remaining} eigenvalues undeflated after {iterations} iterations")]
    EigNonConvergence {
        /// Eigenvalues deflated before the cap was hit.
        converged: Vec<Complex64>,
        remaining: usize,
        iterations: usize,
    },

    #[error("matrix is not Hermitian: max |A - A*| = {deviation:.3e} exceeds {tolerance:.3e}")]
    NotHermitian { deviation: f64, tolerance: f64 },

    #[error("matrix family is singular at contour sample z = {0}")]
    SingularSample(Complex64),

    #[error("contour refinement cap exceeded: {samples} samples, max phase step {max_step:.3e}")]
    RefinementCap { samples: usize, max_step: f64 },

    #[error("shift z = {z} is within guard distance of the truncated Laplacian spectrum (d = {distance:.3e})")]
    NearSpectrum { z: Complex64, distance: f64 },

    #[error("chi must be nonnegative on the grid: min sample {0:.3e}")]
    NegativeChi(f64),

    #[error("mismatched truncations: {0}")]
    MismatchedTruncations(String),

    #[error("empty input: {0}")]
    EmptyInput(String),

    #[error("saturation run failed: {reason}; diagnostics: {diagnostics}")]
    SaturationFailed { reason: String, diagnostics: String },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
