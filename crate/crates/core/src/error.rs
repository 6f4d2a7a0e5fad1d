//! Error types shared by all modules.

use thiserror::Error;

/// Errors produced by the numerical engine.
#[derive(Debug, Error)]
pub enum CoreError {
    /// A potential evaluated to a non-finite value on the grid.
    #[error("invalid potential: V(q_{index}) = V({q}) = {value} is not finite")]
    InvalidPotential { index: usize, q: f64, value: f64 },

    /// Eigendecomposition or another dense factorization failed.
    #[error("numerical failure: {context} (dim {dim}, max |entry| {max_abs:.3e})")]
    NumericalFailure {
        context: String,
        dim: usize,
        max_abs: f64,
    },

    /// Operator/state dimensions do not match.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// An insertion list repeats a slice index.
    #[error("duplicate insertion at slice {slice}")]
    DuplicateSlice { slice: usize },

    /// A dense-assembly operation would exceed the size guard.
    #[error("size guard exceeded: extended dimension {dim} > {max}")]
    SizeGuard { dim: usize, max: usize },

    /// Parameters too close to a pole (resonance) of a closed form.
    #[error("singular configuration: {0}")]
    SingularConfiguration(String),

    /// An adaptive evaluation ran out of budget before reaching tolerance.
    #[error("non-convergence: {0}")]
    NonConvergence(String),

    /// A probe point lies outside the analyticity region.
    #[error("sample {0} outside region Re(tau^3) > 0")]
    OutOfRegion(num_complex::Complex64),

    /// A time or angle argument is out of range.
    #[error("argument out of range: {0}")]
    OutOfRange(String),
}

/// Convenience alias.
pub type Result<T> = std::result::Result<T, CoreError>;
