use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A constructor or operation received malformed data (non-square,
    /// non-finite entries, empty dimensions).
    #[error("invalid input: {0}")]
    InvalidInput(&'static str),

    /// Matrix dimensions do not agree for the requested operation.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// The QR iteration did not deflate every eigenvalue within the sweep
    /// budget.
    #[error("eigensolver did not converge within {sweeps} QR sweeps")]
    NonConvergence { sweeps: usize },

    /// A pivot fell below the singularity threshold during LU elimination.
    /// `kappa_est` is a rough pivot-ratio estimate of the condition number.
    #[error("matrix is numerically singular (estimated condition {kappa_est:.3e})")]
    Singular { kappa_est: f64 },

    /// The right-eigenvector matrix is too ill-conditioned to biorthonormalize;
    /// the system sits at (or numerically indistinguishable from) an
    /// exceptional point.
    #[error("defective eigensystem: kappa(R) = {kappa:.3e} exceeds threshold {threshold:.3e}")]
    Defective { kappa: f64, threshold: f64 },

    /// A parameter left the domain of a Hamiltonian family.
    #[error("parameter {theta} outside family domain [{lo}, {hi}]")]
    DomainError { theta: f64, lo: f64, hi: f64 },

    /// State tracking found two overlaps too close to call; `state` is the
    /// row being assigned and the candidates are the two competing column
    /// indices with their overlap magnitudes.
    #[error("ambiguous state tracking for state {state}: candidates {first_index} (|ovl| {first_overlap:.6}) and {second_index} (|ovl| {second_overlap:.6})")]
    AmbiguousTracking {
        state: usize,
        first_index: usize,
        first_overlap: f64,
        second_index: usize,
        second_overlap: f64,
    },

    /// Model parameters sit exactly at an exceptional point where the
    /// requested closed form diverges.
    #[error("parameters at an exceptional point: {0}")]
    AtEp(&'static str),

    /// The real part of the combined Gaussian exponent is not positive
    /// definite, so the requested integral diverges.
    #[error("quadrature divergent: combined Gaussian exponent is not positive definite")]
    QuadratureDivergent,

    /// Node doubling did not stabilize the quadrature value.
    #[error("quadrature did not converge: |delta| = {delta:.3e} after {nodes} nodes per axis")]
    QuadratureNotConverged { delta: f64, nodes: usize },
}
