use thiserror::Error;

/// Errors raised by state constructors, linear algebra, and machine parameter
/// validation.
#[derive(Debug, Error)]
pub enum Error {
    #[error("non-finite value: {0}")]
    NonFinite(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not Hermitian: max |m[i][j] - conj(m[j][i])| = {deviation:.3e} exceeds {tolerance:.3e}")]
    NotHermitian { deviation: f64, tolerance: f64 },

    #[error("matrix is not positive semidefinite: eigenvalue {eigenvalue:.6e} below -{tolerance:.1e}")]
    NotPositiveSemidefinite { eigenvalue: f64, tolerance: f64 },

    #[error("state is not normalized: ||amplitudes|^2 - 1| = {deviation:.3e} exceeds {tolerance:.1e}")]
    NotNormalized { deviation: f64, tolerance: f64 },

    #[error("trace is not 1: |trace - 1| = {deviation:.3e} exceeds {tolerance:.1e}")]
    NonUnitTrace { deviation: f64, tolerance: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("qubit index {index} out of range for a {num_qubits}-qubit state")]
    QubitOutOfRange { index: usize, num_qubits: usize },

    #[error("eigensolver supports matrices up to {limit}x{limit}, got {size}x{size}")]
    MatrixTooLarge { size: usize, limit: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
