use alloc::string::String;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A dimension below 2, or a vector length that is not `N² − 1`.
    #[error("invalid dimension: {0}")]
    InvalidDimension(String),
    /// Two operands disagree on `N` or on vector length.
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    /// Matrix entries violate `a[j][i] = conj(a[i][j])`.
    #[error("matrix is not Hermitian (max deviation {0:e})")]
    NotHermitian(f64),
    /// Input expected to have unit trace does not.
    #[error("trace is {0}, expected 1")]
    TraceNotOne(f64),
    /// A basis failed its orthonormality or tracelessness check.
    #[error("basis consistency check failed: {0}")]
    Consistency(String),
    /// An iterative routine did not converge or produced an out-of-range residue.
    #[error("numerical failure: {0}")]
    Numerical(String),
    /// A parameter lies outside the admissible interval of a formula.
    #[error("value {value} outside admissible domain [{lo}, {hi}]")]
    Domain { value: f64, lo: f64, hi: f64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
