use thiserror::Error;

/// Structural errors raised while validating or combining inputs.
///
/// Arithmetic on values that already passed validation panics on misuse
/// (rank mismatches, zero divisors); those are programming errors, not
/// recoverable conditions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square")]
    NotSquare,
    #[error("not a generalized Cartan matrix: {0}")]
    NotCartan(String),
    #[error("matrix is not symmetrizable")]
    NotSymmetrizable,
    #[error("matrix is not skew-symmetrizable: {0}")]
    NotSkewSymmetrizable(String),
    #[error("invalid orientation: {0}")]
    InvalidOrientation(String),
    #[error("vertex {0} is not a sink")]
    NotSink(usize),
    #[error("Coxeter graph is not bipartite")]
    NotBipartite,
    #[error("Cartan matrix is not of finite type")]
    NotFiniteType,
    #[error("invalid input: {0}")]
    Input(String),
}
