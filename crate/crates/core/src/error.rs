use thiserror::Error;

/// Error type shared by all modules.
#[derive(Error, Debug)]
pub enum Error {
    #[error("division by zero in Z[i]")]
    DivisionByZero,

    #[error("overflow guard: {0}")]
    Overflow(String),

    #[error("even element has no primary associate: {0}")]
    NotNormalizable(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("insufficient table coverage: need norms up to {required}, table holds {available}")]
    Truncation { required: u64, available: u64 },

    #[error("numeric failure: {0}")]
    Numeric(String),

    #[error("conditioning: {what} too close to a pole/zero (distance {distance:.3e})")]
    Conditioning { what: String, distance: f64 },

    #[error("quadrature failed to converge: {0}")]
    Quadrature(String),

    #[error("range error: {0}")]
    Range(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("cache error: {0}")]
    Cache(String),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}
