use crate::BigFloat;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("singular point: {0}")]
    SingularPoint(String),

    /// The quadrature could not reach its tolerance; `best` is the last estimate.
    #[error("tolerance not met: best estimate {best}, error estimate {error_estimate:e}")]
    ToleranceNotMet {
        best: Box<BigFloat>,
        error_estimate: f64,
    },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
