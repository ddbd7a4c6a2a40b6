use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed text input or a parameter outside an operation's domain.
    #[error("{0}")]
    InvalidInput(String),

    #[error("C({n},{k}) = {count} k-subsets exceeds the vertex budget of {budget}")]
    Capacity {
        n: usize,
        k: usize,
        count: String,
        budget: usize,
    },

    /// A result failed one of its own certificate checks.
    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    /// Stable machine-readable code, printed by the CLI ahead of the message.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidInput(_) => "bad_input",
            Error::Capacity { .. } => "capacity_exceeded",
            Error::Invariant(_) => "invariant_failure",
            Error::Io(_) => "io_error",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidInput(_) | Error::Io(_) => 2,
            Error::Capacity { .. } => 3,
            Error::Invariant(_) => 4,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
