use thiserror::Error;

/// Errors raised across the engines. Each variant maps onto one CLI exit code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The descriptor (or an input derived from it) is malformed or inconsistent.
    #[error("invalid descriptor: {0}")]
    Descriptor(String),

    /// An argument to an operation lies outside its domain.
    #[error("invalid input: {0}")]
    Input(String),

    /// The endomorphism algebra is outside the families this tool handles.
    #[error("unsupported family: {0}")]
    Unsupported(String),

    /// A size cap was exceeded.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    /// Peeling a character produced a negative multiplicity or a non-dominant leading term.
    #[error("not a character: {0}")]
    NotACharacter(String),

    /// Two independent computations disagree.
    #[error("verification failure: {0}")]
    Verification(String),
}

impl Error {
    /// Exit code contract: 1 descriptor errors, 2 unsupported families and caps, 3 verification.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Descriptor(_) | Error::Input(_) => 1,
            Error::Unsupported(_) | Error::ResourceLimit(_) => 2,
            Error::NotACharacter(_) | Error::Verification(_) => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
