use thiserror::Error;

/// Failure modes shared by every module.
///
/// The CLI maps these onto exit codes: `Input` is 2, `Refused` is 3, and
/// the two verification variants are 1.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum XcError {
    #[error("input error: {0}")]
    Input(String),

    #[error("refused: {what} needs {needed}, budget is {budget}")]
    Refused {
        what: String,
        needed: String,
        budget: String,
    },

    /// A supposedly valid inequality has negative slack at some point.
    #[error("validity violation: inequality {row} has slack {slack} at point {col}")]
    Validity {
        row: String,
        col: String,
        slack: String,
    },

    #[error("verification failed: {0}")]
    Verification(String),
}

impl XcError {
    pub fn input(msg: impl Into<String>) -> Self {
        XcError::Input(msg.into())
    }

    pub fn verification(msg: impl Into<String>) -> Self {
        XcError::Verification(msg.into())
    }

    pub fn refused(what: impl Into<String>, needed: impl ToString, budget: impl ToString) -> Self {
        XcError::Refused {
            what: what.into(),
            needed: needed.to_string(),
            budget: budget.to_string(),
        }
    }

    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            XcError::Input(_) => 2,
            XcError::Refused { .. } => 3,
            XcError::Validity { .. } | XcError::Verification(_) => 1,
        }
    }
}

pub type Result<T, E = XcError> = std::result::Result<T, E>;
