use thiserror::Error;

/// Errors raised by the library. Status-valued outcomes (gate results,
/// oracle disagreements) are reported through return values instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("invalid word labelled oriented graph: {0}")]
    InvalidWlog(String),

    #[error("word syntax error at byte {position}: {message}")]
    WordSyntax { position: usize, message: String },

    #[error("spanning tree enumeration exceeded the budget of {budget} trees")]
    BudgetExceeded { budget: u64 },

    #[error("flag complex is not certified simply connected (gate status: {0})")]
    NotCertifiedSimplyConnected(String),

    #[error("word {0} is not in the commutator subgroup")]
    NotInCommutatorSubgroup(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}
