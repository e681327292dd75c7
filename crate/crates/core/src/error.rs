use thiserror::Error;

/// Errors raised across the crate.
///
/// The variants fall into a handful of families (see [`ErrorKind`]) which the
/// command-line front end maps onto exit codes.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("group closure exceeds the bound of {bound} elements")]
    ClosureExceedsBound { bound: usize },

    #[error("{0} is not an element of the group")]
    NotInGroup(String),

    #[error("subgroup does not belong to this group")]
    ForeignSubgroup,

    #[error("tau = {0} is not an involution")]
    NotInvolution(String),

    #[error("rho and tau generate a subgroup of order {generated}, not the whole group of order {order}")]
    NotGenerating { generated: usize, order: usize },

    #[error("the stabilizer has a nontrivial core of order {core_order}")]
    CoreNotTrivial { core_order: usize },

    #[error("unknown vertex {0}")]
    UnknownVertex(String),

    #[error("isomorphism search exceeded its budget of {budget} nodes")]
    BudgetExceeded { budget: u64 },

    #[error("invalid transversal: {0}")]
    InvalidTransversal(String),

    #[error("invalid rotation: {0}")]
    InvalidRotation(String),

    #[error("graph has no darts")]
    EmptyGraph,

    #[error("graph is not connected")]
    NotConnected,

    #[error("structural criterion mismatch for {predicate}: group criterion says {group}, darts say {darts}")]
    CriterionMismatch {
        predicate: &'static str,
        group: bool,
        darts: bool,
    },

    #[error("verification failed: {0}")]
    VerificationFailed(String),
}

/// Coarse classification of [`Error`] values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed input text.
    Parse,
    /// A mathematical precondition does not hold.
    Precondition,
    /// A size bound or search budget was exhausted.
    Bound,
    /// An internal consistency check failed.
    Internal,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Parse(_) => ErrorKind::Parse,
            Error::ClosureExceedsBound { .. } | Error::BudgetExceeded { .. } => ErrorKind::Bound,
            Error::CriterionMismatch { .. } | Error::VerificationFailed(_) => ErrorKind::Internal,
            _ => ErrorKind::Precondition,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
