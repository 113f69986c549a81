use thiserror::Error;

use crate::cartan::Weight;
use crate::tableau::TableauError;

/// Errors raised by the crystal constructions and their text formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid index {0}: expected 1 or 2")]
    InvalidIndex(i64),

    #[error("weight {0} is not dominant")]
    NotDominant(Weight),

    #[error("not a marginally large tableau: {0}")]
    Tableau(#[from] TableauError),

    #[error("no marginally large tableau has these box counts: {0} is violated")]
    NoTableau(&'static str),

    #[error("exponents violate {0}")]
    ConditionViolated(&'static str),

    #[error("{0}")]
    NotMember(String),

    #[error("node budget of {limit} exceeded after discovering {discovered} nodes")]
    NodeBudgetExceeded { limit: usize, discovered: usize },

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
