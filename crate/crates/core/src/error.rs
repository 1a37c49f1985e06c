use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A character outside `{D, U, d, u}` at the given zero-based position.
    #[error("invalid character {found:?} at position {position}; expected D or U")]
    Parse { position: usize, found: char },

    /// An input outside the operation's domain (non-rising word, k > n, ...).
    #[error("{0}")]
    Domain(String),

    /// A guarded computation would exceed its budget.
    #[error("{what}: limit {limit} exceeded (reached {reached})")]
    Resource {
        what: &'static str,
        limit: u128,
        reached: u128,
    },

    /// An internal consistency check failed. Always a bug.
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
