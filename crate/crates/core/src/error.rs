use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A requested computation exceeds a configured enumeration cap.
    #[error("size limit exceeded: {what} = {requested} exceeds cap {cap}")]
    SizeLimit {
        what: &'static str,
        requested: u64,
        cap: u64,
    },

    /// Input violates an operation's precondition.
    #[error("invalid input: {0}")]
    Domain(String),

    /// An exact computation produced a value that theory says is impossible
    /// (non-integral character value, class-dependent evaluator, ...).
    #[error("consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn consistency(msg: impl Into<String>) -> Self {
        Error::Consistency(msg.into())
    }
}

pub(crate) fn check_cap(what: &'static str, requested: u64, cap: u64) -> Result<()> {
    if requested > cap {
        Err(Error::SizeLimit {
            what,
            requested,
            cap,
        })
    } else {
        Ok(())
    }
}
