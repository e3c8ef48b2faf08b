use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid precision: {0}")]
    InvalidPrecision(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("{what} did not converge within {max_terms} terms")]
    NonConvergence { what: String, max_terms: usize },

    #[error("no closed form known for G_{0}")]
    UnknownInvariant(String),

    #[error("cubic discriminant is not positive ({0}); expected three distinct real roots")]
    UnexpectedDiscriminant(String),

    /// Both orientations of the cubic's roots match the seventh-power target
    /// within the separation margin. Retrying at higher precision usually helps.
    #[error("root orientation is ambiguous at {digits} digits (matched {best} digits, rival {rival}); retry with more digits")]
    AmbiguousOrientation { digits: u32, best: i64, rival: i64 },

    #[error("unknown id `{0}`")]
    Registry(String),

    #[error("cannot evaluate `{id}`: {reason}")]
    Construction { id: String, reason: String },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// True for failures that come from running out of precision or terms,
    /// as opposed to bad input.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::NonConvergence { .. } | Error::AmbiguousOrientation { .. } | Error::UnexpectedDiscriminant(_)
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}
