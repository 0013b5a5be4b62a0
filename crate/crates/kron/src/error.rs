use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Partition text that is not `-` or a comma-separated list of positive
    /// integers.
    #[error("cannot parse partition from {0:?}")]
    Parse(String),

    /// Parts that increase somewhere.
    #[error("parts are not weakly decreasing: {0:?}")]
    NotWeaklyDecreasing(String),

    /// A diagram operation was requested below its domain.
    #[error("{context}: n = {n} is below the bound {min}")]
    BoundViolation {
        context: &'static str,
        n: i64,
        min: i64,
    },

    /// Operands whose sizes do not satisfy the operation's size constraint.
    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    /// A chain was requested for a diagram that is not minimal at `n`.
    #[error("{lam} is not minimal at n = {n}: need n >= {min}")]
    NotMinimal { lam: String, n: i64, min: i64 },

    /// A symmetric group beyond the supported bound was requested.
    #[error("symmetric group S_{n} exceeds the supported bound n <= {max}")]
    GroupTooLarge { n: usize, max: usize },

    /// An internal consistency check failed; this signals a bug, not bad
    /// input.
    #[error("internal error: {0}")]
    Internal(String),

    /// A multiplicity came out negative; multiplicities are counts, so this
    /// signals a bug.
    #[error("negative multiplicity {value} for {context}")]
    NegativeMultiplicity { value: String, context: String },

    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn io(context: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            context: context.into(),
            source,
        }
    }
}
