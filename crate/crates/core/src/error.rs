use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument is outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Two elements live in different rings.
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },

    /// The tensor power is too large for the configured monomial limit.
    #[error("sizing error: predicted {predicted} monomials exceeds limit {limit}")]
    Sizing { predicted: u128, limit: u64 },

    /// Monomials of this ring do not fit the packed 64-bit key.
    #[error("sizing error: {bits} bits per monomial exceeds the 64-bit key")]
    KeyWidth { bits: u32 },

    /// A requested table has more rows than allowed.
    #[error("range too large: {rows} rows exceeds limit {limit}")]
    RangeTooLarge { rows: u128, limit: u64 },

    /// Two independent routes disagree.
    #[error("inconsistency: {0}")]
    Inconsistent(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// True for errors caused by a resource guard rather than bad input.
    pub fn is_resource_guard(&self) -> bool {
        matches!(
            self,
            Error::Sizing { .. } | Error::KeyWidth { .. } | Error::RangeTooLarge { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
