use thiserror::Error;

/// Errors reported by set-spec parsing and validation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SetSpecError {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("part sets may not contain 0")]
    ZeroInPartSet,
    #[error("multiplicity set must contain 0")]
    ZeroMissingFromMultiplicities,
    #[error("base must be at least 2, got {0}")]
    BaseTooSmall(u64),
    #[error("finite set must not be empty")]
    EmptyFinite,
    #[error("elements must be strictly increasing")]
    NotStrictlyIncreasing,
    #[error("{0} must be positive")]
    NotPositive(&'static str),
    #[error("invalid epsilon table: {0}")]
    InvalidEpsilon(String),
    #[error("epsilon table too short to produce any anchor")]
    EpsilonTooShort,
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

impl SetSpecError {
    /// True for errors caused by malformed text rather than bad set semantics.
    pub fn is_syntax(&self) -> bool {
        matches!(self, SetSpecError::Syntax { .. } | SetSpecError::Io { .. })
    }
}

/// Errors from the arithmetic, counting and bound modules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    SetSpec(#[from] SetSpecError),
    #[error("set has gcd {0}, no finite coprime subset exists")]
    NotCoprime(u64),
    #[error("set has no positive element")]
    NoPositiveElement,
    #[error("brute-force enumeration is capped at n = {cap}, got {n}")]
    BruteForceCap { n: u64, cap: u64 },
    #[error("count overflowed the chosen scalar type at n = {0}")]
    Overflow(u64),
    #[error("finite set exhausted before j*a_j >= {0}")]
    SetExhausted(u64),
    #[error("argument out of domain: {0}")]
    Domain(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
