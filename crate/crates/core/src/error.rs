use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("malformed rational `{text}` (expected `p` or `p/q`)")]
pub struct ParseRationalError {
    pub text: String,
}

/// Text-format errors. These map to usage errors on the command line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("entry {position}: {source}")]
    Rational {
        /// 1-based index of the offending entry.
        position: usize,
        source: ParseRationalError,
    },
    #[error("expected {expected} comma-separated entries, found {found}")]
    Arity { expected: usize, found: usize },
    #[error("entry {position}: unknown key `{key}` (expected `{expected}`)")]
    Key {
        position: usize,
        key: String,
        expected: String,
    },
    #[error("entry {position}: {message}")]
    Invalid { position: usize, message: String },
}

/// Domain errors raised by the numerical layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alpha^2 must be strictly positive, got {0}")]
    NonPositiveAlphaSq(String),
    #[error("s must be strictly positive, got {0}")]
    NonPositiveS(String),
    #[error("locus is not a circle")]
    NotACircle,
    #[error("rank-zero class: the hyperbola degenerates to the vertical line beta = {0}")]
    RankZeroHyperbola(String),
    #[error("class {0} is not a lattice class (need integer ch0, ch1 and 2ch2 = ch1 mod 2)")]
    NonLatticeClass(String),
    #[error("wall search is unbounded for {class}: {reason}; pass explicit search bounds")]
    UnboundedSearch { class: String, reason: String },
    #[error("invalid region: {0}")]
    InvalidRegion(String),
    #[error("resolution must contain at least one term")]
    EmptyResolution,
    #[error("{what} out of range: {value}")]
    OutOfRange { what: &'static str, value: String },
    #[error("computed wall list deviates from the recorded one: {0}")]
    WallMismatch(String),
    #[error("degenerate viewport: {0}")]
    DegenerateViewport(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
