use thiserror::Error;

/// Why a half-cut literal does not describe the support of any ultrafilter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SupportDefect {
    /// The initial segment has a greatest element.
    HasGreatest,
    /// The final segment has a least element.
    HasLeast,
    /// The chosen side of the cut is empty.
    EmptySide,
}

impl std::fmt::Display for SupportDefect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SupportDefect::HasGreatest => "has_greatest",
            SupportDefect::HasLeast => "has_least",
            SupportDefect::EmptySide => "empty_side",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("invalid position: {0}")]
    InvalidPosition(String),

    #[error("invalid support ({0})")]
    InvalidSupport(SupportDefect),

    #[error("invalid token: {0}")]
    InvalidToken(String),

    #[error("unknown gap `{0}`")]
    UnknownGap(String),

    #[error("the order is empty")]
    EmptyOrder,

    #[error("no canonical ladder from this end of the order")]
    NoCanonicalLadder,

    #[error("operands belong to different orders")]
    MixedTerms,

    #[error("order type has dense content; no closed form for s(X)")]
    NotClosedForm,

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("the universe of tokens is empty")]
    EmptyUniverse,

    #[error("equivalence is not a congruence: {0}")]
    CongruenceViolation(String),

    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
