use thiserror::Error;

/// One violated invariant found while validating an index or a sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub rule: &'static str,
    pub message: String,
}

impl Violation {
    pub fn new(rule: &'static str, message: impl Into<String>) -> Self {
        Violation {
            rule,
            message: message.into(),
        }
    }
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.rule, self.message)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("invalid index: {}", join(.0))]
    Invalid(Vec<Violation>),

    #[error("unsupported: {0}")]
    UnsupportedKind(String),

    #[error("unsupported degeneration at state {state}")]
    UnsupportedDegeneration {
        state: String,
        trace: Vec<crate::restriction::TraceStep>,
    },

    #[error("enumeration cap exceeded: more than {cap} indices")]
    CapExceeded { cap: usize },

    #[error("rigidity undefined for non-essential sub-index {0}")]
    NotEssential(String),

    #[error("space mismatch: {0}")]
    SpaceMismatch(String),

    #[error("coefficient overflow")]
    Overflow,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

fn join(v: &[Violation]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

impl Error {
    /// Stable short name used in JSON error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Syntax { .. } => "syntax",
            Error::Invalid(_) => "validation",
            Error::UnsupportedKind(_) => "unsupported-kind",
            Error::UnsupportedDegeneration { .. } => "unsupported-degeneration",
            Error::CapExceeded { .. } => "cap-exceeded",
            Error::NotEssential(_) => "not-essential",
            Error::SpaceMismatch(_) => "space-mismatch",
            Error::Overflow => "overflow",
            Error::InvalidArgument(_) => "invalid-argument",
        }
    }

    /// 1 for bad input, 2 for things outside the engine's scope.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::UnsupportedKind(_)
            | Error::UnsupportedDegeneration { .. }
            | Error::CapExceeded { .. }
            | Error::Overflow => 2,
            _ => 1,
        }
    }

    pub fn location(&self) -> Option<usize> {
        match self {
            Error::Syntax { position, .. } => Some(*position),
            _ => None,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
