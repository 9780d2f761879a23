use thiserror::Error;

use crate::geom::Kind;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rational number {0:?}")]
    InvalidNumber(String),

    #[error("kind mismatch in {op}: {left} and {right}")]
    KindMismatch {
        op: &'static str,
        left: Kind,
        right: Kind,
    },

    #[error("the product of two scalars is not a geometric operation")]
    ScalarProduct,

    #[error("syntax error at offset {pos}: {message}")]
    Syntax { pos: usize, message: String },

    #[error("unexpected character {ch:?} at offset {pos}")]
    UnknownChar { pos: usize, ch: char },

    #[error("unbound name `{0}`")]
    Unbound(String),

    #[error("`{name}` must be bound to a {expected}")]
    BindingKind { name: String, expected: Kind },

    #[error("points do not determine a unique curve (rank {rank}, need {needed})")]
    RankDeficient { rank: usize, needed: usize },

    #[error("no curve of degree {degree} passes through all {count} points")]
    NoCurve { degree: u32, count: usize },

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("points {0}, {1}, {2} are collinear")]
    GeneralPosition(String, String, String),

    #[error("construction step `{step}` ({expr}) produced a zero object")]
    DegenerateIntermediate { step: String, expr: String },

    #[error("no usable relabeling of the known points: {0}")]
    InsufficientPoints(String),

    #[error("point {0} is not on the cubic")]
    NotOnCurve(String),

    #[error("the line lies entirely on the curve")]
    LineContained,

    #[error("the zero polynomial defines no curve")]
    ZeroPolynomial,

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("scene: {0}")]
    Scene(String),

    #[error("i/o: {0}")]
    Io(String),

    #[error("usage: {0}")]
    Usage(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl Error {
    /// Process exit status for command-line use: 2 for degenerate input or a
    /// violated hypothesis, 3 for parse and I/O failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidNumber(_)
            | Error::Syntax { .. }
            | Error::UnknownChar { .. }
            | Error::Unbound(_)
            | Error::BindingKind { .. }
            | Error::Scene(_)
            | Error::Io(_)
            | Error::Usage(_) => 3,
            _ => 2,
        }
    }

    /// Stable short code used in reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidNumber(_) => "invalid-number",
            Error::KindMismatch { .. } => "kind-mismatch",
            Error::ScalarProduct => "scalar-product",
            Error::Syntax { .. } => "syntax",
            Error::UnknownChar { .. } => "unknown-char",
            Error::Unbound(_) => "unbound",
            Error::BindingKind { .. } => "binding-kind",
            Error::RankDeficient { .. } => "rank-deficient",
            Error::NoCurve { .. } => "no-curve",
            Error::DegenerateInput(_) => "degenerate-input",
            Error::GeneralPosition(..) => "general-position",
            Error::DegenerateIntermediate { .. } => "degenerate-intermediate",
            Error::InsufficientPoints(_) => "insufficient-points",
            Error::NotOnCurve(_) => "not-on-curve",
            Error::LineContained => "line-contained",
            Error::ZeroPolynomial => "zero-polynomial",
            Error::Hypothesis(_) => "hypothesis",
            Error::Scene(_) => "scene",
            Error::Io(_) => "io",
            Error::Usage(_) => "usage",
        }
    }
}
