use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error: {0}")]
    Syntax(String),

    #[error("generator index {index} out of range for {strands} strands")]
    GeneratorIndex { index: usize, strands: usize },

    #[error("closure has {components} components, expected a knot")]
    NotAKnot { components: usize },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("exact division left a nonzero remainder")]
    InexactDivision,

    #[error("cannot evaluate a Laurent polynomial at 0")]
    EvaluateAtZero,

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("torus class is not isotropic: [T]^2 = {square}")]
    NotIsotropic { square: i128 },

    #[error("lattice coordinate overflow")]
    CoordinateOverflow,

    #[error("not a normalized Alexander polynomial: {0}")]
    NotNormalized(String),

    #[error("invalid SW data: {0}")]
    Schema(String),

    #[error("invalid knot table: {0}")]
    Table(String),

    #[error("unknown knot name '{0}'")]
    UnknownKnot(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code: 1 for bad user input, 2 for an internal
    /// consistency failure (a bug or a corrupted pipeline, never the
    /// user's fault).
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InexactDivision | Error::Internal(_) => 2,
            _ => 1,
        }
    }
}
