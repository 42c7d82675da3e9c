use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("variable count mismatch: {0} vs {1}")]
    VariableCountMismatch(usize, usize),
    #[error("{0} variables requested, at most 24 supported")]
    TooManyVariables(usize),
    #[error("exponent {0} exceeds 255")]
    ExponentOverflow(u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at nu = {0}")]
    Pole(String),
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("hypersurface is singular: {0}")]
    Singular(String),
    #[error("f is not in the ideal of the plane (remainder {remainder})")]
    NotContained { remainder: String },
    #[error("linear forms are dependent")]
    DependentForms,
    #[error("not a regular sequence: {0}")]
    NotRegular(String),
    #[error("Gorenstein check failed at degree {degree}: {reason}")]
    NotGorenstein { degree: u32, reason: String },
    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: u32, got: u32 },
    #[error("class representative vanishes modulo the Jacobian ideal")]
    TrivialClass,
    #[error("stage '{stage}' failed: {source}")]
    Stage {
        stage: String,
        #[source]
        source: Box<Error>,
    },
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("serialization error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

impl Error {
    pub fn at_stage(self, stage: &str) -> Error {
        Error::Stage {
            stage: stage.to_string(),
            source: Box::new(self),
        }
    }

    /// Innermost error, skipping stage wrappers.
    pub fn root(&self) -> &Error {
        match self {
            Error::Stage { source, .. } => source.root(),
            e => e,
        }
    }

    /// True for failures of a scenario's preconditions (bad parameters,
    /// singular hypersurface, plane not contained, ...), as opposed to
    /// internal or I/O failures.
    pub fn is_precondition(&self) -> bool {
        matches!(
            self.root(),
            Error::Precondition(_)
                | Error::Singular(_)
                | Error::NotContained { .. }
                | Error::DependentForms
                | Error::NotRegular(_)
                | Error::TrivialClass
                | Error::Algebra(_)
                | Error::DegreeMismatch { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
