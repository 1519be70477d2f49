use thiserror::Error;

/// Failures of the exact algebra engine (presentations, tensor arithmetic,
/// straightening, holonomy transport).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("elements belong to different presentations")]
    MixedPresentations,
    #[error("position {position} out of range for a word of length {len}")]
    PositionOutOfRange { position: usize, len: usize },
    #[error("position {position} is not a descent of the word")]
    NotADescent { position: usize },
    #[error("more than {limit} distinct normal forms reached")]
    TooManyResults { limit: usize },
    #[error("rewrite search visited more than {limit} states")]
    StateBudgetExceeded { limit: usize },
}

/// Errors from the `.lie` file format and the expression grammar.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {source}")]
    Line {
        line: usize,
        #[source]
        source: Box<ParseError>,
    },
    #[error("missing `basis` line")]
    MissingBasis,
    #[error("`basis` must be the first non-comment line")]
    BasisNotFirst,
    #[error("`basis` line given more than once")]
    RepeatedBasis,
    #[error("empty basis")]
    EmptyBasis,
    #[error("duplicate basis name `{0}`")]
    DuplicateName(String),
    #[error("invalid basis name `{0}`")]
    InvalidName(String),
    #[error("unknown basis name `{0}`")]
    UnknownName(String),
    #[error("bracket [{0}, {1}] listed twice")]
    DuplicatePair(String, String),
    #[error("self-bracket [{0}, {0}] is zero by antisymmetry and may not be listed")]
    SelfBracket(String),
    #[error("malformed rational `{0}`")]
    MalformedRational(String),
    #[error("unexpected character `{0}`")]
    UnexpectedChar(char),
    #[error("expected {expected}, found {found}")]
    Unexpected {
        expected: &'static str,
        found: String,
    },
    #[error("empty term")]
    EmptyTerm,
    #[error("bracket values must be linear in the basis; term `{0}` is not")]
    NotLinear(String),
    #[error("unknown directive `{0}`")]
    UnknownDirective(String),
}

impl ParseError {
    /// The underlying error with any line annotation stripped.
    pub fn root(&self) -> &ParseError {
        match self {
            ParseError::Line { source, .. } => source.root(),
            other => other,
        }
    }

    pub(crate) fn at_line(self, line: usize) -> ParseError {
        match self {
            e @ ParseError::Line { .. } => e,
            e => ParseError::Line {
                line,
                source: Box::new(e),
            },
        }
    }
}
