use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("partition {mu} does not fit in a {rows}x{cols} rectangle")]
    NotInRectangle { mu: String, rows: usize, cols: usize },

    #[error("partition {0} is not rectangular")]
    NotRectangular(String),

    #[error("unsupported root system {0}")]
    UnsupportedType(String),

    #[error("vector is not a root of {0}")]
    NotARoot(String),

    #[error("roots are proportional")]
    ProportionalRoots,

    #[error("group order {order} exceeds the enumeration cap {cap}")]
    CapExceeded { order: u64, cap: u64 },

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("invalid label: {0}")]
    InvalidLabel(String),

    #[error("unknown irreducible representation {0}")]
    UnknownIrrep(String),

    #[error("unknown class {0}")]
    UnknownClass(String),

    #[error("class function is not a character: {0}")]
    NotACharacter(String),

    #[error("exterior power {ell} out of range for rank {rank}")]
    WedgeOutOfRange { ell: usize, rank: usize },

    #[error("fake degree is not a polynomial: {0}")]
    NotPolynomial(String),

    #[error("split-class character value not evaluated: {0}")]
    SplitClassUnevaluated(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("table validation failed: {0}")]
    Validation(String),

    #[error("character table computation failed: {0}")]
    TableComputation(String),

    #[error("symbol padding exceeded: {0}")]
    SymbolPadding(String),

    #[error("reduction hypotheses fail for {0}")]
    ReductionFailed(String),

    #[error("missing data: {0}")]
    MissingData(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
