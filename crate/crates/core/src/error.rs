use thiserror::Error;

/// Every failure the library can report.
///
/// Variants name the violated precondition so the CLI can echo them verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("NotPrime: modulus {0} is not prime")]
    NotPrime(u64),
    #[error("DivisionByZero: zero has no multiplicative inverse")]
    DivisionByZero,
    #[error("FieldMismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("ZeroDimension: matrices need at least one row and one column")]
    ZeroDimension,
    #[error("DimensionMismatch: {op} got {left} and {right}")]
    DimensionMismatch { op: &'static str, left: String, right: String },
    #[error("NotSquare: expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("BadCut: cannot split a {n}x{n} matrix at {cut}")]
    BadCut { n: usize, cut: usize },
    #[error("DivisionByZeroPoly: division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("CharacteristicTooSmall: characteristic {characteristic} does not exceed n = {n}")]
    CharacteristicTooSmall { characteristic: u64, n: usize },
    #[error("NotTriangular: matrix is not {0} triangular")]
    NotTriangular(&'static str),
    #[error("SingularDiagonal: diagonal entry {0} is zero")]
    SingularDiagonal(usize),
    #[error("TooLarge: cofactor oracle limited to n <= {limit}, got {n}")]
    TooLarge { n: usize, limit: usize },
    #[error("Singular: determinant is zero")]
    Singular,
    #[error("BadIndex: index {index} outside 1..={n}")]
    BadIndex { index: usize, n: usize },
    #[error("NotIndependent: columns are linearly dependent")]
    NotIndependent,
    #[error("NotTotal: columns do not span the space (rank {rank} < {n})")]
    NotTotal { rank: usize, n: usize },
    #[error("ParseError at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, column, message: message.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
