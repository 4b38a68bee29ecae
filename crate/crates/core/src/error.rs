use thiserror::Error;

use crate::gf2::BitVector;

/// Why a matrix was rejected as a normalizer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    OddColumns { cols: usize },
    Shape { rows: usize, n: usize },
    RankDeficient { rank: usize, rows: usize },
    /// No row can serve as pivot at this coordinate pair in either half.
    NoPivot { pair: usize },
    /// A vector of the symplectic dual of the row space that is not itself in
    /// the row space, so the stabilizer is not contained in the normalizer.
    NotSelfOrthogonal { vector: BitVector },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::OddColumns { cols } => write!(f, "column count {cols} is odd"),
            Violation::Shape { rows, n } => write!(
                f,
                "{rows} rows for n = {n}: a normalizer matrix needs between n and 2n rows"
            ),
            Violation::RankDeficient { rank, rows } => {
                write!(f, "rank {rank} is smaller than the row count {rows}")
            }
            Violation::NoPivot { pair } => write!(
                f,
                "coordinate pair {pair} admits no pivot in either half"
            ),
            Violation::NotSelfOrthogonal { vector } => write!(
                f,
                "symplectic dual vector {vector} is not in the row space (C is not contained in its symplectic dual)"
            ),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("rank deficient: rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },

    #[error("invalid normalizer matrix: {0}")]
    Validation(Violation),

    #[error("brute force needs 2^{rows} combinations, limit is 2^{limit}")]
    BudgetExceeded { rows: usize, limit: usize },

    #[error("no admissible codeword found after complete enumeration")]
    NoAdmissibleCodeword,

    #[error("internal error: {0}")]
    Internal(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code for the command-line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidArgument(_)
            | Error::Parse { .. }
            | Error::Io(_)
            | Error::BudgetExceeded { .. } => 1,
            Error::RankDeficient { .. } | Error::Validation(_) => 2,
            Error::NoAdmissibleCodeword | Error::Internal(_) => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
