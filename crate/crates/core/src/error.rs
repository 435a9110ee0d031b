use thiserror::Error;

use crate::verify::Forbidden;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeffterError {
    #[error("{len} entries cannot fill a {rows}x{cols} array")]
    Shape {
        rows: usize,
        cols: usize,
        len: usize,
    },

    #[error("block {index} has {found} {axis_dim}, expected {expected}")]
    DimensionMismatch {
        index: usize,
        axis_dim: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("cannot concatenate an empty list of blocks")]
    EmptyConcat,

    #[error("entry {value} at ({row}, {col}) is outside [-{bound}, {bound}] \\ {{0}}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: i64,
        bound: i64,
    },

    #[error("{m}x{n} exceeds the supported size (m*n <= 2^30)")]
    TooLarge { m: usize, n: usize },

    #[error("H({m},{n}) {kind} is impossible: {}", .reason.reason)]
    Forbidden {
        m: usize,
        n: usize,
        kind: &'static str,
        reason: Forbidden,
    },

    #[error("{0}")]
    Precondition(String),

    #[error("search space {cells} cells exceeds the cap of {cap}")]
    SearchCap { cells: usize, cap: usize },

    #[error("invalid Skolem sequence: {0}")]
    InvalidSkolem(String),

    #[error("bad expression {expr:?}: {message}")]
    Expression { expr: String, message: String },

    #[error("variable `{0}` is not bound")]
    Unbound(char),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = HeffterError> = std::result::Result<T, E>;
