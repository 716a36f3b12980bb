use thiserror::Error;

use crate::c1::{Rect, TilingDefect};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid rectangle {0}")]
    InvalidRect(Rect),

    #[error("invalid row range: x1 = {x1} is not below x2 = {x2}")]
    InvalidRange { x1: u32, x2: u32 },

    #[error("invalid tiling: {0}")]
    InvalidTiling(TilingDefect),

    #[error("pinwheel cuts must satisfy 0 < cx1 < cx2 < a and 0 < cy1 < cy2 < b")]
    InvalidPinwheel,

    #[error("board {a}x{b} is too large to enumerate (area cap {cap})")]
    BoardTooLarge { a: u32, b: u32, cap: u32 },

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    #[error("arithmetic overflow at {0}")]
    Overflow(u64),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
