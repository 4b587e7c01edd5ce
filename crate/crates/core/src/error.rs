use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch in {op}: {detail}")]
    DimensionMismatch { op: &'static str, detail: String },

    #[error("{what} must be at least {min}, got {got}")]
    TooSmall {
        what: &'static str,
        min: usize,
        got: usize,
    },

    #[error("size guard exceeded: {what} ({got} > {limit})")]
    SizeGuard {
        what: &'static str,
        got: u128,
        limit: u128,
    },

    #[error("index out of range: {what} = {got}, expected < {bound}")]
    OutOfRange {
        what: &'static str,
        got: usize,
        bound: usize,
    },

    #[error("not a permutation of 0..{0}")]
    NotAPermutation(usize),

    #[error("operation requires a two-player game, got {0} players")]
    NotTwoPlayer(usize),

    #[error("Gram matrix of the stacked basis is not diagonal at ({0}, {1})")]
    NonDiagonalGram(usize, usize),
}

impl Error {
    pub(crate) fn mismatch(op: &'static str, detail: String) -> Self {
        Error::DimensionMismatch { op, detail }
    }

    /// True for errors caused by a violated size or range constraint on the input
    /// rather than by malformed data.
    pub fn is_constraint_violation(&self) -> bool {
        matches!(
            self,
            Error::TooSmall { .. } | Error::SizeGuard { .. } | Error::NotTwoPlayer(_)
        )
    }
}
