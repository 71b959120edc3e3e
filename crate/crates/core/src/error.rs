use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: R_{left} vs R_{right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("variable index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("n = {n} exceeds the cap of {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_same_n(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { left, right })
    }
}
