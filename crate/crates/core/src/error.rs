use thiserror::Error;

/// Errors surfaced across the crate. Exact arithmetic has no rounding
/// failures; everything here is either bad input or an unsupported size.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at byte {offset}: {msg}")]
    Parse { offset: usize, msg: String },

    #[error("variable {var} out of range for n={n}")]
    VarOutOfRange { var: String, n: u32 },

    #[error("context mismatch: n={0} vs n={1}")]
    ContextMismatch(u32, u32),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid code: entry c[{pos}]={val} exceeds n-{pos}={max}")]
    InvalidCode { pos: usize, val: u32, max: u32 },

    #[error("unsupported n={n} for {what} (max {max})")]
    UnsupportedSize { n: u32, what: &'static str, max: u32 },

    #[error("expected a linear polynomial in the x variables")]
    NonlinearInput,

    #[error("non-integral coefficient in {0}")]
    NonIntegral(String),

    #[error("root finding failed: {0}")]
    RootFinding(String),

    #[error("missing numeric value for variable {0}")]
    MissingValue(String),
}

pub type Result<T> = std::result::Result<T, Error>;
