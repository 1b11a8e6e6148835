use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The kinematic point lies outside the region where the requested object is defined.
    #[error("region error: |p0| = {p0_abs} with m = {m}; {hint}")]
    Region {
        p0_abs: f64,
        m: f64,
        hint: &'static str,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("momentum is off the mass shell: p·p − m² = {residual:e}")]
    OffShell { residual: f64 },

    #[error("configuration error in check `{check}`: {reason}")]
    Config { check: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
