use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("graph6 parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("graph is not regular")]
    Irregular,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("invalid switching set: vertex {vertex} has {count} neighbours in U (|U| = {size})")]
    SwitchingInvalid {
        vertex: usize,
        count: usize,
        size: usize,
    },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("bound not applicable: {0}")]
    Inapplicable(String),
    #[error("statistic undefined: {0}")]
    Undefined(String),
    #[error("graph is not distance-regular")]
    NotDistanceRegular,
    #[error("parameters outside the formula's domain: {0}")]
    Domain(String),
    #[error("certificate check failed: {0}")]
    Certificate(String),
    #[error("{what} has {n} vertices, above the cap of {cap}")]
    TooLarge { what: String, n: usize, cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}
