use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("position {k} is out of range 1..={n}")]
    PositionOutOfRange { k: usize, n: usize },

    #[error("interval starting at {start} with length {length} does not fit a text of length {n}")]
    InvalidInterval {
        start: usize,
        length: usize,
        n: usize,
    },

    #[error("text of {0} bytes exceeds the supported maximum of {max}", max = crate::text::MAX_TEXT_LEN)]
    TextTooLong(usize),

    #[error("worker count must be at least 1")]
    ZeroWorkers,

    #[error("malformed suffix structures: {0}")]
    MalformedStructures(&'static str),

    #[error("invalid position spec {spec:?}: {reason}")]
    InvalidPositionSpec { spec: String, reason: &'static str },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
