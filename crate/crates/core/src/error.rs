use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("inverse of zero")]
    DivisionByZero,
    #[error("{value} is not an element of GF({q})")]
    InvalidElement { value: u64, q: u32 },
    #[error("q = {0} is even; the construction needs an odd prime power")]
    EvenQ(u32),
    #[error("t = {t} out of range for q = {q} (max {max})")]
    TOutOfRange { q: u32, t: u32, max: u32 },
    #[error("invalid shift sets: {0}")]
    InvalidShiftSets(String),
    #[error("vertex {0} not in graph")]
    VertexNotFound(String),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex pair ({0}, {1}) is both an edge and an arc")]
    EdgeArcConflict(usize, usize),
    #[error("vertex index {index} out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("duplicate vertex {0}")]
    DuplicateVertex(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("inconsistent graph: {0}")]
    Inconsistent(String),
    #[error("Kautz degree {0} is too small (need d >= 2)")]
    DegreeTooSmall(u32),
    #[error("certificate for target {target} failed: {reason}")]
    CertificateFailure { target: usize, reason: String },
    #[error("line {line}: {reason}")]
    MalformedFile { line: usize, reason: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Stable short name of the variant, used in CLI diagnostics.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NotPrimePower(_) => "NotPrimePower",
            Error::DivisionByZero => "DivisionByZero",
            Error::InvalidElement { .. } => "InvalidElement",
            Error::EvenQ(_) => "EvenQ",
            Error::TOutOfRange { .. } => "TOutOfRange",
            Error::InvalidShiftSets(_) => "InvalidShiftSets",
            Error::VertexNotFound(_) => "VertexNotFound",
            Error::SelfLoop(_) => "SelfLoop",
            Error::EdgeArcConflict(..) => "EdgeArcConflict",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::DuplicateVertex(_) => "DuplicateVertex",
            Error::InvalidParameter(_) => "InvalidParameter",
            Error::Inconsistent(_) => "Inconsistent",
            Error::DegreeTooSmall(_) => "DegreeTooSmall",
            Error::CertificateFailure { .. } => "CertificateFailure",
            Error::MalformedFile { .. } => "MalformedFile",
            Error::Io(_) => "Io",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
