use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("subsystem out of range: {index} (have {count})")]
    SubsystemOutOfRange { index: usize, count: usize },
    #[error("cannot trace out every subsystem")]
    TraceAll,
    #[error("hermitian required")]
    NotHermitian,
    #[error("square matrix required, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("state is not normalized (norm^2 = {0})")]
    NotNormalized(f64),
    #[error("invalid density matrix: {0}")]
    InvalidDensityMatrix(&'static str),
    #[error("expected {expected} qubits, got {actual}")]
    WrongQubitCount { expected: usize, actual: usize },
    #[error("invalid targets: {0}")]
    InvalidTargets(String),
    #[error("control qubit {0} is also a target")]
    ControlInTargets(usize),
    #[error("gate is not unitary")]
    NotUnitary,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
