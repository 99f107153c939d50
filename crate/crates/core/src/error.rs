use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("shell index {index} out of range (diameter {diameter})")]
    ShellOutOfRange { index: usize, diameter: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("Jacobi iteration did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
    #[error("dimension {n} exceeds the exact characteristic polynomial cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("({k},{g}) is not a Moore parameter set: {reason}")]
    NotMoore { k: u64, g: u64, reason: String },
    #[error("({k},{g}) is not constructible: {reason}")]
    NotConstructible { k: u64, g: u64, reason: String },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("construction failed validation: {0}")]
    Validation(String),
    #[error("formula error: {0}")]
    Formula(String),
    #[error("surd arithmetic: {0}")]
    Surd(String),
    #[error("unknown family spec `{0}`")]
    FamilySpec(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
