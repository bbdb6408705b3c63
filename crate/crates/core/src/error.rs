use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a Cartan matrix: {0}")]
    NotCartan(String),
    #[error("root system is not of finite type (more than {0} positive roots)")]
    NotFiniteType(usize),
    #[error("diagram permutation does not preserve the Cartan matrix: {0}")]
    GammaNotAutomorphism(String),
    #[error("index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("orbit exceeds the size cap of {0}")]
    OrbitTooLarge(usize),
    #[error("rank {rank} exceeds the Weyl-group enumeration cap of {cap}")]
    RankTooLarge { rank: usize, cap: usize },
    #[error("vector is not dominant: coordinate {0} is negative")]
    NotDominant(usize),
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("the violation set is empty; the exponent lies in the parallelepiped")]
    EmptyViolationSet,
    #[error("problem too large: {what} = {got} exceeds cap {cap}")]
    TooLarge { what: &'static str, got: usize, cap: usize },
    #[error("matrix shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("multisegments have different supports")]
    SupportMismatch,
    #[error("bad grid value {0}: complementary exponents must lie in [0, 1/2)")]
    BadGrid(String),
    #[error("unknown root datum label {0:?}")]
    UnknownDatum(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
