use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("n must be at least 1")]
    ZeroDimension,
    #[error("alphabet size m must be at least 2, got {0}")]
    AlphabetTooSmall(u32),
    #[error("digit {digit} out of range for m = {m}")]
    DigitOutOfRange { digit: u32, m: u32 },
    #[error("vertices do not share (n, m): ({n1}, {m1}) vs ({n2}, {m2})")]
    DimensionMismatch { n1: usize, m1: u32, n2: usize, m2: u32 },
    #[error("{m}^{n} vertices exceeds the construction limit of {limit}")]
    TooLarge { n: usize, m: u32, limit: u64 },
    #[error("m = {0} is even, so 2 has no inverse mod {0} (tau and the Hanoi move rule need odd m)")]
    EvenModulus(u32),
    #[error("multiplier {c} is not coprime to m = {m}")]
    NotCoprime { c: u32, m: u32 },
    #[error("expected {expected} multipliers, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("matrix is not square lower-triangular: {0}")]
    NotLowerTriangular(String),
    #[error("diagonal entry {entry} at row {row} is not invertible mod {m}")]
    SingularDiagonal { row: usize, entry: u32, m: u32 },
    #[error("not a permutation of 0..{0}")]
    NotAPermutation(u32),
    #[error("cannot parse {input:?} as a vertex: {reason}")]
    Parse { input: String, reason: String },
    #[error("step index {index} out of range for {bits} bits")]
    IndexOutOfRange { index: String, bits: usize },
    #[error("disc index {disc} out of range 1..={n}")]
    DiscOutOfRange { disc: usize, n: usize },
    #[error("edge endpoint {0} is invalid: {1}")]
    InvalidEdge(String, String),
    #[error("{0}")]
    Unsupported(String),
    #[error("malformed json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
