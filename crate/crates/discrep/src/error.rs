use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid exponent {0}: must be >= 1 or inf")]
    InvalidExponent(f64),
    #[error("exponent order violated: p = {p} > q = {q}")]
    ExponentOrder { p: String, q: String },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("n = {n} exceeds m = {m}")]
    TooManyColumns { n: usize, m: usize },
    #[error("{what} = {value} exceeds enumeration guard {cap}")]
    TooLarge {
        what: &'static str,
        value: usize,
        cap: usize,
    },
    #[error("matrix entry {value} is not in {{0,1}}")]
    NonBinaryEntry { value: f64 },
    #[error("column {col} has {nnz} nonzeros, sparsity bound is {t}")]
    SparsityExceeded { col: usize, nnz: usize, t: usize },
    #[error("non-finite matrix entry at ({row},{col})")]
    NonFiniteEntry { row: usize, col: usize },
    #[error("{n} is not a power of two")]
    NotPowerOfTwo { n: usize },
    #[error("unsupported regime: max(0,1/2-1/p)+1/q = 0 (p <= 2 and q = inf)")]
    UnsupportedRegime,
    #[error("subspace basis is not orthonormal (max deviation {dev:.3e})")]
    NonOrthonormalBasis { dev: f64 },
    #[error("invalid shift bounds at coordinate {i}")]
    InvalidBounds { i: usize },
    #[error("scalar solve did not converge after {iters} iterations")]
    ScalarSolveFailed { iters: usize },
    #[error("projection did not converge: residual {residual:.3e} after {iters} iterations")]
    ProjectionFailed { residual: f64, iters: usize },
    #[error("no progress: {frozen} coordinates frozen after {retries} retries")]
    NoProgress { frozen: usize, retries: usize },
    #[error("rejection sampling cap of {cap} draws exceeded")]
    RejectionCapExceeded { cap: usize },
    #[error("invalid config: {0}")]
    InvalidConfig(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
