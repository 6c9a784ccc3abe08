use thiserror::Error;

/// Crate-wide error type.
///
/// The CLI maps these onto process exit codes: tower file problems
/// (parse errors, bad dimensions, invalid cocharacters) exit with 2,
/// unsupported centralizers with 3, inadmissible coefficient rings with 4.
#[derive(Debug, Error)]
pub enum Error {
    #[error("coefficient ring mismatch: {0} vs {1}")]
    RingMismatch(String, String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("substitution value for {var} is not homogeneous linear of degree 2")]
    InhomogeneousSubstitution { var: String },

    #[error("elementary symmetric index {k} out of range 0..={n}")]
    SymmetricIndexOutOfRange { k: usize, n: usize },

    #[error("coefficient reduction requires integer source and rational or prime-field target")]
    BadReduction,

    #[error("rank {rank} exceeds the configured Weyl enumeration bound {bound}")]
    RankBoundExceeded { rank: usize, bound: usize },

    #[error("unsupported centralizer: {0}")]
    UnsupportedCentralizer(String),

    #[error("coefficient ring {ring} is not admissible: torsion prime {prime} of {group} is not invertible")]
    InadmissibleCoefficients {
        ring: String,
        prime: u32,
        group: String,
    },

    #[error("tower data error at line {line}, column {col}: {msg}")]
    TowerFile { line: usize, col: usize, msg: String },

    #[error("invalid tower data: {0}")]
    InvalidTower(String),

    #[error("computation budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("Groebner engine requires field coefficients, got {0}")]
    NotAField(String),

    #[error("elimination failed: {0}")]
    EliminationFailed(String),

    #[error("unknown example name: {0}")]
    UnknownExample(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("machine document error: {0}")]
    MachineDoc(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
