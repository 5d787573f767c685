use thiserror::Error;

/// Everything that can go wrong in this crate.
///
/// Most variants are input-validation or budget failures. [`Error::CrossCheck`]
/// is different in kind: it means two independent computations of the same
/// quantity disagreed, i.e. an internal mathematical invariant was violated.
/// The command line maps it to its own exit code so scripted callers can tell
/// "you asked for something invalid" apart from "the library caught itself
/// being wrong".
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not an odd prime; the residue rings here are Z/l^n with l an odd prime >= 3")]
    NotOddPrime(u64),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("level must be >= 1")]
    ZeroLevel,

    #[error("no level below 1 to reduce to")]
    NoLowerLevel,

    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: String, right: String },

    #[error("{value} is not a unit mod {modulus}: only residues prime to l are invertible")]
    NotAUnit { value: String, modulus: String },

    #[error("rank must be >= 2 for a projectivisation, got {0}")]
    RankTooSmall(u32),

    #[error("every coordinate is divisible by l: the vector dies in the projectivisation")]
    NotProjectivisable,

    #[error("coordinate count {got} does not match rank {expected}")]
    CoordCountMismatch { expected: usize, got: usize },

    #[error("space has {cardinality} points, over the enumeration budget of {budget}")]
    SpaceTooLarge { cardinality: String, budget: u64 },

    #[error("matrix entries must form a {dim}x{dim} square, got {len} entries")]
    NotSquare { dim: usize, len: usize },

    #[error("matrix dimension must be >= 2, got {0}")]
    DimTooSmall(usize),

    #[error("matrix is singular over Z/l^n: determinant {det} is not a unit")]
    SingularMatrix { det: String },

    #[error("matrix dimension {dim} does not match point rank {rank}")]
    DimensionMismatch { dim: usize, rank: usize },

    #[error("closed-form orbit summary is only available for even levels >= 2, got {0}")]
    OddLevel(u32),

    #[error("arithmetic overflow: {0} does not fit the fixed-width budget of this operation")]
    Overflow(String),

    #[error("ramification profile has mass {mass} but the covering degree is {degree}")]
    ProfileMassMismatch { mass: String, degree: String },

    #[error("ramification data is inconsistent: 2g-2 came out as {0}, which is not an even integer >= -2")]
    BadEulerCharacteristic(String),

    #[error("base prime must be an odd prime > 3, got {0}")]
    BadBasePrime(u64),

    #[error("torsion prime l = {ell} must differ from the base prime p = {p}")]
    EllEqualsP { ell: u64, p: u64 },

    #[error("field has {size} elements, over the exhaustive-scan budget of {budget}")]
    FieldTooLarge { size: u64, budget: u64 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("the zero polynomial has no degree; this operation needs a nonzero polynomial")]
    ZeroPolynomial,

    #[error("Legendre parameter a = {0} is degenerate: a = 0 and a = 1 give singular fibres")]
    DegenerateParameter(String),

    #[error("curve with a = {a} is not strongly supersingular (trace {trace}); no Frobenius scalar exists")]
    NotStronglySupersingular { a: String, trace: i64 },

    #[error("census over F_p^2 is capped at p <= {cap} (asked for p = {p}); raise the cap explicitly to go further")]
    CensusBudget { p: u64, cap: u64 },

    #[error("cannot parse {input:?} as a field element; expected \"c0\" or \"c0+c1*w\" with 0 <= ci < p")]
    ParseElem { input: String },

    #[error("cannot parse {input:?} as a matrix; expected \"legendre\" or a row-major comma list like \"1,2,0,1\"")]
    ParseMatrix { input: String },

    #[error("cache file {path} is malformed at line {line}: {reason}")]
    CacheFormat {
        path: String,
        line: usize,
        reason: String,
    },

    #[error("the {command} command has no {format} rendering; supported: {supported}")]
    UnsupportedFormat {
        command: &'static str,
        format: &'static str,
        supported: &'static str,
    },

    #[error("cross-check failed: {0}")]
    CrossCheck(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("could not serialise report: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code for the command-line front end: 2 for a violated
    /// mathematical cross-check, 1 for everything else.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::CrossCheck(_) => 2,
            _ => 1,
        }
    }
}
