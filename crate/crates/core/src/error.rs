use crate::arith::UniPoly;
use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("cannot map {0} into the working field")]
    NotRepresentable(String),
    #[error("interpolation nodes are not distinct (node {0})")]
    DuplicateNode(usize),
    #[error("interpolation needs {expected} points, got {got}")]
    NodeCount { expected: usize, got: usize },
    #[error("operation is undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("first subresultant needs both degrees >= 2 (got {0} and {1})")]
    DegenerateSubresultant(usize, usize),
    #[error("element is not invertible modulo the given polynomial")]
    NotInvertible { gcd: UniPoly },
    #[error("direction vector must be nonzero")]
    ZeroDirection,
    #[error("expected {expected} supports in dimension {dim}, got {got}")]
    ArityError { expected: usize, got: usize, dim: usize },
    #[error("support problem: {0}")]
    BadSupport(String),
    #[error("mixed volume is already positive; nothing to repair")]
    NothingToRepair,
    #[error("supports are not contained in a common hyperplane orthogonal to the direction")]
    NotAFace,
    #[error("tuple is not contained in the reference tuple (index {0})")]
    NotASubTuple(usize),
    #[error("mixed volume is zero")]
    ZeroMixedVolume,
    #[error("lifting is not generic for this support tuple")]
    LiftingDegenerate,
    #[error("extraneous factor vanished at this coefficient assignment")]
    ExtraneousVanished,
    #[error("no cached matrix for this key")]
    CacheMiss,
    #[error("perturbation failed: all probes gave a zero generalized characteristic polynomial")]
    PerturbationFailed,
    #[error("univariate slice vanished identically")]
    DegenerateSlice,
    #[error("exhausted {0} values of the genericity parameter")]
    GenericityExhausted(usize),
    #[error("zero set has no isolated torus points to describe")]
    NotZeroDimensional,
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("coefficient map is missing term {term} of polynomial {poly}")]
    MissingCoefficient { poly: usize, term: usize },
    #[error("internal consistency check failed: {0}")]
    Internal(String),
    #[error("I/O failure: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn not_invertible(gcd: UniPoly) -> Self {
        Error::NotInvertible { gcd }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
