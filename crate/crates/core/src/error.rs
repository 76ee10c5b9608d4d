use thiserror::Error;

use crate::linalg::LinalgError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("presentation is not admissible: {0}")]
    NotAdmissible(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("relation is not a combination of parallel paths: {0}")]
    NonParallelRelation(String),
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("syntax error at line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("objects live over different algebras")]
    IncompatibleAlgebra,
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("subspace is not a submodule")]
    NotASubmodule,
    #[error("invalid idempotent: {0}")]
    InvalidIdempotent(String),
    #[error("summands {0} and {1} are isomorphic")]
    SummandsNotDistinct(usize, usize),
    #[error("summand {0} is decomposable")]
    SummandDecomposable(usize),
    #[error("algebra is not certified Iwanaga-Gorenstein within the cutoff")]
    NotGorensteinCertified,
    #[error("projective dimension of A/<f> exceeds one")]
    ProjDimTooBig,
    #[error("idempotent is not fabric: {0}")]
    NotFabric(String),
    #[error("A/<f> has infinite global dimension: {0}")]
    InfiniteQuotientGlobalDimension(String),
    #[error("fA has unbounded projective dimension over fAf: {0}")]
    CornerProjDimUnbounded(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("invalid Kupisch series: {0}")]
    InvalidKupisch(String),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
