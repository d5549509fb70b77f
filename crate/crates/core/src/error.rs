use thiserror::Error;

use crate::poly::UPoly;
use crate::poly::Rat;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("cannot homogenize zero")]
    HomogenizeZero,

    #[error("polynomial has degree 0 in `{var}`; nothing to eliminate")]
    DegreeZeroIn { var: String },

    #[error("gcd of zero polynomials is undefined")]
    AllZero,

    #[error("variable `{0}` is not in the polynomial ring")]
    UnknownVariable(String),

    #[error("variable `{0}` still occurs in the polynomial")]
    VariableInUse(String),

    #[error("reducible modulus: found factor {factor}")]
    ReducibleModulus { factor: UPoly<Rat> },

    #[error("root finding did not converge (best residual {residual:e})")]
    RootsNonConvergence { residual: f64 },

    #[error("polynomial must have degree at least 1")]
    ConstantPolynomial,

    #[error("{line}:{column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("at least two generators are required, got {0}")]
    TooFewGenerators(usize),

    #[error("generators not independent under Δ-combination; re-randomize Δ weights")]
    VanishingResultant,

    #[error("curve fails closure computation: {0}")]
    ClosureFailure(String),

    #[error("no valid projection frame: {0}")]
    NoValidFrame(String),

    #[error("parametrization contract violated: {0}")]
    ContractViolation(String),

    #[error("no oracle parametrization was supplied")]
    MissingOracle,

    #[error("reducible factor: {0}")]
    ReducibleFactor(String),

    #[error("assumption (4) violated numerically: {0}")]
    NoCommonRoot(String),

    #[error("lift is ill-conditioned: {0}")]
    IllConditioned(String),

    #[error("q numerically not square-free: {0}")]
    NotSquareFree(String),

    #[error("factors not coprime")]
    FactorsNotCoprime,

    #[error("no common root over the extension; the plane parametrization does not match the curve at infinity exactly")]
    InconsistentAtInfinity,

    #[error("lift postcondition failed ({clause}): {detail}")]
    Postcondition { clause: String, detail: String },

    #[error("singular point at infinity {0}")]
    SingularAtInfinity(String),

    #[error("tangent at infinity point {0} lies in the plane w=0")]
    TangentAtInfinity(String),

    #[error("structure at infinity mismatch: {0}")]
    StructureMismatch(String),

    #[error("assumption not satisfied: {0}")]
    AssumptionFailed(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("degree computation inconsistent across plane draws: {0:?}")]
    InconsistentDegree(Vec<usize>),

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
