use thiserror::Error;

use crate::parse::ParseError;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZeroPolynomial,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("all coefficients of the quadratic are zero")]
    DegenerateQuadratic,
    #[error("cannot combine sqrt({0}) and sqrt({1}) in one value")]
    MixedRadicals(String, String),
    #[error("value is not representable in Q or a quadratic extension: {0}")]
    NotRepresentable(String),
    #[error("{0} does not divide {1} exactly")]
    NotDivisible(String, String),
    #[error("the cubic coefficient A must be nonzero")]
    ZeroA,
    #[error("curve polynomial must be nonzero")]
    ZeroCurve,
    #[error("1 + ({0})*x = 0 is not an invariant curve")]
    NotInvariant(String),
    #[error("pair structure violated: {0}")]
    StructureViolation(String),
    #[error("exponent vector must not be identically zero")]
    ZeroExponents,
    #[error("parameter out of domain: {0}")]
    Domain(String),
    #[error("degenerate construction: {0}")]
    Degenerate(String),
    #[error("unknown instance id `{0}`; known ids: {known}", known = crate::families::INSTANCE_IDS.join(", "))]
    UnknownInstance(String),
    #[error("S-pair budget of {0} exhausted")]
    BudgetExceeded(usize),
    #[error("ideal is not zero-dimensional (no pure power of x{0} among leading terms)")]
    PositiveDimensional(usize),
    #[error("Groebner basis has not been computed")]
    NoGroebnerBasis,
    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
