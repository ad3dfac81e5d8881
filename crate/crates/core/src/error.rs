use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("semigroup needs at least one generator")]
    EmptyGenerators,
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("generator {index} has {found} coordinates, expected {expected}")]
    DimensionMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("generator {index} is zero")]
    ZeroGenerator { index: usize },
    #[error("generators {first} and {second} coincide")]
    DuplicateGenerator { first: usize, second: usize },
    #[error("generator {index} lies in the semigroup spanned by the other generators")]
    NonMinimalGenerator { index: usize },
    #[error("semigroup is not simplicial: {0}")]
    NotSimplicial(String),
    #[error("{0} is not an element of the semigroup")]
    NotInSemigroup(String),
    #[error("exponent tuples have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("resource bound exceeded: {what} (limit {limit})")]
    ResourceBound { what: &'static str, limit: usize },
    #[error("semigroup is not numerical: {0}")]
    NotNumerical(String),
    #[error("gcd({0}, {1}) != 1")]
    GcdViolation(u64, u64),
    #[error("extension is not nice: lambda = {lambda} exceeds factorization length {length}")]
    NotNice { lambda: u64, length: u64 },
    #[error("the factorization does not evaluate to b: {0}")]
    NotInSpan(String),
    #[error("expected a < b, got a = {0}, b = {1}")]
    OrderViolation(u64, u64),
    #[error("generator {0} is not homogeneous")]
    NonHomogeneousInput(usize),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

impl Error {
    pub(crate) fn resource(what: &'static str, limit: usize) -> Self {
        Error::ResourceBound { what, limit }
    }
}
