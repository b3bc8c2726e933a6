use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the zero element has no degree")]
    ZeroElement,

    #[error("tensor position {position} out of range for arity {arity}")]
    PositionOutOfRange { position: usize, arity: usize },

    #[error("basis map undefined on {0}")]
    UndefinedOnKey(String),

    #[error("reduced coproduct needs an element of the counit kernel, got counit {counit} on {element}")]
    NonzeroCounit { element: String, counit: String },

    #[error("iterate {iterate} of the reduced coproduct of {element} is nonzero past the degree bound {bound}; the instance is not conilpotent")]
    ConilpotencyBoundExceeded { element: String, bound: usize, iterate: usize },

    #[error("reduced coproduct of {key} has a leg {leg} whose degree does not drop below {degree}")]
    DegreeDropViolation { key: String, leg: String, degree: usize },

    #[error("iteration count must be at least 1")]
    ZeroIterate,
}
