use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("a*t^2 + b*t + c has no root: a = b = 0 and c != 0")]
    NoRoot,
    #[error("values from two different quadratic extensions (d = {0} and d = {1}) were combined")]
    MixedExtension(String, String),
    #[error("group generated by the given elements has more than {0} elements")]
    NotFiniteWithinCap(usize),
    #[error("element is projectively the identity")]
    IdentityElement,
    #[error("boundary is not invariant under the group: {0}")]
    NotInvariant(String),
    #[error("boundary coefficient out of range: {0}")]
    CoefficientOutOfRange(String),
    #[error("divisor has degree {found}, expected {expected}")]
    Degree { expected: String, found: String },
    #[error("the torus action is not symmetric: a nonzero character is fixed by the group")]
    NotSymmetric,
    #[error("variety is not declared Fano")]
    NotFano,
    #[error("variety is not declared log terminal")]
    NotLogTerminal,
    #[error("some point of the quotient has no vertical divisor over it (coefficient -inf); the quotient map is not a morphism on the maximal orbits")]
    MorphismHypothesisViolated,
    #[error("sign-pattern search exceeded the cap of {0} patterns")]
    CapExceeded(usize),
    #[error("projection is not surjective onto the target lattice")]
    NotSurjective,
    #[error("{0} coordinates exceed the enumeration limit of {1}")]
    TooManyCoordinates(usize, usize),
}

/// Coarse outcome classes used for process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Input,
    Computation,
    Precondition,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::Input(_)
            | Error::NoRoot
            | Error::IdentityElement
            | Error::NotInvariant(_)
            | Error::CoefficientOutOfRange(_)
            | Error::Degree { .. }
            | Error::TooManyCoordinates(..)
            | Error::NotSurjective => ErrorClass::Input,
            Error::MixedExtension(..) | Error::NotFiniteWithinCap(_) | Error::CapExceeded(_) => ErrorClass::Computation,
            Error::NotSymmetric | Error::NotFano | Error::NotLogTerminal | Error::MorphismHypothesisViolated => {
                ErrorClass::Precondition
            }
        }
    }
}

impl ErrorClass {
    /// Process exit code: 1 input, 2 computation, 3 precondition.
    pub fn exit_code(self) -> i32 {
        match self {
            ErrorClass::Input => 1,
            ErrorClass::Computation => 2,
            ErrorClass::Precondition => 3,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
