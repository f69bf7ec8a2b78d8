use thiserror::Error;

/// Errors raised by the exact-arithmetic and geometry layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field description: {0}")]
    InvalidField(String),
    #[error("operands belong to different fields ({left} vs {right})")]
    SpecMismatch { left: String, right: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("perpendicular bisector undefined: the two points are at distance zero")]
    UndefinedBisector,
    #[error("axis is isotropic")]
    IsotropicAxis,
    #[error("not a rotation: u^2 + v^2 != 1")]
    NotARotation,
    #[error("no rigid motion transports the source segment onto the destination segment")]
    NoTransporter,
    #[error("element of the even subalgebra is not a unit (zero norm)")]
    NonUnit,
    #[error("projective point lies on the exceptional set X0^2 + X1^2 = 0")]
    NotInImage,
    #[error("projective object has all coordinates zero")]
    ZeroProjective,
    #[error("projective map is singular")]
    SingularMap,
    #[error("no segments of the requested length")]
    EmptySegmentClass,
    #[error("no admissible reflection axis found: {0}")]
    ReductionUnavailable(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
