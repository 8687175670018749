use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{value} exceeds the configured bound {bound}")]
    BoundExceeded { value: u128, bound: u128 },

    #[error("{0} is not a fundamental discriminant")]
    NotFundamental(i64),

    #[error("{0} is not the discriminant of an imaginary quadratic field")]
    NotImaginary(i64),

    #[error("discriminant {0} is a perfect square")]
    SquareDiscriminant(i64),

    #[error("discriminant mismatch: {left} vs {right}")]
    DiscriminantMismatch { left: i64, right: i64 },

    #[error("{prime} is inert in discriminant {disc}")]
    InertPrime { disc: i64, prime: i64 },

    #[error("precondition violated: {}", .0.join("; "))]
    PreconditionViolated(Vec<String>),

    #[error("Kuroda formula produced a non-integral or non-2-power value {numerator}/{denominator}")]
    NonIntegralResult { numerator: u128, denominator: u128 },

    #[error("invalid group parameters: {0}")]
    InvalidParams(String),

    #[error("elements belong to different groups")]
    GroupMismatch,

    #[error("subgroup index is {0}, expected 2")]
    IndexNotTwo(usize),

    #[error("element is not contained in the ambient subgroup")]
    ElementOutsideK,

    #[error("quotient is not abelian")]
    NonAbelianQuotient,

    #[error("Frattini quotient has rank {0}, expected 3")]
    RankMismatch(usize),

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("discriminant {0} is not of a supported kind (Type 4p or 4r)")]
    UnsupportedKind(i64),

    #[error("2-class group of {disc} has type {found}, expected (2,2,2^n)")]
    StructureMismatch { disc: i64, found: String },
}
