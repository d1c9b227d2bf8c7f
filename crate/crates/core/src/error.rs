use thiserror::Error;

/// Errors raised by constructors, solvers and the configuration-space tools.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite coordinate in input")]
    NonFinite,
    #[error("axis is not a unit vector (norm {0})")]
    NonUnitAxis(f64),
    #[error("zero quaternion")]
    ZeroQuaternion,
    #[error("matrix is not a rotation (orthonormality error {0:e})")]
    NotRotation(f64),
    #[error("invalid permutation {0:?}")]
    InvalidPermutation([usize; 4]),
    #[error("non-positive tolerance {0}")]
    InvalidTolerance(f64),
    #[error("the identity rotation has no configuration space to classify")]
    IdentityRotation,
    #[error("configuration space is empty")]
    EmptyNullSpace,
    #[error("vertices span fewer than two dimensions")]
    DegenerateVertices,
    #[error("points are collinear")]
    Collinear,
    #[error("projected points are collinear")]
    CollinearProjection,
    #[error("too few points for a conic fit: need 5, got {0}")]
    TooFewPoints(usize),
    #[error("conic through the points is not unique")]
    DegenerateConic,
    #[error("fitted conic is not an ellipse (discriminant {0:e})")]
    NotAnEllipse(f64),
    #[error("median chord does not meet the circumcircle a second time")]
    DegenerateChord,
    #[error("tetrahedron is not full-dimensional")]
    NotFullDimensional,
}

pub type Result<T> = std::result::Result<T, Error>;
