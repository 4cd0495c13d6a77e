//! Exact computational toolkit for finite real reflection groups.
//!
//! Everything is computed in exact arithmetic over real quadratic fields:
//! positive root systems and their reflection matrices, the full group as
//! signed permutations of the root set, the intersection lattice of the
//! reflection arrangement, the noncrossing partition lattice under absolute
//! order, the W-Laplacian matrix, reduced reflection factorizations and the
//! Hurwitz action on them. The `identities` module cross-checks a catalog of
//! enumerative identities (chain numbers, Chapoton's formula, parabolic
//! recursions) by computing both sides through independent code paths.

pub mod arrangement;
pub mod group;
pub mod hurwitz;
pub mod identities;
pub mod laplacian;
pub mod matrix;
pub mod nc;
pub mod poly;
pub mod roots;
pub mod scalar;

pub use matrix::QMatrix;
pub use poly::IntPolynomial;
pub use scalar::QScalar;

use thiserror::Error as ThisError;

#[derive(Debug, ThisError)]
pub enum Error {
    #[error("mixed quadratic fields: sqrt({0}) vs sqrt({1})")]
    MixedField(u32, u32),
    #[error("polynomial does not split over the integers: {0}")]
    NonIntegerRoots(String),
    #[error("characteristic polynomial has non-integer coefficient at degree {0}")]
    NonIntegerCoefficient(usize),
    #[error("unsupported or malformed Coxeter type: {0}")]
    BadType(String),
    #[error("group order exceeds cap {0}; raise COXLAB_CAP or pass --allow-large")]
    GroupTooLarge(usize),
    #[error("operation needs a matrix model but {0} is an abstract dihedral type")]
    NoMatrixModel(String),
    #[error("degree extraction failed: {0}")]
    DegreeExtraction(String),
    #[error("property violated: {0}")]
    PropertyViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
