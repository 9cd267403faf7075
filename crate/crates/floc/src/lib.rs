//! Degreewise-exact local cohomology for finely graded modules over
//! polynomial rings.
//!
//! The engine realizes chain complexes one internal degree at a time as small
//! exact matrices, computes local cohomology, local homology, formal local
//! cohomology and local Tate cohomology tables, and cross-checks the
//! homological identities relating them.

pub mod degree;
pub mod error;
pub mod field;
pub mod matrix;
pub mod monomial;
pub mod presentation;

pub use degree::{DegreeBox, Multidegree};
pub use error::{Error, Result};
pub use field::{FieldSpec, Fp, Scalar};
pub use matrix::Matrix;
pub use monomial::{MonomialIdeal, RingSpec};

/// Exact rational scalars (characteristic zero).
pub type Q = num::BigRational;

/// Matrices over the rationals.
pub type MatrixQ = Matrix<Q>;
