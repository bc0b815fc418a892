//! Exact symbolic computations with supercommutative algebras and
//! algebraic supergroups: supermatrices and the Berezinian, the
//! orthosymplectic groups in dimension 2|1, the conjugation model of the
//! projective linear supergroup, charts and line bundles on projective
//! superspace, and the SUSY structure of the projective superline.

pub mod autmat;
pub mod error;
pub mod linebundle;
pub mod projective;
pub mod sampling;
pub mod superalg;
pub mod supergroups;
pub mod supermatrix;
pub mod susy;

pub use error::{Error, Result};
pub use superalg::{AlgebraMorphism, FieldSpec, Parity, RingSignature, SuperPoly};
pub use supermatrix::SuperMatrix;

