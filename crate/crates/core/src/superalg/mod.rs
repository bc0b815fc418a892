//! Exact arithmetic in finitely generated supercommutative algebras over
//! `Q` or `F_p` (p odd): even generators may be flagged laurent, odd
//! generators square to zero and anticommute.

pub mod derivation;
pub mod expr;
pub mod field;
pub mod morphism;
pub mod poly;
pub mod series;
pub mod signature;

pub use derivation::Derivation;
pub use expr::{format, parse, scan_identifiers};
pub use field::{Coeff, FieldSpec};
pub use morphism::{apply_morphism, compose_morphisms, AlgebraMorphism};
pub use poly::{Monomial, RawTerm, SuperPoly};
pub use series::{exp_nilpotent, log_one_plus};
pub use signature::{GenRef, Parity, RingSignature, SignatureBuilder};
