//! Exact straightening in universal enveloping algebras, and the symmetric
//! group geometry that explains why it is consistent.
//!
//! * [`presentation`]: Lie algebras by structure constants, Jacobi checks.
//! * [`tensor`]: words and exact linear combinations of words.
//! * [`mod@normalize`]: rewriting to PBW canonical form, brute-force confluence.
//! * [`coxeter`]: the symmetric group as a Coxeter group, loops, local moves.
//! * [`holonomy`]: transporting monomials around loops of transpositions.
//! * [`geometry`]: the A3 Weyl chamber tessellation of the 2-sphere.
//! * [`expr`]: the expression grammar used on the command line.

pub mod algebras;
pub mod coxeter;
pub mod error;
pub mod expr;
pub mod geometry;
pub mod holonomy;
pub mod lincomb;
pub mod normalize;
pub mod presentation;
mod syntax;
pub mod tensor;

pub use error::{AlgebraError, ParseError};
pub use lincomb::{rational, LinComb, Rational};
pub use normalize::{normalize, normalize_all_ways, swap_reduce_at, Strategy};
pub use presentation::{BasisIndex, LiePresentation, PresentationBuilder, Vector};
pub use tensor::{bracket_in_context, TensorElement, Word};
