//! Canonical operator algebra for a charged spin-1/2 particle in weak
//! electromagnetic fields, truncated at first order in the fields.

pub mod coefficient;
pub mod dimension;
pub mod error;
pub mod expr;
pub mod json;
mod product;
pub mod render;
pub mod tail;
pub mod words;

pub use coefficient::{rational, scalar, Coefficient, Scalar, Symbols};
pub use dimension::{check_dimension, DimensionMismatch, DimensionVector};
pub use error::AlgebraError;
pub use expr::{Mode, Monomial, OperatorExpr, TermKey};
pub use render::Style;
pub use tail::Tail;
pub use words::{collapse_to_homogeneous, normalize, Letter, Word, WordExpr};

/// Shorthands for homogeneous monomials used throughout the engine.
pub mod ops {
    use super::*;

    pub fn sp() -> OperatorExpr {
        OperatorExpr::term(Mode::Homogeneous, 1, 1, 0, Tail::SigmaPi)
    }

    pub fn se() -> OperatorExpr {
        OperatorExpr::term(Mode::Homogeneous, 1, 1, 0, Tail::SigmaE)
    }

    pub fn sb() -> OperatorExpr {
        OperatorExpr::term(Mode::Homogeneous, 1, 1, 0, Tail::SigmaB)
    }

    pub fn v() -> OperatorExpr {
        OperatorExpr::term(Mode::Homogeneous, 1, 1, 0, Tail::Potential)
    }

    pub fn pi2(n: u32) -> OperatorExpr {
        OperatorExpr::term(Mode::Homogeneous, 1, 1, n, Tail::Unit)
    }

    pub fn mono(c: Coefficient, p2: u32, tail: Tail) -> OperatorExpr {
        OperatorExpr::monomial(Mode::Homogeneous, c, p2, tail)
    }
}
