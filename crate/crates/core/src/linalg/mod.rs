//! Exact rational scalars, dense rational matrices and monomial-entry
//! (Puiseux) matrices.

pub mod matrix;
pub mod puiseux;
pub mod rational;

pub use matrix::RationalMatrix;
pub use puiseux::{ExponentVector, PuiseuxMatrix};
pub use rational::Rational;
