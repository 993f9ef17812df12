//! Exact arithmetic substrate: rationals, polynomials, matrices, sampling.

pub mod matrix;
pub mod poly;
pub mod random;
pub mod rational;

pub use matrix::{PolyMatrix, RationalMatrix};
pub use poly::{Monomial, Polynomial};
pub use rational::{int, rat, Rational};
