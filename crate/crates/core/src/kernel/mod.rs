//! Exact arithmetic: rationals, sparse multivariate polynomials over ℚ,
//! univariate polynomials over them, and fraction-free linear algebra.

pub mod matrix;
pub mod multipoly;
pub mod parse;
pub mod rational;
pub mod ratmat;
pub mod unipoly;

pub use matrix::{Dependence, PolyMatrix};
pub use multipoly::{Homogeneity, Monomial, MultiPoly};
pub use ratmat::{independent_subset, RatMatrix};
pub use rational::Rational;
pub use unipoly::UniPolyOverRing;
