//! Minimal Cayley–Hamilton norms of finite-dimensional algebras over ℚ.
//!
//! An algebra is given by structure constants on a basis `a_1..a_m`. The
//! generic element `x = Σ x_i a_i` has a minimal polynomial `P(t)` whose
//! coefficients are polynomials in `x_1..x_m`; `N₀ = (−1)^k P(0)` is the
//! minimal Cayley–Hamilton norm and `k = deg P` the degree of the algebra.
//! [`structure`] splits `N₀` into reduced norms of the simple factors of
//! `R/J`.

pub mod algebra;
pub mod chnorm;
pub mod cli;
pub mod error;
pub mod factor;
pub mod kernel;
pub mod report;
pub mod structure;

pub use algebra::{Algebra, Element};
pub use error::{Error, Result};
pub use kernel::{MultiPoly, Rational, UniPolyOverRing};
