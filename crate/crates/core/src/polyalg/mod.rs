//! Exact integer polynomials, polynomial matrices and rational power series.

mod matrix;
mod poly;
mod rational;

pub use matrix::PolyMatrix;
pub use poly::IntPolynomial;
pub use rational::{series_expand, RationalSeries};
