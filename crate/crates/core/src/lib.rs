//! Möbius polynomials of finite (generalized) ranked posets.
//!
//! The Möbius polynomial of a poset is computed as the sum of the entries of
//! the polynomial Möbius matrix, the inverse of the polynomial zeta matrix
//! `z^(rank(q) - rank(p))`. From it the crate assembles the Hilbert series
//! `(1 - z)/(1 - z*M_P(z))` of the splitting algebra and the graded trace
//! generating function of a poset automorphism, together with closed forms for
//! chains, Boolean lattices, divisor posets, direct products and
//! factor-shuffling automorphisms.
//!
//! All arithmetic is exact over arbitrary-precision integers.

pub mod cli;
pub mod constructions;
mod error;
pub mod format;
pub mod incidence;
pub mod polyalg;
pub mod poset;
pub mod series;

pub use error::{Error, Result};
pub use polyalg::{IntPolynomial, PolyMatrix, RationalSeries};
pub use poset::{Diagnostic, Poset, PosetAutomorphism, RankAssignment, RankKind, RankedPoset};
