//! Equal products of `D` and `U` in the first Weyl algebra.
//!
//! A word over `{D, U}` maps to an element of the algebra generated by `D`
//! and `U` subject to `DU - UD = 1`. This crate decides when two words map
//! to the same element, produces canonical representatives, enumerates and
//! sizes the resulting equivalence classes, and carries a set of independent
//! oracles (operator normal ordering, the polynomial action, exhaustive
//! rewriting, rook numbers, finite-field rank counts) that cross-check each
//! other.
//!
//! Module map:
//!
//! - [`words`]: letters, words, diagonal paths, Laurent height polynomials.
//! - [`equivalence`]: the complete invariant, the linear-time checker and
//!   canonical forms.
//! - [`rewrite`]: balanced commutations, flips, irreducible commutations and
//!   the closed-form class size.
//! - [`weyl`]: normal ordering, Ferrers boards, rook numbers, the monomial
//!   action and finite-field rank counts.
//! - [`enumeration`]: class counts, c-Dyck counts and the brute-force oracle.
//! - [`percolation`]: low-density series for directed bond percolation.
//! - [`downup`]: normal forms in the down-up algebras `A(α, β, γ)`.

pub mod combinatorics;
pub mod downup;
pub mod enumeration;
pub mod equivalence;
mod error;
pub mod percolation;
pub mod rewrite;
pub mod weyl;
pub mod words;

pub use error::{Error, Result};
pub use words::{LaurentPoly, Letter, Word};
