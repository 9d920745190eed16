//! Classification of Borel and parabolic orbits of 2-nilpotent elements in
//! the symplectic and orthogonal Lie algebras.
//!
//! Orbits are indexed by oriented link patterns ([`patterns`]). Each
//! pattern has a representative matrix, and any 2-nilpotent element can be
//! mapped back to its pattern through lower-left rank invariants
//! ([`correspondence`]). The [`quiver`] module carries the matching
//! decompositions into indecomposables of the symmetric quiver algebra.
//! All arithmetic is exact.

pub mod correspondence;
pub mod error;
pub mod harness;
pub mod linalg;
pub mod patterns;
pub mod quiver;

pub use error::{Error, Result};
