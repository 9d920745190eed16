//! Representations of the symmetric quiver algebra A(l): the named
//! indecomposables, duality, symmetric decompositions attached to patterns
//! and flags, explicit flag representations, and Auslander–Reiten data.

mod ar;
mod representation;
mod summand;
mod symmetric;

pub use ar::{ar_sequences, ArReport, ArSequence, SkippedSequence};
pub use representation::{symmetric_endo_dim, SymmetricRepresentation};
pub use summand::{CoefficientQuiver, Family, Summand, Vertex};
pub use symmetric::{
    flag_to_representation, indecomposables, pattern_to_summands, symmetric_catalog,
    SummandMultiset, SymmetricSummand,
};
