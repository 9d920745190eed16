//! Exact rational linear algebra and the Lie-theoretic predicates on top of
//! it: forms, membership, nilpotency, and subalgebra dimensions.

mod flag;
mod group;
mod json;
mod matrix;

pub use flag::{centralizer_dim_in_borel, commutator_rank, IsotropicFlag};
pub use group::{is_two_nilpotent, jay, t_transpose, GroupKind, PatternKind};
pub(crate) use matrix::rational_system_rank;
pub use matrix::{format_rational, parse_rational, rat, ratio, ExactMatrix, Rational};
