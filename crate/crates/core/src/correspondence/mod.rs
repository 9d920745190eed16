//! From patterns to representative matrices and back again through rank
//! signatures.

mod identify;
mod representative;
mod signature;
mod tex;

pub use identify::{decode, identify, identify_parabolic};
pub use representative::{parabolic_representative, pattern_to_matrix, refine};
pub use signature::{rank_signature, RankSignature};
pub use tex::{matrix_tex, pattern_tex, tex_table};
