//! Link patterns: arcs on block vertices with capacities, their validity
//! rule, canonical enumeration, counting, and gluing along a flag.

mod arc;
mod enumerate;
mod json;
mod pattern;
mod space;

pub use arc::{Arc, LoopVariant};
pub use enumerate::{arc_shapes, count_enumerated, enumerate};
pub use pattern::{count_borel, LinkPattern, UnorientedArc, UnorientedPattern};
pub use space::{glue, SpaceSpec};
