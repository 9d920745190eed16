//! Independent oracles and seeded verification drivers: random elements
//! of Borel and parabolic subgroups, a brute-force pattern counter, and a
//! suite runner producing a machine-readable report.

mod brute;
mod random;
mod suite;

pub use brute::{
    brute_force_count, cross_check_named_conditions, satisfies_named_conditions, SEARCH_LIMIT,
};
pub use random::{
    exp_nilpotent, random_group_element, random_group_element_pair, GroupElement, Seed,
};
pub use suite::{
    all_flags, compositions, run_suite, CheckFamily, ReportEntry, Status, SuiteConfig, SuiteReport,
};
