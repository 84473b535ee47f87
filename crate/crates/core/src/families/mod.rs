//! Intersecting families: exhaustive enumeration, the non-principal weight
//! audit, and the Frankl-type families `F(r, t, i)`.

mod enumerate;
mod frankl;
mod sweep;

pub use enumerate::{
    enumerate_intersecting, for_each_intersecting, EnumConfig, EnumStats, Enumeration, DEFAULT_NODE_BUDGET,
};
pub use frankl::{conjecture_frontier, frankl_family, g_family, FranklParams, Frontier, FrontierRow};
pub use sweep::{nonprincipal_gap_sweep, Sweep, SweepConfig, SweepRecord, SweepSummary};
