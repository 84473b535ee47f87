//! Lagrangians of uniform hypergraphs and weighted intersecting set systems.

mod ascent;
pub mod certify;
pub mod cli;
pub mod error;
pub mod exact;
pub mod families;
pub mod hypergraph;
pub mod io;
pub mod lagrangian;
pub mod random;
pub mod report;
pub mod util;
pub mod wiss;

pub use error::{Error, Result};
pub use hypergraph::Hypergraph;
