//! Traces on a small ground set, and rebuilding an r-graph from them.
//!
//!     cargo run --example generating_sets

use lagrangia::hypergraph::construct::complete;
use lagrangia::io::system_line;
use lagrangia::wiss::{reconstruct, restrict};

fn main() -> lagrangia::Result<()> {
    // all 3-subsets of [5]: every two meet, and the traces on [5] are the sets themselves
    let k5 = complete(5, 3)?;
    let g = restrict(&k5, &[1, 2, 3, 4, 5])?;
    println!("traces: {}", system_line(&g));
    for n in [5, 7, 9] {
        let h = reconstruct(&g, n)?;
        println!("rebuilt on {n} vertices: {} edges, intersecting {}", h.edge_count(), h.is_intersecting());
    }

    let star_gen = lagrangia::hypergraph::SetSystem::new(1, 3, [[1]])?;
    let h = reconstruct(&star_gen, 8)?;
    println!("the generator {{1}} rebuilds the principal star: {} edges", h.edge_count());
    Ok(())
}
