//! Bounded searches for embeddings and homomorphisms.
//!
//!     cargo run --release --example freeness

use lagrangia::hypergraph::construct::{complete, k_rr, star};
use lagrangia::hypergraph::search::{contains_subgraph, has_homomorphism, DEFAULT_NODE_BUDGET};
use lagrangia::random;

fn main() -> lagrangia::Result<()> {
    let k33 = k_rr(3)?;
    // K33(3) has 15 vertices, so smaller stars are free for trivial reasons
    for (a, b) in [(4, 9), (5, 10), (6, 12)] {
        let res = contains_subgraph(&star(a, b, 3)?, &k33, DEFAULT_NODE_BUDGET)?;
        println!("star({a}, {b}) contains K33(3): {:?} after {} nodes", res.decided(), res.nodes());
    }
    let res = has_homomorphism(&k33, &complete(9, 3)?, DEFAULT_NODE_BUDGET)?;
    println!("K33(3) maps into K9(3): {:?} after {} nodes", res.decided(), res.nodes());

    let k44 = k_rr(4)?;
    let mut rng = random::rng(0, 0);
    for _ in 0..5 {
        let h = random::intersecting_graph(9, 4, 300, &mut rng)?;
        let res = has_homomorphism(&k44, &h, DEFAULT_NODE_BUDGET)?;
        println!("intersecting 4-graph with {:2} edges admits K44(4): {:?}", h.edge_count(), res.decided());
    }
    Ok(())
}
