//! The named constructions and their structural checks.
//!
//!     cargo run --example constructions

use lagrangia::hypergraph::construct::{
    balanced_blowup_t5, best_star, complete, k_rr, matching2, principal_star, star,
};
use lagrangia::io::write_hypergraph;

fn main() -> lagrangia::Result<()> {
    let m2 = matching2(3)?;
    let k33 = k_rr(3)?;
    println!(
        "M2(3): {} edges; its extension K33(3) has {} edges on {} vertices",
        m2.edge_count(),
        k33.edge_count(),
        k33.n()
    );
    println!("K33(3) covers every pair: {}", k33.covers_pairs());
    print!("{}", write_hypergraph(&k33));

    let k5 = complete(5, 3)?;
    println!("\nK5(3) intersecting: {}, common vertex: {:?}", k5.is_intersecting(), k5.common_vertex());

    let s = star(2, 6, 3)?;
    let part = s.star_partition().expect("stars have a star partition");
    println!("\nstar(2, 6, 3): {} edges, A = {:?}, B = {:?}", s.edge_count(), part.a_side, part.b_side);
    println!("principal star on 9 vertices: {} edges", principal_star(9, 3)?.edge_count());

    for n in [10, 20, 30] {
        let (a, edges) = best_star(n, 3)?;
        let t5 = balanced_blowup_t5(n)?;
        println!("n = {n}: best star has |A| = {a} and {edges} edges; balanced T5 blowup has {}", t5.edge_count());
    }
    Ok(())
}
