//! Lagrangians by ascent, by the exact symmetric solver, and for cliques.
//!
//!     cargo run --release --example lagrangian

use lagrangia::hypergraph::construct::{complete, k_rr, matching2, principal_star};
use lagrangia::lagrangian::{clique_lagrangian, maximize, orbit_exact, LagrangianConfig};
use lagrangia::util::rat_f64;

fn main() -> lagrangia::Result<()> {
    let cfg = LagrangianConfig::default();
    for (name, h) in
        [("K5(3)", complete(5, 3)?), ("M2(3)", matching2(3)?), ("K33(3)", k_rr(3)?), ("K7(4)", complete(7, 4)?)]
    {
        let res = maximize(&h, &cfg);
        println!("{name:7} lambda >= {:.12}  support {:?}  converged {}", res.value, res.support, res.converged);
    }

    let exact = clique_lagrangian(7, 4)?;
    println!("\nclique formula: lambda(K7(4)) = {exact} = {:.12}", rat_f64(&exact));

    // one hub and 39 leaves: two symmetry classes
    let s = principal_star(40, 4)?;
    let leaves: Vec<u32> = (2..=40).collect();
    let res = orbit_exact(&s, &[vec![1], leaves])?;
    println!(
        "principal star on 40 vertices: lambda in [{}, {}], hub weight {:.6}",
        res.certified_lower.as_ref().map_or(f64::NAN, rat_f64),
        res.certified_upper.as_ref().map_or(f64::NAN, rat_f64),
        res.point.weights()[0]
    );
    Ok(())
}
