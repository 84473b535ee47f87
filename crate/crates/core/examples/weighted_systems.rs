//! Weighted intersecting systems: exact weights, sampling, compression and
//! deleting the last point.
//!
//!     cargo run --release --example weighted_systems

use lagrangia::io::{parse_wiss, write_wiss};
use lagrangia::util::rat_string;
use lagrangia::wiss::{
    compress_to_fixpoint, drop_last, monte_carlo_weight, optimize_weight, weight_system, WeightOptConfig, Wiss,
};

fn main() -> lagrangia::Result<()> {
    let w = parse_wiss("3 4 4\n3/10 1/4 1/5 1/10\n1 2\n1 3\n2 3\n1 2 4\n")?;
    let rep = weight_system(&w);
    for e in &rep.per_edge {
        println!("w({:?}) = {}", e.edge, e.exact.as_ref().map_or(e.weight.to_string(), rat_string));
    }
    println!("total {}", rat_string(&w.weight_exact()));

    let mc = monte_carlo_weight(&w, 1_000_000, 0)?;
    println!("Monte Carlo: {:.6} +- {:.6}", mc.estimate, mc.stderr);

    let c = Wiss::new(compress_to_fixpoint(w.system()), w.r(), w.dist().clone())?;
    println!("\nleft-compressed: total {}\n{}", rat_string(&c.weight_exact()), write_wiss(&c));

    match drop_last(&w) {
        Ok(d) => println!("without point 4: total {}", rat_string(&d.weight_exact())),
        Err(e) => println!("cannot drop point 4: {e}"),
    }

    let best = optimize_weight(w.system(), w.r(), &WeightOptConfig::default())?;
    println!("\nbest distribution: p = {:?}, p(inf) = {:.6}, weight {:.9}", best.p.p(), best.p.p_inf(), best.value);
    Ok(())
}
