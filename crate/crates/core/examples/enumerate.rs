//! Counts maximal intersecting classes by ground set size.
//!
//!     cargo run --release --example enumerate -- 4 7

use std::time::Instant;

use lagrangia::families::{for_each_intersecting, EnumConfig};

fn main() -> lagrangia::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("integer argument"));
    let r = args.next().unwrap_or(3);
    let s = args.next().unwrap_or(2 * r - 1);
    let started = Instant::now();
    let mut per_s = vec![0usize; s + 1];
    let mut nonprincipal = 0;
    let stats = for_each_intersecting(&EnumConfig::new(r).max_ground(s), |g, _| {
        per_s[g.s()] += 1;
        if g.common_vertex().is_none() {
            nonprincipal += 1;
        }
    })?;
    println!(
        "r = {r}, ground sets up to {s}: {} classes ({nonprincipal} non-principal), {:.1?}",
        stats.classes,
        started.elapsed()
    );
    for (k, c) in per_s.iter().enumerate().skip(1) {
        println!("  s = {k}: {c}");
    }
    println!("{} search nodes, complete {}", stats.nodes, stats.complete);
    Ok(())
}
