//! Best weight of every maximal intersecting class, compared against the
//! non-principal bound `L_r - c_r`.
//!
//!     cargo run --release --example gap_sweep -- 4

use std::time::Instant;

use lagrangia::families::{nonprincipal_gap_sweep, SweepConfig};
use lagrangia::util::rat_f64;

fn main() -> lagrangia::Result<()> {
    let r: usize = std::env::args().nth(1).map_or(Ok(4), |a| a.parse()).expect("r must be an integer");
    let started = Instant::now();
    let sweep = nonprincipal_gap_sweep(&SweepConfig::new(r))?;
    let sm = &sweep.summary;
    println!(
        "r = {r}: {} classes on ground sets up to {} ({} principal, {} not), {:.1?}",
        sm.classes,
        sm.max_ground,
        sm.principal_classes,
        sm.nonprincipal_classes,
        started.elapsed()
    );
    println!("L_r = {:.9}, L_r - c_r = {:.9}", rat_f64(&sm.l_r), rat_f64(&sm.bound));
    println!("best principal     {:.9}", sm.max_principal.unwrap_or(f64::NAN));
    println!("best non-principal {:.9}", sm.max_nonprincipal.unwrap_or(f64::NAN));
    println!("all within bound: {}, top class is the clique: {}", sm.all_within_bound, sm.top_is_clique);

    let mut np: Vec<_> = sweep.records.iter().filter(|x| !x.principal).collect();
    np.sort_by(|a, b| b.value.total_cmp(&a.value));
    println!("\nclosest non-principal classes:");
    for rec in np.iter().take(5) {
        println!("  s = {}  value {:.9}  gap {:.6}  {:?}", rec.s, rec.value, rec.gap, rec.members);
    }
    Ok(())
}
