//! Best weights of the families F(r, t, i) across i.
//!
//!     cargo run --release --example frankl_frontier -- 4 2

use lagrangia::families::conjecture_frontier;
use lagrangia::wiss::WeightOptConfig;

fn main() -> lagrangia::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("integer argument"));
    let r = args.next().unwrap_or(4);
    let t = args.next().unwrap_or(1);
    let fr = conjecture_frontier(r, t, &WeightOptConfig::default())?;
    println!("r = {r}, t = {t}");
    for row in &fr.rows {
        println!("  i = {}: {:3} members, best weight >= {:.9}", row.i, row.members, row.value);
    }
    println!("largest at i = {} ({:.9})", fr.best_i, fr.best_value);
    Ok(())
}
