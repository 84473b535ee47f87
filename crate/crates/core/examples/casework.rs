//! Exact checks behind the non-principal bound: constants, the two-point
//! systems, the no-repeat table and the r = 4 quartic.
//!
//!     cargo run --release --example casework

use lagrangia::certify::{
    case2_check, case3_large_r, case3_table, case4_quartic, case4_tail_bound, constants, CaseReport,
};
use lagrangia::util::{rat_f64, rat_string};

fn show(rep: &CaseReport) {
    println!(
        "{:16} {}  max {:.10}  bound {:.10}  margin {:.3e}",
        rep.case,
        if rep.passed { "ok  " } else { "FAIL" },
        rep.extremum,
        rat_f64(&rep.bound),
        rat_f64(&rep.margin)
    );
}

fn main() -> lagrangia::Result<()> {
    for r in 2..=6 {
        let k = constants(r)?;
        println!("r = {r}: L_r = {}, c_r = {}", rat_string(&k.l_r), rat_string(&k.c_r));
    }
    println!();
    for r in 4..=10 {
        show(&case2_check(r, 200_000)?);
    }
    let table = case3_table()?;
    show(&table);
    for row in &table.rows {
        println!("    {}: {} <= {}", row.label, rat_string(&row.value), rat_string(&row.bound));
    }
    show(&case3_large_r());
    show(&case4_quartic());
    show(&case4_tail_bound(1000, 0));
    Ok(())
}
