//! Runs every acceptance criterion and prints one line per criterion.
//! Exits non-zero if any criterion fails.

use swb_core::acceptance::run_all;

fn main() {
    let reports = run_all();
    for r in &reports {
        println!("{r}");
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    println!("{} passed, {failed} failed", reports.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
