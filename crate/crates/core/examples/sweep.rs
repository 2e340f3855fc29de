// Checking identities over every forest up to a size, in parallel.

use hookforest::verify::{failures, sweep, DEFAULT_DEGREE};
use hookforest::TheoremId;

pub fn run() -> hookforest::Result<()> {
    for theorem in [TheoremId::InvB, TheoremId::EvenOdd, TheoremId::RootRemoval, TheoremId::Gene1] {
        let reports = sweep(4, theorem, Some(2), DEFAULT_DEGREE)?;
        println!("{theorem}: {} forests, {} failed", reports.len(), failures(&reports));
    }

    let reports = sweep(3, TheoremId::PartitionGf, None, 8)?;
    for r in &reports {
        let name = if r.forest.is_empty() { "(empty)" } else { &r.forest };
        println!("{} {name}", if r.pass { "PASS" } else { "FAIL" });
    }
    Ok(())
}

fn main() -> hookforest::Result<()> {
    run()
}
