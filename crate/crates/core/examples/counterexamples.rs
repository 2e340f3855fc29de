// nmaj and dmaj are not equidistributed with inv_B and inv_D on forests.

use hookforest::{counterexample_search, ForestStat, SignMode};

pub fn run() -> hookforest::Result<()> {
    let cases = [
        (ForestStat::Nmaj, ForestStat::InvB, SignMode::Signed),
        (ForestStat::Dmaj, ForestStat::InvD, SignMode::EvenSigned),
        (ForestStat::Fmaj, ForestStat::InvB, SignMode::Signed),
    ];
    for (a, b, mode) in cases {
        match counterexample_search(a.into(), b.into(), mode, 4, None)? {
            Some(c) => {
                println!("{} vs {} ({mode}): first differ on {}", a.name(), b.name(), c.forest);
                println!("  {}: {}", a.name(), c.first);
                println!("  {}: {}", b.name(), c.second);
            }
            None => println!("{} vs {} ({mode}): equidistributed up to size 4", a.name(), b.name()),
        }
    }
    Ok(())
}

fn main() -> hookforest::Result<()> {
    run()
}
