// Permutation and forest statistics, and their distributions.

use hookforest::stats::{self, ForestStat, PermStat};
use hookforest::{distribution, Forest, SignMode, SignedLabeling, StatId};

pub fn run() -> hookforest::Result<()> {
    let sigma = [3, -1, 2, -4];
    for stat in PermStat::ALL {
        println!("{:>5}({sigma:?}) = {}", stat.name(), stat.eval(&sigma));
    }

    let forest: Forest = "((())())".parse()?;
    let w = SignedLabeling::for_forest(&forest, vec![-2, 4, -1, 3], SignMode::Signed)?;
    println!("forest {forest}, labeling {w}");
    for stat in ForestStat::ALL {
        match stat.eval(&forest, &w) {
            Ok(v) => println!("{:>7} = {v}", stat.name()),
            Err(e) => println!("{:>7}: {e}", stat.name()),
        }
    }
    println!("descents: {:?}", stats::descents_forest(&forest, &w));

    let chain = Forest::chain(2);
    let nmaj = distribution(&chain, "nmaj-f".parse::<StatId>()?, SignMode::Signed, None)?;
    println!("nmaj on a 2-chain: {nmaj}");
    let joint = distribution(&chain, ForestStat::InvB.into(), SignMode::Signed, Some(ForestStat::N1.into()))?;
    println!("(n1, inv_B) on a 2-chain: {joint}");
    Ok(())
}

fn main() -> hookforest::Result<()> {
    run()
}
