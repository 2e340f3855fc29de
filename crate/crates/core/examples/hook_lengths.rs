// Parsing forests, hook lengths and enumeration by size.

use hookforest::{enumerate_forests, formulas, linear_extensions, Forest};

pub fn run() -> hookforest::Result<()> {
    let forest: Forest = "(()())()".parse()?;
    println!("forest {forest} has {} vertices", forest.len());
    println!("hook lengths (preorder): {:?}", &forest.hook_lengths()[..]);
    println!("parent array: {:?}", forest.to_parent_array());
    println!("n!/prod h = {}", formulas::extension_count(&forest));

    // the same forest given as a 1-based parent array
    let again = Forest::parse("[0,1,1,0]")?;
    assert_eq!(again, forest);

    let w = [4, 2, 3, 1];
    let ext = linear_extensions(&forest, &w);
    println!("{} linear extensions of {w:?}: {ext:?}", ext.len());

    for n in 0..=6 {
        println!("n = {n}: {} plane forests", enumerate_forests(n).count());
    }
    Ok(())
}

fn main() -> hookforest::Result<()> {
    run()
}
