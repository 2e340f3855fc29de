// Type-B (F,w)-partitions, their series and the decomposition by linear
// extensions.

use hookforest::verify::{
    check_decomposition_dec1, check_partition_shift, enumerate_partitions, partition_lhs_series,
    partition_shift,
};
use hookforest::{formulas, Forest};

pub fn run() -> hookforest::Result<()> {
    let forest: Forest = "(()())".parse()?;
    let w = [2, -1, 3];
    let degree = 6;

    let maps = enumerate_partitions(&forest, &w, 4);
    println!("{} partitions of size <= 4 for {w:?}", maps.len());
    for f in maps.iter().take(5) {
        let g = partition_shift(&forest, &w, f.values())?;
        println!("  f = {:?} (|f| = {}), shifted {g:?}", f.values(), f.size());
    }

    let lhs = partition_lhs_series(&forest, &w, degree);
    let rhs = formulas::rhs_partition_gf(&forest, &w, degree);
    println!("series: {lhs}");
    println!("closed: {rhs}");
    assert_eq!(lhs, rhs);

    println!("{}", check_decomposition_dec1(&forest, &w, degree));
    println!("{}", check_partition_shift(&forest, &w, degree));
    Ok(())
}

fn main() -> hookforest::Result<()> {
    run()
}
