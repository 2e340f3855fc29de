// The bijection psi on signed permutations, the mirror map on labelings
// and the coset decomposition.

use hookforest::stats;
use hookforest::verify::{
    check_fmaj_coset_identity, check_mirror, check_psi, coset_decompose, mirror_bijection, psi_bijection,
};
use hookforest::{Forest, SignedLabeling, SignedPermutation};

pub fn run() -> hookforest::Result<()> {
    let sigma = SignedPermutation::new(vec![2, -3, 1, -4])?;
    let tau = psi_bijection(&sigma);
    println!("psi{sigma} = {tau}");
    println!("  (p, maj_B) = ({}, {})", stats::p(&sigma), stats::maj_b(&sigma));
    println!("  (n1, maj_R) = ({}, {})", stats::n1(&tau), stats::maj_r(&tau));

    let (t, pi) = coset_decompose(&sigma);
    println!("{sigma} = {t} . {pi}");

    let forest: Forest = "(())()".parse()?;
    let w = SignedLabeling::new(vec![3, -1, 2])?;
    let m = mirror_bijection(&forest, &w);
    println!("mirror of {w} is {m}");
    println!(
        "  rmaj(w) = {}, fmaj(w') = {}",
        stats::rmaj_forest(&forest, &w),
        stats::fmaj_forest(&forest, &m)
    );

    for r in [check_psi(&forest), check_mirror(&forest), check_fmaj_coset_identity(&forest)] {
        println!("{} {} on {}", if r.pass { "PASS" } else { "FAIL" }, r.theorem, r.forest);
        assert!(r.pass);
    }
    Ok(())
}

fn main() -> hookforest::Result<()> {
    run()
}
