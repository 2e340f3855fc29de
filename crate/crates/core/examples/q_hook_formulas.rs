// Closed-form hook products against brute-force distributions.

use hookforest::{check_theorem, enumerate_forests, formulas, TheoremId};

pub fn run() -> hookforest::Result<()> {
    let forest = "(()())".parse()?;
    println!("rhs_bw     = {}", formulas::rhs_bw(&forest));
    println!("rhs_inv_b  = {}", formulas::rhs_inv_b(&forest));
    println!("rhs_inv_d  = {}", formulas::rhs_inv_d(&forest));
    println!("bivariate  = {}", formulas::rhs_bivariate_inv(&forest));

    let theorems = [
        TheoremId::Bw,
        TheoremId::BwInv,
        TheoremId::InvB,
        TheoremId::InvD,
        TheoremId::Fmaj,
        TheoremId::Rmaj,
        TheoremId::BivariateInv,
        TheoremId::BivariateMajB,
        TheoremId::Le1,
    ];
    for theorem in theorems {
        let mut passed = 0;
        let mut total = 0;
        for n in 0..=3 {
            for f in enumerate_forests(n) {
                total += 1;
                if check_theorem(&f, theorem)?.pass {
                    passed += 1;
                }
            }
        }
        println!("{theorem}: {passed}/{total} forests");
        assert_eq!(passed, total);
    }

    let report = check_theorem(&forest, TheoremId::InvB)?;
    println!("{report}");
    Ok(())
}

fn main() -> hookforest::Result<()> {
    run()
}
