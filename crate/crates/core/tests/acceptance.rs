//! Acceptance criteria 1-12. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

use std::time::{Duration, Instant};

use hookforest::verify::{
    check_chain_reduction, check_mirror, check_negative_sum, check_psi, sweep, CheckReport,
    DEFAULT_DEGREE,
};
use hookforest::{check_theorem, counterexample_search, Counterexample, Forest, ForestStat, SignMode, TheoremId};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Box<dyn Fn() -> Outcome>);

/// Every report passes; otherwise the first failure.
fn all_pass(reports: &[CheckReport]) -> Outcome {
    match reports.iter().find(|r| !r.pass) {
        None => Ok(format!("{} checks", reports.len())),
        Some(r) => Err(r.to_string()),
    }
}

fn swept(max_n: usize, theorems: &[TheoremId], degree: u32) -> Outcome {
    let mut reports = Vec::new();
    for &t in theorems {
        reports.extend(sweep(max_n, t, None, degree).map_err(|e| e.to_string())?);
    }
    all_pass(&reports)
}

/// Identities over `S_n` or `B_n` for `n ≤ max_n`.
fn per_size(max_n: usize, theorems: &[TheoremId]) -> Outcome {
    let mut reports = Vec::new();
    for n in 0..=max_n {
        for &t in theorems {
            reports.push(check_theorem(&Forest::antichain(n), t).map_err(|e| e.to_string())?);
        }
    }
    all_pass(&reports)
}

fn within(limit: Duration, elapsed: Duration, outcome: Outcome) -> Outcome {
    let detail = outcome?;
    if elapsed > limit {
        return Err(format!("{detail}, took {elapsed:.2?} (limit {limit:?})"));
    }
    Ok(detail)
}

fn golden(name: &str) -> Counterexample {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    serde_json::from_str(&std::fs::read_to_string(path).expect("golden file")).expect("golden json")
}

fn counterexample(a: ForestStat, b: ForestStat, mode: SignMode, file: &str) -> Outcome {
    let c = counterexample_search(a.into(), b.into(), mode, 5, None)
        .map_err(|e| e.to_string())?
        .ok_or_else(|| format!("{} vs {}: no witness up to size 5", a.name(), b.name()))?;
    let size = Forest::parse(&c.forest).map_err(|e| e.to_string())?.len();
    if size > 5 || c.first == c.second {
        return Err(format!("bad witness {}", c.forest));
    }
    if c != golden(file) {
        return Err(format!("witness {} differs from {file}", c.forest));
    }
    Ok(format!("{} vs {} on {}", a.name(), b.name(), c.forest))
}

fn main() {
    use TheoremId::*;

    let criteria: Vec<Criterion> = vec![
        ("MacMahon: inv and maj over S_n, n <= 7, < 5 s", Box::new(|| {
            let start = Instant::now();
            let r = per_size(7, &[MahonianInv, MahonianMaj]);
            within(Duration::from_secs(5), start.elapsed(), r)
        })),
        ("maj and inv on ordinary labelings, n <= 6, < 30 s", Box::new(|| {
            let start = Instant::now();
            let r = swept(6, &[Bw, BwInv], DEFAULT_DEGREE);
            within(Duration::from_secs(30), start.elapsed(), r)
        })),
        ("len_B over B_n and len_D over D_n, n <= 7", Box::new(|| per_size(7, &[LenB, LenD]))),
        ("inv_B, fmaj, rmaj over signed labelings, n <= 5, < 60 s", Box::new(|| {
            let start = Instant::now();
            let r = swept(5, &[InvB, Fmaj, Rmaj], DEFAULT_DEGREE);
            within(Duration::from_secs(60), start.elapsed(), r)
        })),
        ("inv_D over even-signed labelings, n <= 5", Box::new(|| swept(5, &[InvD], DEFAULT_DEGREE))),
        ("bivariate (n1, inv_B) and (p, maj_B); D(-1, q) = 0, n <= 5", Box::new(|| {
            swept(5, &[BivariateInv, BivariateMajB, EvenOdd], DEFAULT_DEGREE)
        })),
        ("maj_B over linear extensions, every labeling, n <= 4", Box::new(|| swept(4, &[Le1], DEFAULT_DEGREE))),
        ("type-B partitions to degree 10: series, dec1, abf, shift, relation, gene1, n <= 3", Box::new(|| {
            swept(3, &[PartitionGf, Dec1, Abf, PartitionShift, Relation, Gene1], 10)
        })),
        ("psi and (n1, maj_R), (p, maj_B) over B_n, n <= 6; mirror, n <= 5", Box::new(|| {
            let mut reports: Vec<CheckReport> = (0..=6).map(|n| check_psi(&Forest::antichain(n))).collect();
            for n in 0..=5 {
                reports.extend(hookforest::enumerate_forests(n).map(|f| check_mirror(&f)));
            }
            all_pass(&reports)?;
            per_size(6, &[Reiner, Sbn])?;
            Ok(format!("{} psi/mirror checks", reports.len()))
        })),
        ("fmaj through the coset decomposition, n <= 4", Box::new(|| swept(4, &[CosetKey], DEFAULT_DEGREE))),
        ("nmaj vs inv_B and dmaj vs inv_D counterexamples, size <= 5", Box::new(|| {
            let a = counterexample(ForestStat::Nmaj, ForestStat::InvB, SignMode::Signed, "counterexample_nmaj.json")?;
            let b = counterexample(ForestStat::Dmaj, ForestStat::InvD, SignMode::EvenSigned, "counterexample_dmaj.json")?;
            Ok(format!("{a}; {b}"))
        })),
        ("chain reduction n <= 6, negative sum n <= 6, root removal n <= 5", Box::new(|| {
            let mut reports: Vec<CheckReport> = (0..=6).map(check_chain_reduction).collect();
            reports.extend((0..=6).map(check_negative_sum));
            let roots = sweep(5, RootRemoval, None, DEFAULT_DEGREE).map_err(|e| e.to_string())?;
            reports.extend(roots);
            all_pass(&reports)
        })),
    ];

    let mut failed = 0;
    for (i, (label, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS {:>2}. {label} ({detail}; {elapsed:.2?})", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2}. {label}\n{why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
