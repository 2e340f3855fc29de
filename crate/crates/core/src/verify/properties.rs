//! Smaller structural facts: chains reduce to permutations, the negative-sum
//! identity, the root-removal recursions and the extension-labeling count.

use std::collections::HashMap;

use num_bigint::BigInt;

use super::{CheckReport, Witness};
use crate::error::{Error, Result};
use crate::forest::{linear_extensions, signed_words, Forest, SignMode};
use crate::formulas;
use crate::poly::{q_factorial, BiPoly};
use crate::stats::{self, ForestStat, PermStat};

fn record(failure: &mut Option<Witness>, word: &[i32], detail: impl FnOnce() -> String) {
    if failure.is_none() {
        *failure = Some(Witness::Labeling {
            labeling: word.to_vec(),
            detail: detail(),
        });
    }
}

/// The permutation statistic a forest statistic reduces to on chains.
fn chain_counterpart(stat: ForestStat) -> PermStat {
    match stat {
        ForestStat::Inv => PermStat::Inv,
        ForestStat::Maj => PermStat::Maj,
        ForestStat::N1 => PermStat::N1,
        ForestStat::N2 => PermStat::N2,
        ForestStat::InvB => PermStat::LenB,
        ForestStat::InvD => PermStat::LenD,
        ForestStat::Fmaj => PermStat::Fmaj,
        ForestStat::MajB => PermStat::MajB,
        ForestStat::P => PermStat::P,
        ForestStat::Rmaj => PermStat::Rmaj,
        ForestStat::Nmaj => PermStat::Nmaj,
        ForestStat::Dmaj => PermStat::Dmaj,
    }
}

/// On the chain of size `n`, every forest statistic of `w` equals the
/// matching permutation statistic of the labels read from leaf to root.
/// `t` indexes the statistic in [`ForestStat::ALL`].
pub fn check_chain_reduction(n: usize) -> CheckReport {
    let chain = Forest::chain(n);
    let mut lhs = BiPoly::zero();
    let mut rhs = BiPoly::zero();
    let mut failure = None;
    for w in signed_words(n, SignMode::Signed) {
        let word: Vec<i32> = w.iter().rev().copied().collect();
        for (k, &stat) in ForestStat::ALL.iter().enumerate() {
            if stat == ForestStat::InvD && !SignMode::EvenSigned.admits(&w) {
                continue;
            }
            let a = stat.eval(&chain, &w).expect("admissible labeling");
            let b = chain_counterpart(stat).eval(&word);
            lhs.add_term(k as u32, a, 1.into());
            rhs.add_term(k as u32, b, 1.into());
            if a != b {
                record(&mut failure, &w, || {
                    format!("{} = {a} but {} of {word:?} = {b}", stat.name(), chain_counterpart(stat).name())
                });
            }
        }
    }
    CheckReport::with_failure("chain-reduction", &chain, lhs, rhs, failure)
}

/// `−Σ_{σ_i < 0} σ_i = n1(σ) + n2(σ)` for every `σ ∈ B_n`. The report is
/// attached to the antichain, whose signed labelings are exactly `B_n`.
pub fn check_negative_sum(n: usize) -> CheckReport {
    let mut lhs = BiPoly::zero();
    let mut rhs = BiPoly::zero();
    let mut failure = None;
    for w in signed_words(n, SignMode::Signed) {
        let a = -w.iter().filter(|&&x| x < 0).sum::<i32>() as u32;
        let b = stats::n1(&w) + stats::n2(&w);
        lhs.add_term(0, a, 1.into());
        rhs.add_term(0, b, 1.into());
        if a != b {
            record(&mut failure, &w, || format!("negative sum {a}, n1 + n2 = {b}"));
        }
        if stats::len_d_negative_sum(&w) != stats::len_d(&w) {
            record(&mut failure, &w, || "the two forms of len_D differ".into());
        }
    }
    CheckReport::with_failure("negative-sum", &Forest::antichain(n), lhs, rhs, failure)
}

/// For a tree with root label `i > 0`: `inv_B(F,w) = inv_B(F′,w′) + n − i`;
/// with root label `−i`: `inv_B(F,w) = inv_B(F′,w′) + n − 1 + i`.
pub fn check_root_removal(forest: &Forest) -> Result<CheckReport> {
    let rest = forest
        .without_root()
        .ok_or_else(|| Error::InvalidArgument(format!("{forest} is not a tree")))?;
    let n = forest.len() as u32;
    let mut lhs = BiPoly::zero();
    let mut rhs = BiPoly::zero();
    let mut failure = None;
    for w in signed_words(forest.len(), SignMode::Signed) {
        let whole = stats::inv_b_forest(forest, &w);
        let base = stats::inv_b_forest(&rest, &w[1..]);
        let i = w[0].unsigned_abs();
        let predicted = if w[0] > 0 { base + n - i } else { base + n - 1 + i };
        lhs.add_term(0, whole, 1.into());
        rhs.add_term(0, predicted, 1.into());
        if whole != predicted {
            record(&mut failure, &w, || format!("inv_B = {whole}, recursion gives {predicted}"));
        }
    }
    Ok(CheckReport::with_failure(
        super::TheoremId::RootRemoval.name(),
        forest,
        lhs,
        rhs,
        failure,
    ))
}

/// Every `π ∈ S_n` is a linear extension of exactly `n!/∏ h_u` ordinary
/// labelings. Compares `Σ_π (#labelings) q^(maj π)` with `e(F) [n]!`.
pub fn check_extension_labeling_count(forest: &Forest) -> CheckReport {
    let n = forest.len();
    let mut counts: HashMap<Vec<i32>, u64> = HashMap::new();
    for w in signed_words(n, SignMode::Ordinary) {
        for pi in linear_extensions(forest, &w) {
            *counts.entry(pi).or_default() += 1;
        }
    }
    let expected = formulas::extension_count(forest);
    let mut lhs = BiPoly::zero();
    let mut failure = None;
    for pi in signed_words(n, SignMode::Ordinary) {
        let c = counts.get(&pi).copied().unwrap_or(0);
        lhs.add_term(0, stats::maj(&pi), BigInt::from(c));
        if BigInt::from(c) != expected {
            record(&mut failure, &pi, || format!("extension of {c} labelings, expected {expected}"));
        }
    }
    let rhs = q_factorial(n as u32).scale(expected);
    CheckReport::with_failure("extension-labeling-count", forest, lhs, rhs, failure)
}
