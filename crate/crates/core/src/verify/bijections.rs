//! The bijections `ψ` on `B_n`, the mirror map on `B_n(F)`, and the coset
//! decomposition `B_n = T_n · S_n`.

use std::collections::HashSet;

use super::{CheckReport, TheoremId, Witness};
use crate::forest::{decreasing_labeling, signed_words, Forest, SignMode, SignedLabeling};
use crate::poly::BiPoly;
use crate::stats::{self, SignedPermutation};

/// Reverses and negates the positive entries among their own positions,
/// and likewise the negative entries.
pub fn psi_bijection(sigma: &SignedPermutation) -> SignedPermutation {
    let mut out = sigma.to_vec();
    for positive in [true, false] {
        let mut positions: Vec<usize> = (0..sigma.len()).filter(|&i| (sigma[i] > 0) == positive).collect();
        positions.sort_by_key(|&i| sigma[i]);
        let k = positions.len();
        for s in 0..k {
            out[positions[s]] = -sigma[positions[k - 1 - s]];
        }
    }
    SignedPermutation::from_vec_unchecked(out)
}

/// `w′(u) = −sign(w(u)) · (n + 1 − |w(u)|)`.
pub fn mirror_bijection(forest: &Forest, labeling: &SignedLabeling) -> SignedLabeling {
    let n = forest.len() as i32;
    let values = labeling
        .iter()
        .map(|&x| -x.signum() * (n + 1 - x.abs()))
        .collect();
    SignedLabeling::new(values).expect("mirror of a signed labeling")
}

/// `σ = τ π` with `τ` the increasing rearrangement of `σ` and `π ∈ S_n`.
pub fn coset_decompose(sigma: &SignedPermutation) -> (SignedPermutation, SignedPermutation) {
    let mut tau = sigma.to_vec();
    tau.sort_unstable();
    let pi = sigma
        .iter()
        .map(|x| tau.binary_search(x).expect("value of sigma") as i32 + 1)
        .collect();
    (
        SignedPermutation::from_vec_unchecked(tau),
        SignedPermutation::from_vec_unchecked(pi),
    )
}

/// `T_n`: the `2^n` signed permutations with increasing entries, in
/// lexicographic order.
pub fn increasing_signed_words(n: usize) -> Vec<SignedPermutation> {
    let mut out: Vec<Vec<i32>> = (0u64..1 << n)
        .map(|mask| {
            let mut w: Vec<i32> = (1..=n as i32)
                .map(|x| if mask >> (x - 1) & 1 == 1 { -x } else { x })
                .collect();
            w.sort_unstable();
            w
        })
        .collect();
    out.sort();
    out.into_iter().map(SignedPermutation::from_vec_unchecked).collect()
}

fn record(failure: &mut Option<Witness>, word: &[i32], detail: impl FnOnce() -> String) {
    if failure.is_none() {
        *failure = Some(Witness::Labeling {
            labeling: word.to_vec(),
            detail: detail(),
        });
    }
}

/// Over all of `B_n` with `n = |F|`: `(p, maj_B)` against `(n1, maj_R)`
/// through `ψ`, pointwise, plus involution and injectivity.
pub fn check_psi(forest: &Forest) -> CheckReport {
    let n = forest.len();
    let mut lhs = BiPoly::zero();
    let mut rhs = BiPoly::zero();
    let mut images = HashSet::new();
    let mut failure = None;
    for word in signed_words(n, SignMode::Signed) {
        let sigma = SignedPermutation::from_vec_unchecked(word);
        let tau = psi_bijection(&sigma);
        let (p, mb) = (stats::p(&sigma), stats::maj_b(&sigma));
        let (n1, mr) = (stats::n1(&tau), stats::maj_r(&tau));
        lhs.add_term(p, mb, 1.into());
        rhs.add_term(n1, mr, 1.into());
        if (p, mb) != (n1, mr) {
            record(&mut failure, &sigma, || {
                format!("psi gives {tau}: (p, maj_B) = ({p}, {mb}) but (n1, maj_R) = ({n1}, {mr})")
            });
        }
        if psi_bijection(&tau) != sigma {
            record(&mut failure, &sigma, || "psi is not an involution here".into());
        }
        if !images.insert(tau.clone()) {
            record(&mut failure, &sigma, || format!("image {tau} hit twice"));
        }
    }
    CheckReport::with_failure(TheoremId::Psi.name(), forest, lhs, rhs, failure)
}

/// Over `B_n(F)`: the mirror map is an involution with `rmaj(w) = fmaj(w′)`,
/// `maj_B(w) = maj(w′) + p(w)` and `p(w) = n1(w′)`.
pub fn check_mirror(forest: &Forest) -> CheckReport {
    let mut lhs = BiPoly::zero();
    let mut rhs = BiPoly::zero();
    let mut failure = None;
    for word in signed_words(forest.len(), SignMode::Signed) {
        let w = SignedLabeling::new(word).expect("signed word");
        let m = mirror_bijection(forest, &w);
        let rmaj = stats::rmaj_forest(forest, &w);
        let fmaj = stats::fmaj_forest(forest, &m);
        lhs.add_term(0, rmaj, 1.into());
        rhs.add_term(0, fmaj, 1.into());
        let majb = stats::maj_b_forest(forest, &w);
        let maj = stats::maj_forest(forest, &m);
        let p = stats::p(&w);
        let n1 = stats::n1(&m);
        if mirror_bijection(forest, &m) != w {
            record(&mut failure, &w, || "mirror is not an involution here".into());
        } else if rmaj != fmaj {
            record(&mut failure, &w, || format!("rmaj = {rmaj} but fmaj(w') = {fmaj}"));
        } else if majb != maj + p {
            record(&mut failure, &w, || format!("maj_B = {majb} but maj(w') + p = {}", maj + p));
        } else if p != n1 {
            record(&mut failure, &w, || format!("p = {p} but n1(w') = {n1}"));
        }
    }
    CheckReport::with_failure(TheoremId::Mirror.name(), forest, lhs, rhs, failure)
}

/// For every ordinary `w` and every `τ ∈ T_n(F)`: `τw` has the descents of
/// `w`, `n1(τw) = n1(τ)`, and `fmaj(τw) = 2 maj(w) + n1(τ)`. The pairs
/// `(τ, w)` cover `B_n(F)` exactly once.
pub fn check_fmaj_coset_identity(forest: &Forest) -> CheckReport {
    let n = forest.len();
    let w0 = decreasing_labeling(forest);
    // σ_i = w(vertex with w0 = i)
    let mut vertex_of = vec![0; n];
    for (v, &x) in w0.iter().enumerate() {
        vertex_of[x as usize - 1] = v;
    }
    let as_word = |w: &[i32]| -> Vec<i32> { vertex_of.iter().map(|&v| w[v]).collect() };

    let tn = increasing_signed_words(n);
    let mut lhs = BiPoly::zero();
    let mut rhs = BiPoly::zero();
    let mut seen = HashSet::new();
    let mut failure = None;
    for w in signed_words(n, SignMode::Ordinary) {
        let des = stats::descents_forest(forest, &w);
        let maj = stats::maj_forest(forest, &w);
        for tau in &tn {
            let tw: Vec<i32> = w.iter().map(|&x| tau[x as usize - 1]).collect();
            let n1_tau = stats::n1(tau);
            let fmaj = stats::fmaj_forest(forest, &tw);
            lhs.add_term(0, fmaj, 1.into());
            rhs.add_term(0, 2 * maj + n1_tau, 1.into());
            if stats::descents_forest(forest, &tw) != des {
                record(&mut failure, &tw, || format!("descents differ from those of {w:?}"));
            }
            if stats::n1(&tw) != n1_tau {
                record(&mut failure, &tw, || format!("n1 differs from n1 of {tau}"));
            }
            let (t2, pi) = coset_decompose(&SignedPermutation::from_vec_unchecked(as_word(&tw)));
            if &t2 != tau || *pi != as_word(&w)[..] {
                record(&mut failure, &tw, || format!("decomposes as ({t2}, {pi})"));
            }
            if !seen.insert(tw.clone()) {
                record(&mut failure, &tw, || "reached by two pairs".into());
            }
        }
    }
    if failure.is_none() && seen.len() as u128 != SignMode::Signed.count(n) {
        failure = Some(Witness::Labeling {
            labeling: Vec::new(),
            detail: format!("pairs cover {} of {} signed labelings", seen.len(), SignMode::Signed.count(n)),
        });
    }
    CheckReport::with_failure(TheoremId::CosetKey.name(), forest, lhs, rhs, failure)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(v: &[i32]) -> SignedPermutation {
        SignedPermutation::new(v.to_vec()).unwrap()
    }

    fn f(s: &str) -> Forest {
        Forest::parse(s).unwrap()
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi_bijection(&sp(&[1])), sp(&[-1]));
        assert_eq!(psi_bijection(&sp(&[-1])), sp(&[1]));
        assert_eq!(psi_bijection(&sp(&[2, -1])), sp(&[-2, 1]));
        assert_eq!(stats::maj_b(&[2, -1]), stats::maj_r(&[-2, 1]));
        assert_eq!(psi_bijection(&sp(&[3, 1, 2])), sp(&[-1, -3, -2]));
    }

    #[test]
    fn mirror_examples() {
        let w = SignedLabeling::new(vec![1]).unwrap();
        assert_eq!(*mirror_bijection(&f("()"), &w), vec![-1]);
        // root 2, child 1
        let w = SignedLabeling::new(vec![2, 1]).unwrap();
        let m = mirror_bijection(&f("(())"), &w);
        assert_eq!(*m, vec![-1, -2]);
        assert_eq!(stats::rmaj_forest(&f("(())"), &w), 2);
        assert_eq!(stats::fmaj_forest(&f("(())"), &m), 2);
    }

    #[test]
    fn coset_examples() {
        assert_eq!(coset_decompose(&sp(&[1, 2])), (sp(&[1, 2]), sp(&[1, 2])));
        assert_eq!(coset_decompose(&sp(&[2, -1])), (sp(&[-1, 2]), sp(&[2, 1])));
        assert_eq!(coset_decompose(&sp(&[-2, -1])), (sp(&[-2, -1]), sp(&[1, 2])));
        assert_eq!(increasing_signed_words(0).len(), 1);
        assert_eq!(increasing_signed_words(3).len(), 8);
        assert_eq!(increasing_signed_words(1), vec![sp(&[-1]), sp(&[1])]);
    }

    #[test]
    fn checks_pass_on_small_forests() {
        for s in ["", "()", "(())", "()()", "(()())", "((()))()"] {
            let forest = f(s);
            for r in [check_psi(&forest), check_mirror(&forest), check_fmaj_coset_identity(&forest)] {
                assert!(r.pass, "{r}");
            }
        }
    }

    #[test]
    fn coset_pair_counts() {
        for (s, pairs) in [("()", 2), ("(())", 8), ("(()())", 48)] {
            let r = check_fmaj_coset_identity(&f(s));
            assert_eq!(r.lhs.eval_at_one(), pairs.into());
        }
    }
}
