//! Type-B `(F,w)`-partitions, `σ`-compatible maps and the identities that
//! connect them.
//!
//! A type-B partition is a map `f: V(F) → ℕ` with
//!
//! 1. `f(x) ≤ f(y)` whenever `x ≥_F y`,
//! 2. `f(x) < f(y)` whenever `x >_F y` and `w(x) < w(y)`,
//! 3. `f(u) ≥ 1` for every root `u` with `w(u) > 0`.
//!
//! Everything here enumerates partitions of bounded size `|f| ≤ N`, which
//! also bounds each value by `N`.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use super::{linext_maj_b, CheckReport, TheoremId, Witness};
use crate::error::{Error, Result};
use crate::forest::{decreasing_labeling, linear_extensions, Forest};
use crate::formulas;
use crate::poly::{geometric_series, BiPoly, Series};
use crate::stats;

/// Values of a partition map, in vertex order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PartitionMap(pub Vec<u32>);

impl PartitionMap {
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }
}

/// Whether `values` satisfies conditions (1)–(3) for `(forest, labeling)`.
pub fn is_type_b_partition(forest: &Forest, labeling: &[i32], values: &[u32]) -> bool {
    (0..forest.len()).all(|v| vertex_ok(forest, labeling, values, v, true))
}

/// Whether `values` weakly increases from roots toward leaves.
pub fn is_f_partition(forest: &Forest, values: &[u32]) -> bool {
    forest.comparable_pairs().all(|(a, d)| values[a] <= values[d])
}

/// Conditions involving `v` and its ancestors. With `type_b == false` only
/// condition (1) is tested.
fn vertex_ok(forest: &Forest, labeling: &[i32], values: &[u32], v: usize, type_b: bool) -> bool {
    let fv = values[v];
    let mut a = forest.parent(v);
    while let Some(x) = a {
        if values[x] > fv {
            return false;
        }
        if type_b && labeling[x] < labeling[v] && values[x] >= fv {
            return false;
        }
        a = forest.parent(x);
    }
    !(type_b && forest.is_root(v) && labeling[v] > 0 && fv == 0)
}

fn enumerate_bounded(
    forest: &Forest,
    labeling: &[i32],
    degree: u32,
    type_b: bool,
) -> Vec<PartitionMap> {
    fn rec(
        forest: &Forest,
        labeling: &[i32],
        type_b: bool,
        values: &mut Vec<u32>,
        budget: u32,
        out: &mut Vec<PartitionMap>,
    ) {
        let v = values.len();
        if v == forest.len() {
            out.push(PartitionMap(values.clone()));
            return;
        }
        for x in 0..=budget {
            values.push(x);
            if vertex_ok(forest, labeling, values, v, type_b) {
                rec(forest, labeling, type_b, values, budget - x, out);
            }
            values.pop();
        }
    }
    let mut out = Vec::new();
    rec(forest, labeling, type_b, &mut Vec::with_capacity(forest.len()), degree, &mut out);
    out
}

/// Every type-B partition with `|f| ≤ degree`, lexicographic by value vector.
pub fn enumerate_partitions(forest: &Forest, labeling: &[i32], degree: u32) -> Vec<PartitionMap> {
    enumerate_bounded(forest, labeling, degree, true)
}

/// Every `F`-partition (condition (1) only) with `|g| ≤ degree`.
pub fn enumerate_f_partitions(forest: &Forest, degree: u32) -> Vec<PartitionMap> {
    let dummy = vec![0; forest.len()];
    enumerate_bounded(forest, &dummy, degree, false)
}

fn size_series(maps: &[PartitionMap], degree: u32) -> Series {
    let mut counts: HashMap<(u32, u32), u64> = HashMap::new();
    for m in maps {
        *counts.entry((0, m.size())).or_default() += 1;
    }
    Series::new(&BiPoly::from_counts(counts), degree)
}

/// `Σ_{f ∈ A_B(F,w), |f| ≤ N} q^|f|`.
pub fn partition_lhs_series(forest: &Forest, labeling: &[i32], degree: u32) -> Series {
    size_series(&enumerate_partitions(forest, labeling, degree), degree)
}

/// Subtracts one on the subtree of every type-B descent. The result is an
/// `F`-partition `g` with `|f| = maj_B(F,w) + |g|`.
pub fn partition_shift(forest: &Forest, labeling: &[i32], f: &[u32]) -> Result<Vec<u32>> {
    if f.len() != forest.len() || !is_type_b_partition(forest, labeling, f) {
        return Err(Error::InvalidArgument(format!(
            "{f:?} is not a type-B partition for labeling {labeling:?}"
        )));
    }
    let mut g: Vec<i64> = f.iter().map(|&x| x as i64).collect();
    for u in stats::descents_b_forest(forest, labeling) {
        for x in forest.subtree(u) {
            g[x] -= 1;
        }
    }
    g.into_iter()
        .map(|x| {
            u32::try_from(x).map_err(|_| Error::InvalidArgument(format!("shift of {f:?} goes negative")))
        })
        .collect()
}

/// Conditions (i)–(iii); `values[i]` is the value assigned to `σ_i`.
pub fn sigma_compatible(sigma: &[i32], values: &[u32]) -> bool {
    if sigma.len() != values.len() {
        return false;
    }
    let n = sigma.len();
    for i in 0..n.saturating_sub(1) {
        if values[i] < values[i + 1] {
            return false;
        }
        if sigma[i] > sigma[i + 1] && values[i] == values[i + 1] {
            return false;
        }
    }
    !(n > 0 && sigma[n - 1] > 0 && values[n - 1] == 0)
}

/// Every `σ`-compatible sequence with sum `≤ degree`, built from the right.
fn compatible_sequences(sigma: &[i32], degree: u32) -> Vec<Vec<u32>> {
    fn rec(sigma: &[i32], i: usize, budget: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        // acc holds values for positions i+1..n in reverse
        let min = if i + 1 == sigma.len() {
            u32::from(sigma[i] > 0)
        } else {
            let next = *acc.last().expect("position to the right is set");
            next + u32::from(sigma[i] > sigma[i + 1])
        };
        for x in min..=budget {
            acc.push(x);
            if i == 0 {
                let mut seq = acc.clone();
                seq.reverse();
                out.push(seq);
            } else {
                rec(sigma, i - 1, budget - x, acc, out);
            }
            acc.pop();
        }
    }
    if sigma.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    rec(sigma, sigma.len() - 1, degree, &mut Vec::new(), &mut out);
    out
}

/// Vertex carrying each label.
fn vertex_of_label(labeling: &[i32]) -> HashMap<i32, usize> {
    labeling.iter().enumerate().map(|(v, &x)| (x, v)).collect()
}

/// `A_B(F,w)` is the disjoint union of the `σ`-compatible sets over the
/// linear extensions `σ`, checked for `|f| ≤ degree`.
pub fn check_decomposition_dec1(forest: &Forest, labeling: &[i32], degree: u32) -> CheckReport {
    let name = TheoremId::Dec1.name();
    let extensions = linear_extensions(forest, labeling);
    let vertex = vertex_of_label(labeling);
    let partitions = enumerate_partitions(forest, labeling, degree);
    let mut failure = None;

    for f in &partitions {
        let hits = extensions
            .iter()
            .filter(|sigma| {
                let along: Vec<u32> = sigma.iter().map(|x| f.0[vertex[x]]).collect();
                sigma_compatible(sigma, &along)
            })
            .count();
        if hits != 1 {
            failure = Some(Witness::Partition {
                labeling: labeling.to_vec(),
                values: f.0.clone(),
                detail: format!("compatible with {hits} linear extensions"),
            });
            break;
        }
    }

    let mut union = Vec::new();
    for sigma in &extensions {
        for seq in compatible_sequences(sigma, degree) {
            let mut values = vec![0u32; forest.len()];
            for (x, &val) in sigma.iter().zip(&seq) {
                values[vertex[x]] = val;
            }
            if failure.is_none() && !is_type_b_partition(forest, labeling, &values) {
                failure = Some(Witness::Partition {
                    labeling: labeling.to_vec(),
                    values: values.clone(),
                    detail: format!("compatible with {sigma:?} but not a type-B partition"),
                });
            }
            union.push(PartitionMap(values));
        }
    }

    let lhs = size_series(&partitions, degree).into_poly();
    let rhs = size_series(&union, degree).into_poly();
    CheckReport::with_failure(name, forest, lhs, rhs, failure)
}

/// Partition series against `q^(maj_B(F,w)) / ∏ (1 − q^(h_u))`.
pub fn check_partition_gf(forest: &Forest, labeling: &[i32], degree: u32) -> CheckReport {
    CheckReport::compare(
        TheoremId::PartitionGf.name(),
        forest,
        partition_lhs_series(forest, labeling, degree).into_poly(),
        formulas::rhs_partition_gf(forest, labeling, degree).into_poly(),
    )
}

/// Partition series against `(Σ_{σ ∈ L(F,w)} q^(maj_B σ)) ∏_{k ≤ n} 1/(1 − q^k)`.
pub fn check_partition_lemma(forest: &Forest, labeling: &[i32], degree: u32) -> CheckReport {
    let mut rhs = Series::new(&linext_maj_b(forest, labeling), degree);
    for k in 1..=forest.len() as u32 {
        rhs = rhs.mul(&geometric_series(k, degree).expect("k >= 1"));
    }
    CheckReport::compare(
        TheoremId::Abf.name(),
        forest,
        partition_lhs_series(forest, labeling, degree).into_poly(),
        rhs.into_poly(),
    )
}

/// `(Σ_σ q^(maj_B σ)) ∏_u (1 − q^(h_u)) = q^(maj_B(F,w)) ∏_{k ≤ n} (1 − q^k)`
/// as an exact polynomial identity.
pub fn check_partition_relation(forest: &Forest, labeling: &[i32]) -> CheckReport {
    let one_minus = |e: u32| &BiPoly::one() - &BiPoly::monomial(0, e, 1);
    let lhs: BiPoly = forest
        .hook_lengths()
        .iter()
        .map(|&h| one_minus(h))
        .fold(linext_maj_b(forest, labeling), |acc, p| &acc * &p);
    let majb = stats::maj_b_forest(forest, labeling);
    let rhs: BiPoly = (1..=forest.len() as u32)
        .map(one_minus)
        .fold(BiPoly::monomial(0, majb, 1), |acc, p| &acc * &p);
    CheckReport::compare(TheoremId::Relation.name(), forest, lhs, rhs)
}

/// The shift map is a size-respecting bijection from type-B partitions
/// with `|f| ≤ N` onto `F`-partitions with `|g| ≤ N − maj_B(F,w)`.
pub fn check_partition_shift(forest: &Forest, labeling: &[i32], degree: u32) -> CheckReport {
    let majb = stats::maj_b_forest(forest, labeling);
    let partitions = enumerate_partitions(forest, labeling, degree);
    let mut images = BTreeSet::new();
    let mut failure = None;
    let mut lhs = BiPoly::zero();
    for f in &partitions {
        lhs.add_term(0, f.size(), 1.into());
        let detail = match partition_shift(forest, labeling, &f.0) {
            Err(e) => Some(e.to_string()),
            Ok(g) if !is_f_partition(forest, &g) => Some(format!("image {g:?} is not an F-partition")),
            Ok(g) if f.size() != majb + g.iter().sum::<u32>() => {
                Some(format!("|f| = {} but maj_B + |g| = {}", f.size(), majb + g.iter().sum::<u32>()))
            }
            Ok(g) => {
                if images.insert(g.clone()) {
                    None
                } else {
                    Some(format!("image {g:?} hit twice"))
                }
            }
        };
        if let (Some(detail), None) = (detail, &failure) {
            failure = Some(Witness::Partition {
                labeling: labeling.to_vec(),
                values: f.0.clone(),
                detail,
            });
        }
    }
    let mut rhs = BiPoly::zero();
    if let Some(budget) = degree.checked_sub(majb) {
        let targets = enumerate_f_partitions(forest, budget);
        for g in &targets {
            rhs.add_term(0, g.size() + majb, 1.into());
            if failure.is_none() && !images.contains(&g.0) {
                failure = Some(Witness::Partition {
                    labeling: labeling.to_vec(),
                    values: g.0.clone(),
                    detail: "F-partition not in the image".into(),
                });
            }
        }
    }
    CheckReport::with_failure(TheoremId::PartitionShift.name(), forest, lhs, rhs, failure)
}

/// An all-negative labeling decreasing toward the leaves. Its type-B
/// partitions are exactly the `F`-partitions.
pub fn natural_negative_labeling(forest: &Forest) -> Vec<i32> {
    let n = forest.len() as i32;
    decreasing_labeling(forest).iter().map(|&x| x - n - 1).collect()
}

/// `F`-partitions against `1 / ∏ (1 − q^(h_u))`, both directly and through
/// the type-B partitions of the natural all-negative labeling.
pub fn check_forest_partitions(forest: &Forest, degree: u32) -> CheckReport {
    let direct = size_series(&enumerate_f_partitions(forest, degree), degree).into_poly();
    let rhs = formulas::rhs_forest_partitions(forest, degree).into_poly();
    let negative = natural_negative_labeling(forest);
    let via_b = partition_lhs_series(forest, &negative, degree).into_poly();
    let failure = (via_b != direct).then(|| Witness::Labeling {
        labeling: negative.clone(),
        detail: format!("type-B partitions give {via_b}, F-partitions give {direct}"),
    });
    CheckReport::with_failure(TheoremId::Gene1.name(), forest, direct, rhs, failure)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forest::{enumerate_forests, signed_words, SignMode};

    fn f(s: &str) -> Forest {
        Forest::parse(s).unwrap()
    }

    fn qp(c: &[i64]) -> BiPoly {
        BiPoly::from_q_coeffs(c.iter().copied())
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_partitions(&f("()"), &[1], 1), vec![PartitionMap(vec![1])]);
        assert_eq!(
            enumerate_partitions(&f("()"), &[-1], 1),
            vec![PartitionMap(vec![0]), PartitionMap(vec![1])]
        );
        // root 1, child 2: smallest member has size 3
        assert!(enumerate_partitions(&f("(())"), &[1, 2], 1).is_empty());
        assert_eq!(
            enumerate_partitions(&f("(())"), &[1, 2], 3),
            vec![PartitionMap(vec![1, 2])]
        );
    }

    #[test]
    fn enumeration_matches_filtered_box() {
        // independent route: every vector in {0..N}^n, filtered
        let forest = f("(()())");
        let n = 4u32;
        for w in signed_words(3, SignMode::Signed) {
            let mut brute = Vec::new();
            for a in 0..=n {
                for b in 0..=n {
                    for c in 0..=n {
                        let v = vec![a, b, c];
                        if a + b + c <= n && is_type_b_partition(&forest, &w, &v) {
                            brute.push(PartitionMap(v));
                        }
                    }
                }
            }
            assert_eq!(enumerate_partitions(&forest, &w, n), brute, "{w:?}");
        }
    }

    #[test]
    fn series_examples() {
        assert_eq!(partition_lhs_series(&f("()"), &[1], 3).into_poly(), qp(&[0, 1, 1, 1]));
        assert_eq!(partition_lhs_series(&f("()"), &[-1], 2).into_poly(), qp(&[1, 1, 1]));
        assert!(partition_lhs_series(&f("()()"), &[1, 2], 1).into_poly().is_zero());
    }

    #[test]
    fn shift_examples() {
        assert_eq!(partition_shift(&f("()"), &[1], &[1]).unwrap(), vec![0]);
        assert_eq!(partition_shift(&f("()"), &[-1], &[3]).unwrap(), vec![3]);
        assert_eq!(partition_shift(&f("(())"), &[1, 2], &[1, 2]).unwrap(), vec![0, 0]);
        assert!(partition_shift(&f("(())"), &[1, 2], &[0, 1]).is_err());
    }

    #[test]
    fn compatibility() {
        assert!(sigma_compatible(&[1], &[1]));
        assert!(!sigma_compatible(&[1], &[0]));
        assert!(sigma_compatible(&[-1], &[0]));
        assert!(sigma_compatible(&[2, -1], &[1, 0]));
        assert!(!sigma_compatible(&[2, -1], &[1, 1]));
        assert!(!sigma_compatible(&[-1, 2], &[0, 1]));
        assert!(sigma_compatible(&[], &[]));
        for seq in compatible_sequences(&[3, -1, 2], 6) {
            assert!(sigma_compatible(&[3, -1, 2], &seq));
        }
    }

    #[test]
    fn dec1_examples() {
        assert!(check_decomposition_dec1(&f("()"), &[1], 2).pass);
        assert!(check_decomposition_dec1(&f("()()"), &[1, -2], 2).pass);
        let r = check_decomposition_dec1(&f("(())"), &[2, -1], 3);
        assert!(r.pass, "{r}");
    }

    #[test]
    fn stanley_specialization() {
        for n in 0..=4 {
            for forest in enumerate_forests(n) {
                let w = natural_negative_labeling(&forest);
                assert!(stats::descents_b_forest(&forest, &w).is_empty());
                let r = check_forest_partitions(&forest, 8);
                assert!(r.pass, "{r}");
            }
        }
    }

    #[test]
    fn lemmas_on_one_forest() {
        let forest = f("(()())");
        for w in signed_words(3, SignMode::Signed) {
            for r in [
                check_partition_gf(&forest, &w, 8),
                check_partition_lemma(&forest, &w, 8),
                check_partition_relation(&forest, &w),
                check_partition_shift(&forest, &w, 8),
                check_decomposition_dec1(&forest, &w, 8),
            ] {
                assert!(r.pass, "{w:?}: {r}");
            }
        }
    }
}
