//! Statistics on signed permutations and on signed labeled forests.
//!
//! Every function takes a raw word or label slice. Induced labelings on
//! subforests, whose absolute values are no longer `1..=n`, are accepted.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forest::{validate_word, write_word, Forest, SignMode, Vertex};

/// A word `σ_1…σ_n` whose absolute values form a permutation of `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i32>", into = "Vec<i32>")]
pub struct SignedPermutation(Vec<i32>);

impl SignedPermutation {
    pub fn new(values: Vec<i32>) -> Result<Self> {
        validate_word(&values)?;
        Ok(SignedPermutation(values))
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation((1..=n as i32).collect())
    }

    pub(crate) fn from_vec_unchecked(values: Vec<i32>) -> Self {
        debug_assert!(validate_word(&values).is_ok());
        SignedPermutation(values)
    }

    pub fn into_vec(self) -> Vec<i32> {
        self.0
    }
}

impl Deref for SignedPermutation {
    type Target = [i32];

    fn deref(&self) -> &[i32] {
        &self.0
    }
}

impl TryFrom<Vec<i32>> for SignedPermutation {
    type Error = Error;

    fn try_from(v: Vec<i32>) -> Result<Self> {
        SignedPermutation::new(v)
    }
}

impl From<SignedPermutation> for Vec<i32> {
    fn from(p: SignedPermutation) -> Self {
        p.0
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        write_word(f, &self.0)?;
        f.write_str(")")
    }
}

// ---------------------------------------------------------------------------
// permutation level

pub fn inv(w: &[i32]) -> u32 {
    let mut count = 0;
    for (i, &a) in w.iter().enumerate() {
        count += w[i + 1..].iter().filter(|&&b| a > b).count() as u32;
    }
    count
}

/// Positions `i` (1-based) with `σ_i > σ_{i+1}`, no sentinel.
pub fn descents(w: &[i32]) -> Vec<usize> {
    w.windows(2)
        .enumerate()
        .filter(|(_, p)| p[0] > p[1])
        .map(|(i, _)| i + 1)
        .collect()
}

pub fn maj(w: &[i32]) -> u32 {
    descents(w).into_iter().sum::<usize>() as u32
}

pub fn n1(w: &[i32]) -> u32 {
    w.iter().filter(|&&x| x < 0).count() as u32
}

/// Unordered pairs of distinct positions whose entries sum below zero.
pub fn n2(w: &[i32]) -> u32 {
    let mut count = 0;
    for (i, &a) in w.iter().enumerate() {
        count += w[i + 1..].iter().filter(|&&b| a + b < 0).count() as u32;
    }
    count
}

/// Coxeter length in `B_n`.
pub fn len_b(w: &[i32]) -> u32 {
    inv(w) + n1(w) + n2(w)
}

/// Coxeter length in `D_n`, as `inv + n2`.
pub fn len_d(w: &[i32]) -> u32 {
    inv(w) + n2(w)
}

/// `inv − Σ_{σ_i<0} σ_i − n1`, the second form of the `D_n` length.
pub fn len_d_negative_sum(w: &[i32]) -> u32 {
    let neg_sum: i64 = w.iter().filter(|&&x| x < 0).map(|&x| x as i64).sum();
    (inv(w) as i64 - neg_sum - n1(w) as i64) as u32
}

pub fn fmaj(w: &[i32]) -> u32 {
    2 * maj(w) + n1(w)
}

pub fn nmaj(w: &[i32]) -> u32 {
    maj(w) + n1(w) + n2(w)
}

pub fn dmaj(w: &[i32]) -> u32 {
    maj(w) + n2(w)
}

/// Rank in the order `1 < … < n < −n < … < −1`.
fn reiner_rank(x: i32) -> i64 {
    if x > 0 {
        x as i64
    } else {
        // negatives rank above every positive, -n lowest
        i64::from(i32::MAX) * 2 + x as i64 + 1
    }
}

/// Major index in Reiner's order with sentinel `σ_{n+1} = n`.
pub fn maj_r(w: &[i32]) -> u32 {
    let n = w.len();
    (0..n)
        .filter(|&i| {
            let next = if i + 1 < n { w[i + 1] } else { n as i32 };
            reiner_rank(w[i]) > reiner_rank(next)
        })
        .map(|i| i as u32 + 1)
        .sum()
}

/// Positions `i ∈ 1..=n` with `σ_i > σ_{i+1}` in the natural order, `σ_{n+1} = 0`.
pub fn descents_b(w: &[i32]) -> Vec<usize> {
    let n = w.len();
    (0..n)
        .filter(|&i| w[i] > if i + 1 < n { w[i + 1] } else { 0 })
        .map(|i| i + 1)
        .collect()
}

pub fn maj_b(w: &[i32]) -> u32 {
    descents_b(w).into_iter().sum::<usize>() as u32
}

pub fn p(w: &[i32]) -> u32 {
    w.iter().filter(|&&x| x > 0).count() as u32
}

/// `2·maj_B − p`.
pub fn rmaj(w: &[i32]) -> u32 {
    2 * maj_b(w) - p(w)
}

// ---------------------------------------------------------------------------
// forest level

/// Pairs `u >_F v` (u a strict ancestor of v) with `w(u) < w(v)`.
pub fn inv_forest(forest: &Forest, w: &[i32]) -> u32 {
    forest
        .comparable_pairs()
        .filter(|&(a, d)| w[a] < w[d])
        .count() as u32
}

/// Non-root vertices whose label exceeds their parent's.
pub fn descents_forest(forest: &Forest, w: &[i32]) -> Vec<Vertex> {
    (0..forest.len())
        .filter(|&u| forest.parent(u).is_some_and(|p| w[u] > w[p]))
        .collect()
}

pub fn maj_forest(forest: &Forest, w: &[i32]) -> u32 {
    descents_forest(forest, w).into_iter().map(|u| forest.hook(u)).sum()
}

pub fn n1_forest(_forest: &Forest, w: &[i32]) -> u32 {
    n1(w)
}

/// Pairs `u <_F v` with `w(u) + w(v) < 0`.
pub fn n2_forest(forest: &Forest, w: &[i32]) -> u32 {
    forest
        .comparable_pairs()
        .filter(|&(a, d)| w[a] + w[d] < 0)
        .count() as u32
}

pub fn inv_b_forest(forest: &Forest, w: &[i32]) -> u32 {
    inv_forest(forest, w) + n1(w) + n2_forest(forest, w)
}

/// Type-D inversion number; defined only for even-signed labelings.
pub fn inv_d_forest(forest: &Forest, w: &[i32]) -> Result<u32> {
    if n1(w) % 2 == 1 {
        return Err(Error::OddSignCount);
    }
    Ok(inv_forest(forest, w) + n2_forest(forest, w))
}

pub fn fmaj_forest(forest: &Forest, w: &[i32]) -> u32 {
    2 * maj_forest(forest, w) + n1(w)
}

/// Forest descents plus every root carrying a positive label.
pub fn descents_b_forest(forest: &Forest, w: &[i32]) -> Vec<Vertex> {
    (0..forest.len())
        .filter(|&u| match forest.parent(u) {
            Some(p) => w[u] > w[p],
            None => w[u] > 0,
        })
        .collect()
}

pub fn maj_b_forest(forest: &Forest, w: &[i32]) -> u32 {
    descents_b_forest(forest, w).into_iter().map(|u| forest.hook(u)).sum()
}

pub fn p_forest(_forest: &Forest, w: &[i32]) -> u32 {
    p(w)
}

pub fn rmaj_forest(forest: &Forest, w: &[i32]) -> u32 {
    2 * maj_b_forest(forest, w) - p(w)
}

pub fn nmaj_forest(forest: &Forest, w: &[i32]) -> u32 {
    maj_forest(forest, w) + n1(w) + n2_forest(forest, w)
}

pub fn dmaj_forest(forest: &Forest, w: &[i32]) -> u32 {
    maj_forest(forest, w) + n2_forest(forest, w)
}

// ---------------------------------------------------------------------------
// identifiers

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PermStat {
    Inv,
    Maj,
    N1,
    N2,
    LenB,
    LenD,
    Fmaj,
    Nmaj,
    MajR,
    MajB,
    P,
    Rmaj,
    Dmaj,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ForestStat {
    Inv,
    Maj,
    N1,
    N2,
    InvB,
    InvD,
    Fmaj,
    MajB,
    P,
    Rmaj,
    Nmaj,
    Dmaj,
}

impl PermStat {
    pub const ALL: [PermStat; 13] = [
        PermStat::Inv,
        PermStat::Maj,
        PermStat::N1,
        PermStat::N2,
        PermStat::LenB,
        PermStat::LenD,
        PermStat::Fmaj,
        PermStat::Nmaj,
        PermStat::MajR,
        PermStat::MajB,
        PermStat::P,
        PermStat::Rmaj,
        PermStat::Dmaj,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PermStat::Inv => "inv",
            PermStat::Maj => "maj",
            PermStat::N1 => "n1",
            PermStat::N2 => "n2",
            PermStat::LenB => "len-b",
            PermStat::LenD => "len-d",
            PermStat::Fmaj => "fmaj",
            PermStat::Nmaj => "nmaj",
            PermStat::MajR => "maj-r",
            PermStat::MajB => "maj-b",
            PermStat::P => "p",
            PermStat::Rmaj => "rmaj",
            PermStat::Dmaj => "dmaj",
        }
    }

    pub fn eval(self, w: &[i32]) -> u32 {
        match self {
            PermStat::Inv => inv(w),
            PermStat::Maj => maj(w),
            PermStat::N1 => n1(w),
            PermStat::N2 => n2(w),
            PermStat::LenB => len_b(w),
            PermStat::LenD => len_d(w),
            PermStat::Fmaj => fmaj(w),
            PermStat::Nmaj => nmaj(w),
            PermStat::MajR => maj_r(w),
            PermStat::MajB => maj_b(w),
            PermStat::P => p(w),
            PermStat::Rmaj => rmaj(w),
            PermStat::Dmaj => dmaj(w),
        }
    }
}

impl ForestStat {
    pub const ALL: [ForestStat; 12] = [
        ForestStat::Inv,
        ForestStat::Maj,
        ForestStat::N1,
        ForestStat::N2,
        ForestStat::InvB,
        ForestStat::InvD,
        ForestStat::Fmaj,
        ForestStat::MajB,
        ForestStat::P,
        ForestStat::Rmaj,
        ForestStat::Nmaj,
        ForestStat::Dmaj,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ForestStat::Inv => "inv-f",
            ForestStat::Maj => "maj-f",
            ForestStat::N1 => "n1-f",
            ForestStat::N2 => "n2-f",
            ForestStat::InvB => "inv-b",
            ForestStat::InvD => "inv-d",
            ForestStat::Fmaj => "fmaj-f",
            ForestStat::MajB => "maj-b-f",
            ForestStat::P => "p-f",
            ForestStat::Rmaj => "rmaj-f",
            ForestStat::Nmaj => "nmaj-f",
            ForestStat::Dmaj => "dmaj-f",
        }
    }

    /// Whether every labeling of `mode` lies in the statistic's domain.
    pub fn supports(self, mode: SignMode) -> bool {
        !matches!((self, mode), (ForestStat::InvD, SignMode::Signed))
    }

    pub fn eval(self, forest: &Forest, w: &[i32]) -> Result<u32> {
        Ok(match self {
            ForestStat::Inv => inv_forest(forest, w),
            ForestStat::Maj => maj_forest(forest, w),
            ForestStat::N1 => n1_forest(forest, w),
            ForestStat::N2 => n2_forest(forest, w),
            ForestStat::InvB => inv_b_forest(forest, w),
            ForestStat::InvD => inv_d_forest(forest, w)?,
            ForestStat::Fmaj => fmaj_forest(forest, w),
            ForestStat::MajB => maj_b_forest(forest, w),
            ForestStat::P => p_forest(forest, w),
            ForestStat::Rmaj => rmaj_forest(forest, w),
            ForestStat::Nmaj => nmaj_forest(forest, w),
            ForestStat::Dmaj => dmaj_forest(forest, w),
        })
    }
}

/// Any statistic, addressed by its kebab-case name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StatId {
    Perm(PermStat),
    Forest(ForestStat),
}

impl StatId {
    pub fn name(self) -> &'static str {
        match self {
            StatId::Perm(s) => s.name(),
            StatId::Forest(s) => s.name(),
        }
    }

    pub fn all() -> impl Iterator<Item = StatId> {
        PermStat::ALL
            .into_iter()
            .map(StatId::Perm)
            .chain(ForestStat::ALL.into_iter().map(StatId::Forest))
    }

    pub fn as_forest(self) -> Result<ForestStat> {
        match self {
            StatId::Forest(s) => Ok(s),
            StatId::Perm(s) => Err(Error::NotForestStatistic(s.name().into())),
        }
    }
}

impl fmt::Display for StatId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StatId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        // `inv-b-f` / `inv-d-f` are accepted as aliases of the forest names
        let key = match s {
            "inv-b-f" => "inv-b",
            "inv-d-f" => "inv-d",
            other => other,
        };
        StatId::all()
            .find(|id| id.name() == key)
            .ok_or_else(|| Error::UnknownStatistic(s.to_string()))
    }
}

impl From<PermStat> for StatId {
    fn from(s: PermStat) -> Self {
        StatId::Perm(s)
    }
}

impl From<ForestStat> for StatId {
    fn from(s: ForestStat) -> Self {
        StatId::Forest(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forest::signed_words;

    fn f(s: &str) -> Forest {
        Forest::parse(s).unwrap()
    }

    #[test]
    fn permutation_examples() {
        assert_eq!(inv(&[1, 2]), 0);
        assert_eq!(inv(&[2, 1]), 1);
        assert_eq!(inv(&[1, -2]), 1);

        assert_eq!(maj(&[1, 2]), 0);
        assert_eq!(maj(&[2, -1]), 1);
        assert_eq!(maj(&[-1, -2]), 1);

        assert_eq!((n1(&[1, 2]), n2(&[1, 2])), (0, 0));
        assert_eq!((n1(&[-2, 1]), n2(&[-2, 1])), (1, 1));
        assert_eq!((n1(&[-1, -2]), n2(&[-1, -2])), (2, 1));

        assert_eq!(len_b(&[1, 2, 3]), 0);
        assert_eq!(len_b(&[1, -2]), 3);
        assert_eq!(len_b(&[-1]), 1);

        assert_eq!(len_d(&[1, 2, 3]), 0);
        assert_eq!(len_d(&[-2, -1]), 1);
        assert_eq!(len_d(&[-1, -2]), 2);

        assert_eq!(fmaj(&[1, 2]), 0);
        assert_eq!(fmaj(&[-1, 2]), 1);
        assert_eq!(fmaj(&[2, -1]), 3);

        assert_eq!(nmaj(&[1, 2]), 0);
        assert_eq!(nmaj(&[1, -2]), 3);
        assert_eq!(nmaj(&[-1]), 1);

        assert_eq!(maj_r(&[1]), 0);
        assert_eq!(maj_r(&[-1]), 1);
        assert_eq!(maj_r(&[-2, 1]), 1);

        assert_eq!(maj_b(&[1]), 1);
        assert_eq!(maj_b(&[-1]), 0);
        assert_eq!(maj_b(&[2, -1]), 1);

        assert_eq!(p(&[1, 2]), 2);
        assert_eq!(p(&[-1, -2]), 0);
        assert_eq!(p(&[2, -1]), 1);

        assert_eq!(rmaj(&[-2, -1]), 0);
        assert_eq!(rmaj(&[2, 1]), 4);
        assert_eq!(rmaj(&[-1, 2]), 3);

        assert_eq!(dmaj(&[1, 2]), 0);
        assert_eq!(dmaj(&[-1, -2]), 2);
        assert_eq!(dmaj(&[2, 1]), 1);
    }

    #[test]
    fn reiner_order_spans_sizes() {
        // −n is above n and −1 is the maximum
        assert!(reiner_rank(3) < reiner_rank(-3));
        assert!(reiner_rank(-3) < reiner_rank(-1));
    }

    #[test]
    fn forest_examples() {
        let chain = f("(())");
        // labels in vertex order: root first
        assert_eq!(inv_forest(&chain, &[2, 1]), 0);
        assert_eq!(inv_forest(&chain, &[-2, 1]), 1);
        assert_eq!(inv_forest(&f("(()())"), &[3, 1, 2]), 0);

        assert_eq!(maj_forest(&chain, &[1, 2]), 1);
        assert_eq!(maj_forest(&chain, &[2, 1]), 0);
        assert_eq!(maj_forest(&f("(()())"), &[1, 2, 3]), 2);
        assert_eq!(descents_forest(&f("(()())"), &[1, 2, 3]), vec![1, 2]);

        assert_eq!(n2_forest(&f("(()())"), &[3, 1, 2]), 0);
        assert_eq!(n2_forest(&f("(()())"), &[-3, 2, -1]), 2);
        assert_eq!(n2_forest(&chain, &[-2, 1]), 1);

        assert_eq!(inv_b_forest(&f("()"), &[1]), 0);
        assert_eq!(inv_b_forest(&f("()"), &[-1]), 1);
        assert_eq!(inv_b_forest(&chain, &[-2, 1]), 3);

        assert_eq!(inv_d_forest(&f("()"), &[1]), Ok(0));
        assert_eq!(inv_d_forest(&chain, &[-2, -1]), Ok(2));
        assert_eq!(inv_d_forest(&chain, &[-1, -2]), Ok(1));
        assert_eq!(inv_d_forest(&chain, &[-1, 2]), Err(Error::OddSignCount));

        assert_eq!(fmaj_forest(&f("()"), &[1]), 0);
        assert_eq!(fmaj_forest(&f("()"), &[-1]), 1);
        assert_eq!(fmaj_forest(&chain, &[-1, -2]), 2);

        assert_eq!(maj_b_forest(&f("()"), &[1]), 1);
        assert_eq!(rmaj_forest(&f("()"), &[1]), 1);
        assert_eq!(rmaj_forest(&f("()"), &[-1]), 0);
        assert_eq!(maj_b_forest(&chain, &[2, -1]), 2);
        assert_eq!(p_forest(&chain, &[2, -1]), 1);
        assert_eq!(rmaj_forest(&chain, &[2, -1]), 3);
        assert_eq!(descents_b_forest(&chain, &[2, -1]), vec![0]);

        assert_eq!(nmaj_forest(&f("()"), &[1]), 0);
        assert_eq!(dmaj_forest(&f("()"), &[1]), 0);
        assert_eq!(nmaj_forest(&chain, &[-2, 1]), 3);
        assert_eq!(dmaj_forest(&chain, &[-2, -1]), 2);
    }

    #[test]
    fn negative_sum_identity_small() {
        for n in 0..=5 {
            for w in signed_words(n, SignMode::Signed) {
                let neg: i64 = w.iter().filter(|&&x| x < 0).map(|&x| -(x as i64)).sum();
                assert_eq!(neg, (n1(&w) + n2(&w)) as i64, "{w:?}");
                assert_eq!(len_d(&w), len_d_negative_sum(&w));
            }
        }
    }

    #[test]
    fn stat_ids_round_trip_through_names() {
        for id in StatId::all() {
            assert_eq!(id.name().parse::<StatId>().unwrap(), id);
        }
        assert_eq!("inv-b-f".parse::<StatId>().unwrap(), StatId::Forest(ForestStat::InvB));
        assert!("bogus".parse::<StatId>().is_err());
        assert!(StatId::Perm(PermStat::Inv).as_forest().is_err());
    }

    #[test]
    fn incompatible_mode() {
        assert!(!ForestStat::InvD.supports(SignMode::Signed));
        assert!(ForestStat::InvD.supports(SignMode::EvenSigned));
        assert!(ForestStat::Dmaj.supports(SignMode::Signed));
    }
}
