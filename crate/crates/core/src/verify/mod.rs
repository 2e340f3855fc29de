//! Brute-force distributions and identity checks.
//!
//! Every check compares a left-hand side computed by exhaustive enumeration
//! with an independently computed right-hand side and returns a
//! [`CheckReport`]. Sweeps fan the per-forest checks out over a rayon pool
//! and return reports in canonical forest order.

mod bijections;
mod partitions;
mod properties;
mod search;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forest::{enumerate_forests, signed_words, Forest, SignMode};
use crate::formulas;
use crate::poly::BiPoly;
use crate::stats::{self, PermStat, StatId};

pub use bijections::{
    check_fmaj_coset_identity, check_mirror, check_psi, coset_decompose, increasing_signed_words,
    mirror_bijection, psi_bijection,
};
pub use partitions::{
    check_decomposition_dec1, check_forest_partitions, check_partition_gf, check_partition_lemma,
    check_partition_relation, check_partition_shift, enumerate_f_partitions, enumerate_partitions,
    is_f_partition, is_type_b_partition, natural_negative_labeling, partition_lhs_series,
    partition_shift, sigma_compatible, PartitionMap,
};
pub use properties::{
    check_chain_reduction, check_extension_labeling_count, check_negative_sum, check_root_removal,
};
pub use search::{counterexample_search, Counterexample};

/// Default truncation degree for partition series.
pub const DEFAULT_DEGREE: u32 = 10;

/// Why a check failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// First monomial, in `(t, q)` order, whose coefficients differ.
    Coefficient {
        t: u32,
        q: u32,
        lhs: String,
        rhs: String,
    },
    /// A labeling or word for which a per-item identity fails.
    Labeling { labeling: Vec<i32>, detail: String },
    /// A partition map, in vertex order.
    Partition {
        labeling: Vec<i32>,
        values: Vec<u32>,
        detail: String,
    },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Coefficient { t, q, lhs, rhs } => {
                write!(f, "coefficient of t^{t} q^{q}: lhs {lhs}, rhs {rhs}")
            }
            Witness::Labeling { labeling, detail } => write!(f, "labeling {labeling:?}: {detail}"),
            Witness::Partition { labeling, values, detail } => {
                write!(f, "labeling {labeling:?}, partition {values:?}: {detail}")
            }
        }
    }
}

/// Outcome of one verification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub theorem: String,
    pub forest: String,
    pub lhs: BiPoly,
    pub rhs: BiPoly,
    pub pass: bool,
    pub witness: Option<Witness>,
}

impl CheckReport {
    /// Passes iff the two polynomials agree coefficientwise.
    pub fn compare(theorem: impl Into<String>, forest: &Forest, lhs: BiPoly, rhs: BiPoly) -> Self {
        let witness = lhs.first_difference(&rhs).map(|((t, q), a, b)| Witness::Coefficient {
            t,
            q,
            lhs: a.to_string(),
            rhs: b.to_string(),
        });
        CheckReport {
            theorem: theorem.into(),
            forest: forest.render(),
            pass: witness.is_none(),
            lhs,
            rhs,
            witness,
        }
    }

    /// Like [`CheckReport::compare`], but an earlier per-item failure takes
    /// precedence.
    pub fn with_failure(
        theorem: impl Into<String>,
        forest: &Forest,
        lhs: BiPoly,
        rhs: BiPoly,
        failure: Option<Witness>,
    ) -> Self {
        let mut report = CheckReport::compare(theorem, forest, lhs, rhs);
        if let Some(w) = failure {
            report.pass = false;
            report.witness = Some(w);
        }
        report
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let forest = if self.forest.is_empty() { "(empty)" } else { &self.forest };
        writeln!(
            f,
            "{} {} on {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.theorem,
            forest
        )?;
        writeln!(f, "  lhs: {}", self.lhs)?;
        write!(f, "  rhs: {}", self.rhs)?;
        if let Some(w) = &self.witness {
            write!(f, "\n  witness: {w}")?;
        }
        Ok(())
    }
}

fn histogram_to_poly(counts: HashMap<(u32, u32), u64>) -> BiPoly {
    BiPoly::from_counts(counts)
}

/// `Σ t^a q^b` over every labeling of `forest` in `mode`, where
/// `(a, b) = weight(w)`.
pub fn distribution_by<F>(forest: &Forest, mode: SignMode, weight: F) -> BiPoly
where
    F: Fn(&[i32]) -> (u32, u32),
{
    words_distribution(forest.len(), mode, weight)
}

/// `Σ t^a q^b` over every word of length `n` in `mode`.
pub fn words_distribution<F>(n: usize, mode: SignMode, weight: F) -> BiPoly
where
    F: Fn(&[i32]) -> (u32, u32),
{
    let mut counts: HashMap<(u32, u32), u64> = HashMap::new();
    for w in signed_words(n, mode) {
        *counts.entry(weight(&w)).or_default() += 1;
    }
    histogram_to_poly(counts)
}

/// `Σ_w t^(aux(F,w)) q^(stat(F,w))` over the labelings of `forest` in `mode`.
pub fn distribution(
    forest: &Forest,
    stat: StatId,
    mode: SignMode,
    aux: Option<StatId>,
) -> Result<BiPoly> {
    let stat = stat.as_forest()?;
    let aux = aux.map(StatId::as_forest).transpose()?;
    for s in std::iter::once(stat).chain(aux) {
        if !s.supports(mode) {
            return Err(Error::IncompatibleMode {
                stat: s.name().into(),
                mode: mode.name().into(),
            });
        }
    }
    let mut counts: HashMap<(u32, u32), u64> = HashMap::new();
    for w in signed_words(forest.len(), mode) {
        let q = stat.eval(forest, &w)?;
        let t = match aux {
            Some(a) => a.eval(forest, &w)?,
            None => 0,
        };
        *counts.entry((t, q)).or_default() += 1;
    }
    Ok(histogram_to_poly(counts))
}

/// `Σ_σ t^(aux σ) q^(stat σ)` over signed words of length `n` in `mode`.
pub fn perm_distribution(n: usize, stat: PermStat, mode: SignMode, aux: Option<PermStat>) -> BiPoly {
    words_distribution(n, mode, |w| (aux.map_or(0, |a| a.eval(w)), stat.eval(w)))
}

/// Identities that can be checked for a given forest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremId {
    /// `Σ q^maj(F,w)` over ordinary labelings against `e(F) ∏ [h_u]`.
    Bw,
    /// `Σ q^inv(F,w)` over ordinary labelings against `e(F) ∏ [h_u]`.
    BwInv,
    InvB,
    InvD,
    Fmaj,
    Rmaj,
    BivariateInv,
    BivariateMajB,
    /// `maj_B` over linear extensions, for every signed labeling.
    Le1,
    /// Type-B partition series against the hook product, every labeling.
    PartitionGf,
    /// `(n1, maj_R)` over `B_n`, `n` the forest size.
    Reiner,
    /// `(p, maj_B)` over `B_n`.
    Sbn,
    LenB,
    LenD,
    MahonianInv,
    MahonianMaj,
    /// Even and odd `t`-slices of `Σ t^n1 q^(inv+n2)` agree.
    EvenOdd,
    /// Flag major index through the coset decomposition.
    CosetKey,
    Mirror,
    Psi,
    Dec1,
    /// Partition series against `maj_B` over extensions times `∏ 1/(1−q^k)`.
    Abf,
    PartitionShift,
    /// All `F`-partitions against `∏ 1/(1−q^(h_u))`.
    Gene1,
    /// Cross-multiplied form of the extension/partition relation.
    Relation,
    /// Root-removal recursion for `inv_B` (trees only).
    RootRemoval,
}

impl TheoremId {
    pub const ALL: [TheoremId; 26] = [
        TheoremId::Bw,
        TheoremId::BwInv,
        TheoremId::InvB,
        TheoremId::InvD,
        TheoremId::Fmaj,
        TheoremId::Rmaj,
        TheoremId::BivariateInv,
        TheoremId::BivariateMajB,
        TheoremId::Le1,
        TheoremId::PartitionGf,
        TheoremId::Reiner,
        TheoremId::Sbn,
        TheoremId::LenB,
        TheoremId::LenD,
        TheoremId::MahonianInv,
        TheoremId::MahonianMaj,
        TheoremId::EvenOdd,
        TheoremId::CosetKey,
        TheoremId::Mirror,
        TheoremId::Psi,
        TheoremId::Dec1,
        TheoremId::Abf,
        TheoremId::PartitionShift,
        TheoremId::Gene1,
        TheoremId::Relation,
        TheoremId::RootRemoval,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::Bw => "thm-bw",
            TheoremId::BwInv => "thm-bw-inv",
            TheoremId::InvB => "thm-inv-b",
            TheoremId::InvD => "thm-inv-d",
            TheoremId::Fmaj => "thm-fmaj",
            TheoremId::Rmaj => "thm-rmaj",
            TheoremId::BivariateInv => "thm-bivariate-inv",
            TheoremId::BivariateMajB => "thm-bivariate-majB",
            TheoremId::Le1 => "thm-le1",
            TheoremId::PartitionGf => "lem-partition-gf",
            TheoremId::Reiner => "eq-reiner",
            TheoremId::Sbn => "lem-sbn",
            TheoremId::LenB => "len-b",
            TheoremId::LenD => "len-d",
            TheoremId::MahonianInv => "mahonian-inv",
            TheoremId::MahonianMaj => "mahonian-maj",
            TheoremId::EvenOdd => "eq-even",
            TheoremId::CosetKey => "eq-key",
            TheoremId::Mirror => "bij-mirror",
            TheoremId::Psi => "bij-psi",
            TheoremId::Dec1 => "lem-dec1",
            TheoremId::Abf => "lem-abf",
            TheoremId::PartitionShift => "lem-shift",
            TheoremId::Gene1 => "eq-gene1",
            TheoremId::Relation => "eq-relation",
            TheoremId::RootRemoval => "prop-root-removal",
        }
    }

    /// Smallest forest size for which the identity is asserted.
    pub fn min_size(self) -> usize {
        match self {
            TheoremId::EvenOdd => 1,
            _ => 0,
        }
    }

    /// Whether the identity only concerns trees.
    pub fn trees_only(self) -> bool {
        matches!(self, TheoremId::RootRemoval)
    }

    /// The closed-form side for `forest`, where one exists independently of
    /// a labeling.
    pub fn closed_form(self, forest: &Forest) -> Option<BiPoly> {
        let n = forest.len();
        Some(match self {
            TheoremId::Bw | TheoremId::BwInv => formulas::rhs_bw(forest),
            TheoremId::InvB => formulas::rhs_inv_b(forest),
            TheoremId::InvD => formulas::rhs_inv_d(forest),
            TheoremId::Fmaj => formulas::rhs_fmaj(forest),
            TheoremId::Rmaj => formulas::rhs_rmaj(forest),
            TheoremId::BivariateInv => formulas::rhs_bivariate_inv(forest),
            TheoremId::BivariateMajB => formulas::rhs_bivariate_maj_b(forest),
            TheoremId::Reiner => formulas::rhs_reiner(n),
            TheoremId::Sbn => formulas::rhs_maj_b_perm(n),
            TheoremId::LenB => formulas::rhs_len_b(n),
            TheoremId::LenD => formulas::rhs_len_d(n),
            TheoremId::MahonianInv | TheoremId::MahonianMaj => formulas::rhs_mahonian(n),
            TheoremId::Gene1 => formulas::rhs_forest_partitions(forest, DEFAULT_DEGREE).into_poly(),
            _ => return None,
        })
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

fn compare_distribution(theorem: TheoremId, forest: &Forest, lhs: BiPoly) -> CheckReport {
    let rhs = theorem.closed_form(forest).expect("closed form exists");
    CheckReport::compare(theorem.name(), forest, lhs, rhs)
}

/// Runs one identity on `forest` with the default partition degree.
pub fn check_theorem(forest: &Forest, theorem: TheoremId) -> Result<CheckReport> {
    check_theorem_with(forest, theorem, DEFAULT_DEGREE)
}

/// Runs one identity on `forest`; `degree` bounds the partition series checks.
pub fn check_theorem_with(forest: &Forest, theorem: TheoremId, degree: u32) -> Result<CheckReport> {
    use crate::stats::ForestStat as S;
    use SignMode::*;

    let n = forest.len();
    let dist = |stat: S, mode: SignMode, aux: Option<S>| {
        distribution(forest, stat.into(), mode, aux.map(Into::into))
    };
    Ok(match theorem {
        TheoremId::Bw => compare_distribution(theorem, forest, dist(S::Maj, Ordinary, None)?),
        TheoremId::BwInv => compare_distribution(theorem, forest, dist(S::Inv, Ordinary, None)?),
        TheoremId::InvB => compare_distribution(theorem, forest, dist(S::InvB, Signed, None)?),
        TheoremId::InvD => compare_distribution(theorem, forest, dist(S::InvD, EvenSigned, None)?),
        TheoremId::Fmaj => compare_distribution(theorem, forest, dist(S::Fmaj, Signed, None)?),
        TheoremId::Rmaj => compare_distribution(theorem, forest, dist(S::Rmaj, Signed, None)?),
        TheoremId::BivariateInv => {
            compare_distribution(theorem, forest, dist(S::InvB, Signed, Some(S::N1))?)
        }
        TheoremId::BivariateMajB => {
            compare_distribution(theorem, forest, dist(S::MajB, Signed, Some(S::P))?)
        }
        TheoremId::Reiner => compare_distribution(
            theorem,
            forest,
            perm_distribution(n, PermStat::MajR, Signed, Some(PermStat::N1)),
        ),
        TheoremId::Sbn => compare_distribution(
            theorem,
            forest,
            perm_distribution(n, PermStat::MajB, Signed, Some(PermStat::P)),
        ),
        TheoremId::LenB => {
            compare_distribution(theorem, forest, perm_distribution(n, PermStat::LenB, Signed, None))
        }
        TheoremId::LenD => compare_distribution(
            theorem,
            forest,
            perm_distribution(n, PermStat::LenD, EvenSigned, None),
        ),
        TheoremId::MahonianInv => {
            compare_distribution(theorem, forest, perm_distribution(n, PermStat::Inv, Ordinary, None))
        }
        TheoremId::MahonianMaj => {
            compare_distribution(theorem, forest, perm_distribution(n, PermStat::Maj, Ordinary, None))
        }
        TheoremId::Le1 => check_linext(forest),
        TheoremId::PartitionGf => per_labeling(forest, theorem, |w| check_partition_gf(forest, w, degree)),
        TheoremId::Dec1 => per_labeling(forest, theorem, |w| check_decomposition_dec1(forest, w, degree)),
        TheoremId::Abf => per_labeling(forest, theorem, |w| check_partition_lemma(forest, w, degree)),
        TheoremId::PartitionShift => {
            per_labeling(forest, theorem, |w| check_partition_shift(forest, w, degree))
        }
        TheoremId::Relation => per_labeling(forest, theorem, |w| check_partition_relation(forest, w)),
        TheoremId::Gene1 => check_forest_partitions(forest, degree),
        TheoremId::EvenOdd => check_even_odd(forest),
        TheoremId::CosetKey => check_fmaj_coset_identity(forest),
        TheoremId::Mirror => check_mirror(forest),
        TheoremId::Psi => check_psi(forest),
        TheoremId::RootRemoval => check_root_removal(forest)?,
    })
}

/// Aggregates a per-labeling check over every signed labeling: the report
/// sums both sides and carries the first failing labeling's witness.
fn per_labeling<F>(forest: &Forest, theorem: TheoremId, check: F) -> CheckReport
where
    F: Fn(&[i32]) -> CheckReport,
{
    let mut lhs = BiPoly::zero();
    let mut rhs = BiPoly::zero();
    let mut failure = None;
    for w in signed_words(forest.len(), SignMode::Signed) {
        let r = check(&w);
        lhs += &r.lhs;
        rhs += &r.rhs;
        if !r.pass && failure.is_none() {
            failure = Some(match r.witness {
                Some(Witness::Coefficient { t, q, lhs, rhs }) => Witness::Labeling {
                    labeling: w.clone(),
                    detail: format!("{}: coefficient of t^{t} q^{q} is {lhs} vs {rhs}", r.theorem),
                },
                Some(other) => other,
                None => Witness::Labeling {
                    labeling: w.clone(),
                    detail: r.theorem.clone(),
                },
            });
        }
    }
    CheckReport::with_failure(theorem.name(), forest, lhs, rhs, failure)
}

/// `Σ_{σ ∈ L(F,w)} q^(maj_B σ)` for one labeling.
pub fn linext_maj_b(forest: &Forest, labeling: &[i32]) -> BiPoly {
    let mut counts: HashMap<(u32, u32), u64> = HashMap::new();
    for sigma in crate::forest::linear_extensions(forest, labeling) {
        *counts.entry((0, stats::maj_b(&sigma))).or_default() += 1;
    }
    histogram_to_poly(counts)
}

/// Extension identity for a single labeling.
pub fn check_linext_labeling(forest: &Forest, labeling: &[i32]) -> CheckReport {
    CheckReport::compare(
        TheoremId::Le1.name(),
        forest,
        linext_maj_b(forest, labeling),
        formulas::rhs_linext(forest, labeling),
    )
}

fn check_linext(forest: &Forest) -> CheckReport {
    per_labeling(forest, TheoremId::Le1, |w| check_linext_labeling(forest, w))
}

/// `D(t, q) = Σ t^n1 q^(inv+n2)` over all signed labelings.
pub fn inv_d_bivariate(forest: &Forest) -> BiPoly {
    distribution_by(forest, SignMode::Signed, |w| {
        (stats::n1(w), stats::inv_forest(forest, w) + stats::n2_forest(forest, w))
    })
}

/// Even-`t` and odd-`t` slices of [`inv_d_bivariate`] agree, i.e. it
/// vanishes at `t = −1`.
pub fn check_even_odd(forest: &Forest) -> CheckReport {
    let d = inv_d_bivariate(forest);
    let even = d.t_parity_slice(false);
    let odd = d.t_parity_slice(true);
    let failure = (!d.eval_t(-1).is_zero()).then(|| Witness::Labeling {
        labeling: Vec::new(),
        detail: format!("D(-1, q) = {}", d.eval_t(-1)),
    });
    CheckReport::with_failure(TheoremId::EvenOdd.name(), forest, even, odd, failure)
}

/// Runs `f` on a rayon pool with `jobs` threads, or on the global pool.
pub fn with_jobs<R, F>(jobs: Option<usize>, f: F) -> R
where
    R: Send,
    F: FnOnce() -> R + Send,
{
    match jobs {
        Some(j) if j > 0 => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .expect("thread pool")
            .install(f),
        _ => f(),
    }
}

/// Checks `theorem` on every forest with `theorem.min_size() ≤ n ≤ max_n`,
/// returning reports in canonical forest order.
pub fn sweep(max_n: usize, theorem: TheoremId, jobs: Option<usize>, degree: u32) -> Result<Vec<CheckReport>> {
    let forests: Vec<Forest> = (theorem.min_size()..=max_n)
        .flat_map(enumerate_forests)
        .filter(|f| !theorem.trees_only() || f.is_tree())
        .collect();
    with_jobs(jobs, || {
        forests
            .par_iter()
            .map(|f| check_theorem_with(f, theorem, degree))
            .collect()
    })
}

/// Number of failing reports.
pub fn failures(reports: &[CheckReport]) -> usize {
    reports.iter().filter(|r| !r.pass).count()
}
