//! Smallest forest on which two statistics are not equidistributed.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{distribution, with_jobs};
use crate::error::Result;
use crate::forest::{enumerate_forests, Forest, SignMode};
use crate::poly::BiPoly;
use crate::stats::StatId;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub forest: String,
    pub first: BiPoly,
    pub second: BiPoly,
}

/// Scans forests by size, then canonical order, and returns the first on
/// which the distributions of `a` and `b` differ.
pub fn counterexample_search(
    a: StatId,
    b: StatId,
    mode: SignMode,
    max_n: usize,
    jobs: Option<usize>,
) -> Result<Option<Counterexample>> {
    let forests: Vec<Forest> = (0..=max_n).flat_map(enumerate_forests).collect();
    let hit = with_jobs(jobs, || {
        forests
            .par_iter()
            .map(|f| -> Result<Option<Counterexample>> {
                let first = distribution(f, a, mode, None)?;
                let second = distribution(f, b, mode, None)?;
                Ok((first != second).then(|| Counterexample {
                    forest: f.render(),
                    first,
                    second,
                }))
            })
            .find_first(|r| !matches!(r, Ok(None)))
    });
    hit.transpose().map(Option::flatten)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stats::ForestStat;

    fn id(s: ForestStat) -> StatId {
        s.into()
    }

    #[test]
    fn equidistributed_pairs_have_none() {
        let r = counterexample_search(id(ForestStat::InvB), id(ForestStat::Fmaj), SignMode::Signed, 4, None);
        assert_eq!(r.unwrap(), None);
        let r = counterexample_search(id(ForestStat::InvB), id(ForestStat::InvB), SignMode::Signed, 4, None);
        assert_eq!(r.unwrap(), None);
    }

    #[test]
    fn nmaj_differs_from_inv_b() {
        let c = counterexample_search(id(ForestStat::Nmaj), id(ForestStat::InvB), SignMode::Signed, 4, Some(2))
            .unwrap()
            .unwrap();
        assert_eq!(c.forest, "((()()))");
        assert_ne!(c.first, c.second);
    }

    #[test]
    fn incompatible_requests_error() {
        assert!(counterexample_search(id(ForestStat::InvD), id(ForestStat::InvB), SignMode::Signed, 2, None).is_err());
        let perm: StatId = crate::stats::PermStat::Inv.into();
        assert!(counterexample_search(perm, id(ForestStat::InvB), SignMode::Signed, 2, None).is_err());
    }
}
