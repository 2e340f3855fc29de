//! Signed labeled plane forests, their permutation statistics, and exact
//! checks of the q-hook length formulas they satisfy.
//!
//! ```
//! use hookforest::{distribution, formulas, Forest, ForestStat, SignMode};
//!
//! let forest: Forest = "(()())".parse().unwrap();
//! let inv_b = distribution(&forest, ForestStat::InvB.into(), SignMode::Signed, None).unwrap();
//! assert_eq!(inv_b, formulas::rhs_inv_b(&forest));
//! ```

pub mod cli;
pub mod error;
pub mod forest;
pub mod formulas;
pub mod poly;
pub mod stats;
pub mod verify;

pub use error::{Error, Result};
pub use forest::{
    decreasing_labeling, enumerate_forests, enumerate_labelings, linear_extensions, signed_words,
    Forest, HookVector, SignMode, SignedLabeling, Vertex,
};
pub use poly::{geometric_series, q_factorial, q_number, BiPoly, Series};
pub use stats::{ForestStat, PermStat, SignedPermutation, StatId};
pub use verify::{
    check_theorem, check_theorem_with, counterexample_search, distribution, sweep, CheckReport,
    Counterexample, TheoremId, Witness,
};
