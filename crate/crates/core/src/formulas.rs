//! Closed-form hook-length products.
//!
//! Every forest formula carries the factor `e(F) = n! / ∏ h_u`, the number
//! of linear extensions of `F`, computed by exact integer division.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::forest::Forest;
use crate::poly::{q_factorial, q_number, BiPoly, Series};

/// `n! / ∏ h_u`.
pub fn extension_count(forest: &Forest) -> BigInt {
    let fact: BigInt = (1..=forest.len() as u64).map(BigInt::from).product();
    let hooks: BigInt = forest.hook_lengths().iter().map(|&h| BigInt::from(h)).product();
    assert!(
        (&fact % &hooks).is_zero(),
        "hook product {hooks} does not divide {fact}"
    );
    fact / hooks
}

fn qn(m: u32) -> BiPoly {
    q_number(m).expect("hook lengths are positive")
}

/// `1 + t q^e`.
fn one_plus_t_q(e: u32) -> BiPoly {
    &BiPoly::one() + &BiPoly::monomial(1, e, 1)
}

fn hook_product(forest: &Forest, factor: impl Fn(u32) -> BiPoly) -> BiPoly {
    forest.hook_lengths().iter().map(|&h| factor(h)).product()
}

/// `e(F) ∏ [h_u]`.
pub fn rhs_bw(forest: &Forest) -> BiPoly {
    hook_product(forest, qn).scale(extension_count(forest))
}

/// `e(F) ∏ [2 h_u]`.
pub fn rhs_inv_b(forest: &Forest) -> BiPoly {
    hook_product(forest, |h| qn(2 * h)).scale(extension_count(forest))
}

/// Same product as [`rhs_inv_b`].
pub fn rhs_fmaj(forest: &Forest) -> BiPoly {
    rhs_inv_b(forest)
}

/// Same product as [`rhs_inv_b`].
pub fn rhs_rmaj(forest: &Forest) -> BiPoly {
    rhs_inv_b(forest)
}

/// `(n! / (2 ∏ h_u)) ∏ (1 + q^(h_u − 1)) [h_u]`; the empty forest gives 1.
pub fn rhs_inv_d(forest: &Forest) -> BiPoly {
    if forest.is_empty() {
        return BiPoly::one();
    }
    let doubled = hook_product(forest, |h| {
        &(&BiPoly::one() + &BiPoly::monomial(0, h - 1, 1)) * &qn(h)
    })
    .scale(extension_count(forest));
    doubled
        .div_exact_scalar(2)
        .expect("every leaf contributes a factor 2")
}

/// `e(F) ∏ (1 + t q^(h_u)) [h_u]`.
pub fn rhs_bivariate_inv(forest: &Forest) -> BiPoly {
    hook_product(forest, |h| &one_plus_t_q(h) * &qn(h)).scale(extension_count(forest))
}

/// `e(F) ∏ (1 + t q^(h_u − 1)) [h_u]`: the joint distribution of negative
/// labels and `inv + n2` over all signed labelings.
pub fn rhs_bivariate_inv_d(forest: &Forest) -> BiPoly {
    hook_product(forest, |h| &one_plus_t_q(h - 1) * &qn(h)).scale(extension_count(forest))
}

/// `e(F) (1 + t q)^n ∏ [h_u]`.
pub fn rhs_bivariate_maj_b(forest: &Forest) -> BiPoly {
    &one_plus_t_q(1).pow(forest.len() as u32) * &rhs_bw(forest)
}

/// `q^(maj_B(F,w)) [n]! / ∏ [h_u]`, by exact polynomial division.
pub fn rhs_linext(forest: &Forest, labeling: &[i32]) -> BiPoly {
    let majb = crate::stats::maj_b_forest(forest, labeling);
    let quotient = q_factorial(forest.len() as u32)
        .div_exact_q(&hook_product(forest, qn))
        .expect("the hook product divides [n]!");
    quotient.shift(0, majb)
}

/// `q^(maj_B(F,w)) / ∏ (1 − q^(h_u))` to `q`-degree `degree`.
pub fn rhs_partition_gf(forest: &Forest, labeling: &[i32], degree: u32) -> Series {
    let majb = crate::stats::maj_b_forest(forest, labeling);
    let mut s = Series::new(&BiPoly::monomial(0, majb, 1), degree);
    for &h in forest.hook_lengths().iter() {
        s = s.mul(&crate::poly::geometric_series(h, degree).expect("h >= 1"));
    }
    s
}

/// `1 / ∏ (1 − q^(h_u))`: generating function of all `F`-partitions.
pub fn rhs_forest_partitions(forest: &Forest, degree: u32) -> Series {
    forest.hook_lengths().iter().fold(Series::one(degree), |s, &h| {
        s.mul(&crate::poly::geometric_series(h, degree).expect("h >= 1"))
    })
}

/// `(1 + t q)^n [n]!`.
pub fn rhs_reiner(n: usize) -> BiPoly {
    &one_plus_t_q(1).pow(n as u32) * &q_factorial(n as u32)
}

/// Same polynomial as [`rhs_reiner`], read as the `(p, maj_B)` distribution.
pub fn rhs_maj_b_perm(n: usize) -> BiPoly {
    rhs_reiner(n)
}

/// `[2][4]…[2n]`.
pub fn rhs_len_b(n: usize) -> BiPoly {
    (1..=n as u32).map(|k| qn(2 * k)).product()
}

/// `[2][4]…[2n−2][n]`; 1 for `n = 0`.
pub fn rhs_len_d(n: usize) -> BiPoly {
    if n == 0 {
        return BiPoly::one();
    }
    let evens: BiPoly = (1..n as u32).map(|k| qn(2 * k)).product();
    &evens * &qn(n as u32)
}

/// `[n]!`.
pub fn rhs_mahonian(n: usize) -> BiPoly {
    q_factorial(n as u32)
}
