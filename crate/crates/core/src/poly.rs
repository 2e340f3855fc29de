//! Exact sparse polynomials in two variables `t` and `q` with
//! arbitrary-precision integer coefficients, and q-series truncated at a
//! fixed degree.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exponent pair `(t, q)`.
pub type Monomial = (u32, u32);

/// Canonical sparse polynomial: no zero coefficient is ever stored, and
/// terms iterate in `(t-exponent, q-exponent)` order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        BiPoly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        BiPoly::monomial(0, 0, c)
    }

    pub fn monomial(t: u32, q: u32, c: impl Into<BigInt>) -> Self {
        let mut p = BiPoly::zero();
        p.add_term(t, q, c.into());
        p
    }

    pub fn q() -> Self {
        BiPoly::monomial(0, 1, 1)
    }

    pub fn t() -> Self {
        BiPoly::monomial(1, 0, 1)
    }

    /// `Σ_k c_k q^k` from a dense coefficient list.
    pub fn from_q_coeffs<I, C>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        let mut p = BiPoly::zero();
        for (k, c) in coeffs.into_iter().enumerate() {
            p.add_term(0, k as u32, c.into());
        }
        p
    }

    /// Builds a polynomial from a histogram of exponent pairs.
    pub fn from_counts<I>(counts: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, u64)>,
    {
        let mut p = BiPoly::zero();
        for ((t, q), c) in counts {
            p.add_term(t, q, BigInt::from(c));
        }
        p
    }

    pub fn add_term(&mut self, t: u32, q: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((t, q)) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, t: u32, q: u32) -> BigInt {
        self.terms.get(&(t, q)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &BigInt)> {
        self.terms.iter().map(|(&m, c)| (m, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree_t(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.0).max()
    }

    pub fn degree_q(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.1).max()
    }

    pub fn is_univariate_q(&self) -> bool {
        self.terms.keys().all(|m| m.0 == 0)
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> BiPoly {
        let c = c.into();
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(&m, v)| (m, v * &c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> BiPoly {
        let mut base = self.clone();
        let mut acc = BiPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiplies by `t^a q^b`.
    pub fn shift(&self, a: u32, b: u32) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(&(t, q), v)| ((t + a, q + b), v.clone())).collect(),
        }
    }

    /// `q ↦ q²`.
    pub fn subst_q_squared(&self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(&(t, q), v)| ((t, 2 * q), v.clone())).collect(),
        }
    }

    /// `q ↦ q²` together with `t ↦ q⁻¹`: `t^a q^b ↦ q^(2b − a)`.
    pub fn subst_q_squared_t_inverse(&self) -> Result<BiPoly> {
        let mut out = BiPoly::zero();
        for (&(t, q), v) in &self.terms {
            let e = (2 * q as i64) - t as i64;
            if e < 0 {
                return Err(Error::NegativeExponent { t, q });
            }
            out.add_term(0, e as u32, v.clone());
        }
        Ok(out)
    }

    /// Substitutes an integer for `t`.
    pub fn eval_t(&self, value: i64) -> BiPoly {
        let value = BigInt::from(value);
        let mut out = BiPoly::zero();
        for (&(t, q), v) in &self.terms {
            out.add_term(0, q, v * num_traits::pow(value.clone(), t as usize));
        }
        out
    }

    /// Sum of coefficients whose `t`-exponent has the given parity, as a
    /// polynomial in `q`.
    pub fn t_parity_slice(&self, odd: bool) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(t, q), v) in &self.terms {
            if (t % 2 == 1) == odd {
                out.add_term(0, q, v.clone());
            }
        }
        out
    }

    /// Coefficients of `t^k` as a polynomial in `q`.
    pub fn t_slice(&self, k: u32) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(t, q), v) in &self.terms {
            if t == k {
                out.add_term(0, q, v.clone());
            }
        }
        out
    }

    /// Drops every term with `q`-exponent above `degree`.
    pub fn truncate_q(&self, degree: u32) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.1 <= degree)
                .map(|(&m, v)| (m, v.clone()))
                .collect(),
        }
    }

    /// Divides every coefficient by `d`, or returns `None` if any division
    /// leaves a remainder.
    pub fn div_exact_scalar(&self, d: impl Into<BigInt>) -> Option<BiPoly> {
        let d = d.into();
        if d.is_zero() {
            return None;
        }
        let mut terms = BTreeMap::new();
        for (&m, v) in &self.terms {
            if !(v % &d).is_zero() {
                return None;
            }
            terms.insert(m, v / &d);
        }
        Some(BiPoly { terms })
    }

    /// Exact division by a univariate polynomial in `q` whose lowest
    /// coefficient is ±1 (true for every product of q-numbers). Returns
    /// `None` when the division leaves a remainder.
    pub fn div_exact_q(&self, divisor: &BiPoly) -> Option<BiPoly> {
        if !divisor.is_univariate_q() || divisor.is_zero() {
            return None;
        }
        // Work slice by slice in t; each slice is a dense q-polynomial.
        let d = dense_q(divisor);
        let low = d.iter().position(|c| !c.is_zero())?;
        let lead = &d[low];
        if !lead.abs().is_one() {
            return None;
        }
        let mut out = BiPoly::zero();
        let t_degrees: Vec<u32> = {
            let mut v: Vec<u32> = self.terms.keys().map(|m| m.0).collect();
            v.dedup();
            v
        };
        for t in t_degrees {
            let mut rem = dense_q(&self.t_slice(t));
            // divide from the low end: q^low must divide the dividend slice
            let mut quot = vec![BigInt::zero(); rem.len().saturating_sub(d.len() - 1).max(1)];
            for k in 0..rem.len() {
                if rem[k].is_zero() {
                    continue;
                }
                if k < low {
                    return None;
                }
                let qk = k - low;
                let c = &rem[k] * lead;
                if qk >= quot.len() {
                    return None;
                }
                for (j, dj) in d.iter().enumerate().skip(low) {
                    let idx = qk + j;
                    if idx >= rem.len() {
                        if !dj.is_zero() {
                            return None;
                        }
                        continue;
                    }
                    rem[idx] -= &c * dj;
                }
                quot[qk] = c;
            }
            if rem.iter().any(|c| !c.is_zero()) {
                return None;
            }
            for (k, c) in quot.into_iter().enumerate() {
                out.add_term(t, k as u32, c);
            }
        }
        Some(out)
    }

    /// Value at `t = 1, q = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Machine form: `[t-exp, q-exp, coeff]` triples in canonical order.
    pub fn to_triples(&self) -> Vec<(u32, u32, BigInt)> {
        self.terms.iter().map(|(&(t, q), c)| (t, q, c.clone())).collect()
    }

    pub fn from_triples<I>(triples: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32, BigInt)>,
    {
        let mut p = BiPoly::zero();
        for (t, q, c) in triples {
            p.add_term(t, q, c);
        }
        p
    }

    /// The first monomial, in canonical order, where `self` and `other` differ.
    pub fn first_difference(&self, other: &BiPoly) -> Option<(Monomial, BigInt, BigInt)> {
        let mut keys: Vec<Monomial> = self.terms.keys().chain(other.terms.keys()).copied().collect();
        keys.sort_unstable();
        keys.dedup();
        keys.into_iter().find_map(|(t, q)| {
            let a = self.coeff(t, q);
            let b = other.coeff(t, q);
            (a != b).then_some(((t, q), a, b))
        })
    }
}

fn dense_q(p: &BiPoly) -> Vec<BigInt> {
    let deg = p.degree_q().map_or(0, |d| d as usize);
    let mut v = vec![BigInt::zero(); deg + 1];
    for (&(_, q), c) in &p.terms {
        v[q as usize] += c;
    }
    v
}

/// The q-number `[m] = 1 + q + … + q^(m−1)`.
pub fn q_number(m: u32) -> Result<BiPoly> {
    if m == 0 {
        return Err(Error::InvalidArgument("q-number [0] is not defined".into()));
    }
    Ok(BiPoly::from_q_coeffs(std::iter::repeat_n(1, m as usize)))
}

/// `[m]! = [1][2]…[m]`, with `[0]! = 1`.
pub fn q_factorial(m: u32) -> BiPoly {
    (1..=m).fold(BiPoly::one(), |acc, k| &acc * &q_number(k).expect("k >= 1"))
}

impl Add for &BiPoly {
    type Output = BiPoly;

    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for BiPoly {
    type Output = BiPoly;

    fn add(mut self, rhs: BiPoly) -> BiPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&BiPoly> for BiPoly {
    fn add_assign(&mut self, rhs: &BiPoly) {
        for (&(t, q), c) in &rhs.terms {
            self.add_term(t, q, c.clone());
        }
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;

    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(&m, c)| (m, -c)).collect(),
        }
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;

    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(t, q), c) in &rhs.terms {
            out.add_term(t, q, -c);
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;

    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(t1, q1), a) in &self.terms {
            for (&(t2, q2), b) in &rhs.terms {
                out.add_term(t1 + t2, q1 + q2, a * b);
            }
        }
        out
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;

    fn mul(self, rhs: BiPoly) -> BiPoly {
        &self * &rhs
    }
}

impl std::iter::Product for BiPoly {
    fn product<I: Iterator<Item = BiPoly>>(iter: I) -> BiPoly {
        iter.fold(BiPoly::one(), |acc, p| &acc * &p)
    }
}

impl std::iter::Sum for BiPoly {
    fn sum<I: Iterator<Item = BiPoly>>(iter: I) -> BiPoly {
        iter.fold(BiPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, t: u32, q: u32) -> fmt::Result {
    let mut first = true;
    for (name, e) in [("t", t), ("q", q)] {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if e == 1 {
            f.write_str(name)?;
        } else {
            write!(f, "{name}^{e}")?;
        }
    }
    Ok(())
}

/// Human form, e.g. `1 + 2*q + t*q^3`.
impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&(t, q), c)) in self.terms.iter().enumerate() {
            let magnitude = c.abs();
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let constant = t == 0 && q == 0;
            if constant {
                write!(f, "{magnitude}")?;
            } else {
                if !magnitude.is_one() {
                    write!(f, "{magnitude}*")?;
                }
                write_monomial(f, t, q)?;
            }
        }
        Ok(())
    }
}

impl Serialize for BiPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (&(t, q), c) in &self.terms {
            // coefficients beyond i64 fall back to decimal strings
            let coeff = match c.to_i64() {
                Some(v) => serde_json::Value::from(v),
                None => serde_json::Value::from(c.to_string()),
            };
            seq.serialize_element(&(t, q, coeff))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for BiPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<(u32, u32, serde_json::Value)> = Vec::deserialize(deserializer)?;
        let mut p = BiPoly::zero();
        for (t, q, coeff) in raw {
            let c: BigInt = match &coeff {
                serde_json::Value::Number(n) => n
                    .as_i64()
                    .map(BigInt::from)
                    .ok_or_else(|| D::Error::custom(format!("non-integer coefficient {n}")))?,
                serde_json::Value::String(s) => s
                    .parse()
                    .map_err(|_| D::Error::custom(format!("bad coefficient {s:?}")))?,
                other => return Err(D::Error::custom(format!("bad coefficient {other}"))),
            };
            p.add_term(t, q, c);
        }
        Ok(p)
    }
}

/// A power series in `q` (coefficients may involve `t`) known exactly up
/// to `q`-degree `degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    poly: BiPoly,
    degree: u32,
}

impl Series {
    pub fn new(poly: &BiPoly, degree: u32) -> Self {
        Series {
            poly: poly.truncate_q(degree),
            degree,
        }
    }

    pub fn zero(degree: u32) -> Self {
        Series { poly: BiPoly::zero(), degree }
    }

    pub fn one(degree: u32) -> Self {
        Series::new(&BiPoly::one(), degree)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn poly(&self) -> &BiPoly {
        &self.poly
    }

    pub fn into_poly(self) -> BiPoly {
        self.poly
    }

    pub fn coeff(&self, q: u32) -> BigInt {
        self.poly.coeff(0, q)
    }

    pub fn add(&self, other: &Series) -> Series {
        let degree = self.degree.min(other.degree);
        Series::new(&(&self.poly + &other.poly), degree)
    }

    pub fn mul(&self, other: &Series) -> Series {
        let degree = self.degree.min(other.degree);
        let mut out = BiPoly::zero();
        for (&(t1, q1), a) in &self.poly.terms {
            for (&(t2, q2), b) in &other.poly.terms {
                if q1 + q2 <= degree {
                    out.add_term(t1 + t2, q1 + q2, a * b);
                }
            }
        }
        Series { poly: out, degree }
    }

    pub fn mul_poly(&self, p: &BiPoly) -> Series {
        self.mul(&Series::new(p, self.degree))
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(q^{})", self.poly, self.degree + 1)
    }
}

/// `1 / (1 − q^h)` expanded to `q`-degree `degree`.
pub fn geometric_series(h: u32, degree: u32) -> Result<Series> {
    if h == 0 {
        return Err(Error::InvalidArgument("geometric series needs h >= 1".into()));
    }
    let mut p = BiPoly::zero();
    let mut e = 0;
    while e <= degree {
        p.add_term(0, e, BigInt::one());
        e += h;
    }
    Ok(Series { poly: p, degree })
}
