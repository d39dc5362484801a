//! Truncated power series over the rationals with an implicit `π^{2n}`
//! attached to every `t^n`.
//!
//! Every function handled here is even in `√t` (and in `√(1−s)`), so the
//! series only ever carry integer powers of `t` and all stored
//! coefficients stay rational.

mod generating;
mod gfun;
mod poly;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::arith::Rational;
use crate::{Error, Result};

pub use generating::{cot_series, e_sum_series, f_expand, g_k_series, sinc_series};
pub use gfun::{
    pq_polynomials, pq_table, verify_gfun, verify_pq_recurrence, verify_pq_recurrence_with, PqKind,
    PqPolynomial,
};
pub use poly::RatPoly;

/// `Σ_{n=0}^{N} a_n·π^{2n}·t^n`, truncated at order `N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedSeries {
    coeffs: Vec<Rational>,
}

impl GradedSeries {
    /// Series with coefficients `a_0..=a_N`; `coeffs` must be non-empty.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least the constant term"
        );
        GradedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        GradedSeries::new(vec![Rational::zero(); order + 1])
    }

    pub fn one(order: usize) -> Self {
        let mut s = GradedSeries::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Rational) -> Self {
        GradedSeries::new((0..=order).map(f).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `π^{2n} t^n`; zero beyond the truncation order.
    pub fn coeff(&self, n: usize) -> Rational {
        self.coeffs.get(n).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> GradedSeries {
        GradedSeries::from_fn(order, |n| self.coeff(n))
    }

    pub fn scale(&self, c: &Rational) -> GradedSeries {
        GradedSeries::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn reciprocal(&self) -> Result<GradedSeries> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let inv0 = a0.recip();
        let mut out: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        for n in 1..self.coeffs.len() {
            let acc = (1..=n).fold(Rational::zero(), |acc, i| {
                acc + &self.coeffs[i] * &out[n - i]
            });
            out.push(-acc * &inv0);
        }
        Ok(GradedSeries::new(out))
    }
}

impl Add<&GradedSeries> for &GradedSeries {
    type Output = GradedSeries;
    fn add(self, rhs: &GradedSeries) -> GradedSeries {
        let order = self.order().min(rhs.order());
        GradedSeries::from_fn(order, |n| &self.coeffs[n] + &rhs.coeffs[n])
    }
}

impl Sub<&GradedSeries> for &GradedSeries {
    type Output = GradedSeries;
    fn sub(self, rhs: &GradedSeries) -> GradedSeries {
        let order = self.order().min(rhs.order());
        GradedSeries::from_fn(order, |n| &self.coeffs[n] - &rhs.coeffs[n])
    }
}

impl Mul<&GradedSeries> for &GradedSeries {
    type Output = GradedSeries;
    fn mul(self, rhs: &GradedSeries) -> GradedSeries {
        let order = self.order().min(rhs.order());
        GradedSeries::from_fn(order, |n| {
            (0..=n).fold(Rational::zero(), |acc, i| {
                let (a, b) = (&self.coeffs[i], &rhs.coeffs[n - i]);
                if a.is_zero() || b.is_zero() {
                    acc
                } else {
                    acc + a * b
                }
            })
        })
    }
}

impl Neg for &GradedSeries {
    type Output = GradedSeries;
    fn neg(self) -> GradedSeries {
        GradedSeries::new(self.coeffs.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for GradedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

/// `Σ a_{n,k}·π^{2n}·t^n·s^k` for `n ≤ N_t`, `k ≤ N_s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedSeries2 {
    order_s: usize,
    // rows indexed by n, each of length order_s + 1
    rows: Vec<Vec<Rational>>,
}

impl GradedSeries2 {
    pub fn zero(order_t: usize, order_s: usize) -> Self {
        GradedSeries2 {
            order_s,
            rows: vec![vec![Rational::zero(); order_s + 1]; order_t + 1],
        }
    }

    pub fn order_t(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn order_s(&self) -> usize {
        self.order_s
    }

    pub fn coeff(&self, n: usize, k: usize) -> Rational {
        self.rows
            .get(n)
            .and_then(|row| row.get(k))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub(crate) fn set(&mut self, n: usize, k: usize, value: Rational) {
        self.rows[n][k] = value;
    }

    /// Coefficient of `t^n` after setting `s = 1` (exact whenever `n ≤ N_s`,
    /// since `a_{n,k} = 0` for `k > n`).
    pub fn row_sum(&self, n: usize) -> Rational {
        self.rows[n].iter().fold(Rational::zero(), |acc, c| acc + c)
    }

    /// The series in `t` multiplying `s^k`.
    pub fn s_coefficient(&self, k: usize) -> GradedSeries {
        GradedSeries::from_fn(self.order_t(), |n| self.coeff(n, k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;
    use proptest::prelude::*;

    #[test]
    fn reciprocal_of_zero_constant_fails() {
        let s = GradedSeries::new(vec![ratio(0, 1), ratio(1, 1)]);
        assert_eq!(s.reciprocal(), Err(Error::NotInvertible));
    }

    #[test]
    fn mismatched_orders_truncate_to_minimum() {
        let a = GradedSeries::one(5);
        let b = GradedSeries::one(2);
        assert_eq!((&a * &b).order(), 2);
        assert_eq!((&a + &b).order(), 2);
    }

    proptest! {
        #[test]
        fn reciprocal_inverts(tail in prop::collection::vec((-9i64..9, 1i64..9), 0..10), a0 in 1i64..5) {
            let mut coeffs = vec![ratio(a0, 1)];
            coeffs.extend(tail.into_iter().map(|(n, d)| ratio(n, d)));
            let s = GradedSeries::new(coeffs);
            let r = s.reciprocal().unwrap();
            prop_assert_eq!(&s * &r, GradedSeries::one(s.order()));
        }
    }
}
