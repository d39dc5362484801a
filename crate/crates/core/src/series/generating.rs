use num_bigint::BigInt;
use num_traits::Zero;

use super::{GradedSeries, GradedSeries2};
use crate::arith::{binomial, factorial, sign, zeta_even_coeff, Rational};
use crate::closed_form::{check_depth, EvenZetaSum};
use crate::{Error, PiValue, Result};

fn inv_factorial(m: u64) -> Rational {
    Rational::new(BigInt::from(1), factorial(m))
}

/// `sin(π√t)/(π√t)`: `a_j = (−1)^j/(2j+1)!`.
pub fn sinc_series(order: usize) -> GradedSeries {
    GradedSeries::from_fn(order, |j| {
        sign(j % 2 == 0) * inv_factorial(2 * j as u64 + 1)
    })
}

/// `π√t·cot(π√t) = 1 − 2Σ_{i≥1} ζ(2i) t^i`.
pub fn cot_series(order: usize) -> GradedSeries {
    GradedSeries::from_fn(order, |i| {
        if i == 0 {
            Rational::from_integer(1.into())
        } else {
            -zeta_even_coeff(i as u32) * Rational::from_integer(2.into())
        }
    })
}

/// Expansion of `sin(π√((1−s)t)) / (√(1−s)·sin(π√t))` to `t^{N_t} s^{N_s}`.
///
/// The numerator over `π√t` is `Σ_j (−1)^j t^j (1−s)^j/(2j+1)!`; `(1−s)^j`
/// is expanded binomially and the result multiplied by `1/sinc`.
pub fn f_expand(order_t: usize, order_s: usize) -> Result<GradedSeries2> {
    if order_s > order_t {
        return Err(Error::InvalidArgument(format!(
            "s-order {order_s} exceeds t-order {order_t}"
        )));
    }
    let csc = sinc_series(order_t).reciprocal()?;
    // numerator[j][k] = (−1)^{j+k} C(j,k)/(2j+1)!
    let numerator: Vec<Vec<Rational>> = (0..=order_t)
        .map(|j| {
            (0..=order_s)
                .map(|k| {
                    let c = binomial(j as u64, k as u64);
                    if c.is_zero() {
                        Rational::zero()
                    } else {
                        sign((j + k) % 2 == 0)
                            * Rational::from_integer(c)
                            * inv_factorial(2 * j as u64 + 1)
                    }
                })
                .collect()
        })
        .collect();
    let mut out = GradedSeries2::zero(order_t, order_s);
    for n in 0..=order_t {
        for k in 0..=order_s.min(n) {
            let v = (k..=n).fold(Rational::zero(), |acc, j| {
                acc + csc.coeff(n - j) * &numerator[j][k]
            });
            out.set(n, k, v);
        }
    }
    Ok(out)
}

/// `G_k(t)`, the coefficient of `s^k` in the generating function:
/// `(−1)^k·csc-factor·Σ_{j≥k} (−1)^j C(j,k) t^j/(2j+1)!`.
///
/// The sum is the coefficient transform `a_j ↦ C(j,k) a_j` of the sinc series,
/// which equals `(−t)^k/k!·d^k/dt^k` applied to it.
pub fn g_k_series(k: usize, order: usize) -> Result<GradedSeries> {
    if order < k {
        return Err(Error::InvalidArgument(format!("order {order} below k={k}")));
    }
    let sinc = sinc_series(order);
    let transformed = GradedSeries::from_fn(order, |j| {
        sign(k.is_multiple_of(2))
            * Rational::from_integer(binomial(j as u64, k as u64))
            * sinc.coeff(j)
    });
    Ok(&sinc.reciprocal()? * &transformed)
}

/// `E(2n,k)` read off as the `t^n s^k` coefficient of the generating function.
pub fn e_sum_series(n: u32, k: u32) -> Result<EvenZetaSum> {
    check_depth(n, k)?;
    let c = g_k_series(k as usize, n as usize)?.coeff(n as usize);
    EvenZetaSum::new(n, k, PiValue::monomial(c, n))
}
