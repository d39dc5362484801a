//! Exact rationals, Bernoulli numbers, even zeta values and the graded
//! `π²`-polynomial value type.

mod bernoulli;
mod pi;
mod pivalue;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use bernoulli::{bernoulli, BernoulliTable};
pub use pi::{pi_approximation, DEFAULT_PI_DIGITS, MAX_PI_DIGITS};
pub use pivalue::PiValue;

use crate::{Error, Result};

/// Arbitrary precision rational in canonical form (positive denominator,
/// reduced).
pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Binomial coefficient `C(a, b)`, zero when `b > a`.
pub fn binomial(a: u64, b: u64) -> BigInt {
    if b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        // exact at every step: acc = C(a, i+1) after the division
        acc = acc * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `2^e` for any signed exponent.
pub fn pow2(e: i64) -> Rational {
    let p = BigInt::one() << e.unsigned_abs();
    if e >= 0 {
        Rational::from_integer(p)
    } else {
        Rational::new(BigInt::one(), p)
    }
}

pub(crate) fn sign(even: bool) -> Rational {
    if even {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Rational coefficient of `π^{2n}` in `ζ(2n)`.
pub fn zeta_even_coeff(n: u32) -> Rational {
    let n64 = u64::from(n);
    let b = bernoulli(2 * n as usize);
    let value = sign(n % 2 == 1) * b * pow2(2 * n as i64)
        / Rational::from_integer(BigInt::from(2) * factorial(2 * n64));
    debug_assert!(value.is_positive());
    value
}

/// `ζ(2n)` by Euler's formula `(−1)^{n−1} B_{2n} (2π)^{2n} / (2·(2n)!)`.
pub fn zeta_even(n: u32) -> Result<PiValue> {
    if n == 0 {
        return Err(Error::InvalidArgument("zeta_even needs n >= 1".into()));
    }
    Ok(PiValue::monomial(zeta_even_coeff(n), n))
}

/// Image of the elementary symmetric function `e_i`: `ζ(2,…,2) = π^{2i}/(2i+1)!`.
pub fn zt_of_e(i: u32) -> PiValue {
    let c = Rational::new(BigInt::one(), factorial(2 * u64::from(i) + 1));
    PiValue::monomial(c, i)
}

/// Image of the complete symmetric function `h_i`:
/// `2(2^{2i−1}−1)(−1)^{i−1} B_{2i} π^{2i} / (2i)!`, and 1 for `i = 0`.
pub fn zt_of_h(i: u32) -> PiValue {
    if i == 0 {
        return PiValue::one();
    }
    PiValue::monomial(h_image_coeff(i), i)
}

/// Coefficient `2(2^{2i−1}−1)(−1)^{i−1} B_{2i}/(2i)!`. Also the row sum of
/// `E(2i, ·)`.
pub(crate) fn h_image_coeff(i: u32) -> Rational {
    let two = int(2);
    two * (pow2(2 * i as i64 - 1) - int(1)) * sign(i % 2 == 1) * bernoulli(2 * i as usize)
        / Rational::from_integer(factorial(2 * u64::from(i)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(2, 3), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(binomial(80, 40).to_string(), "107507208733336176461620");
    }

    #[test]
    fn zeta_even_small() {
        assert_eq!(zeta_even(1).unwrap(), PiValue::monomial(ratio(1, 6), 1));
        assert_eq!(zeta_even(2).unwrap(), PiValue::monomial(ratio(1, 90), 2));
        assert_eq!(zeta_even(3).unwrap(), PiValue::monomial(ratio(1, 945), 3));
        assert!(zeta_even(0).is_err());
    }

    #[test]
    fn zeta_even_single_positive_term() {
        for n in 1..=40 {
            let z = zeta_even(n).unwrap();
            let (deg, c) = z.single_term().unwrap();
            assert_eq!(deg, n);
            assert!(c.is_positive(), "n={n}");
        }
    }

    #[test]
    fn e_and_h_images() {
        assert_eq!(zt_of_e(0), PiValue::one());
        assert_eq!(zt_of_e(1), PiValue::monomial(ratio(1, 6), 1));
        assert_eq!(zt_of_e(2), PiValue::monomial(ratio(1, 120), 2));
        assert_eq!(zt_of_h(0), PiValue::one());
        assert_eq!(zt_of_h(1), PiValue::monomial(ratio(1, 6), 1));
        assert_eq!(zt_of_h(2), PiValue::monomial(ratio(7, 360), 2));
        // h_2 = e_2 + p_2
        assert_eq!(zt_of_h(2), &zt_of_e(2) + &zeta_even(2).unwrap());
        assert_eq!(zt_of_h(1), zeta_even(1).unwrap());
        assert_eq!(zt_of_e(1), zeta_even(1).unwrap());
    }
}
