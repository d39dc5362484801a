use std::sync::LazyLock;

use num_bigint::BigInt;
use num_traits::{pow, Zero};

use super::Rational;

/// Significant digits used for decimal rendering unless overridden.
pub const DEFAULT_PI_DIGITS: usize = 30;
/// Upper bound on rendering precision.
pub const MAX_PI_DIGITS: usize = 100;
// Extra digits of π carried beyond the rendered precision: π^{80} amplifies
// the relative error of π by 80.
const GUARD_DIGITS: usize = 20;
const STORED_DIGITS: usize = MAX_PI_DIGITS + GUARD_DIGITS + 10;

// floor(π·10^STORED_DIGITS), from Machin's formula π = 16·atan(1/5) − 4·atan(1/239).
static PI_FIXED: LazyLock<BigInt> = LazyLock::new(|| {
    let scale = pow(BigInt::from(10), STORED_DIGITS + 10);
    let pi = BigInt::from(16) * atan_inv(5, &scale) - BigInt::from(4) * atan_inv(239, &scale);
    pi / pow(BigInt::from(10), 10)
});

fn atan_inv(x: u32, scale: &BigInt) -> BigInt {
    let x2 = BigInt::from(x) * BigInt::from(x);
    let mut power = scale / BigInt::from(x);
    let mut sum = BigInt::zero();
    let mut k = 0u32;
    while !power.is_zero() {
        let term = &power / BigInt::from(2 * k + 1);
        if k.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &x2;
        k += 1;
    }
    sum
}

/// Rational approximation of π accurate to `digits + 20` decimal places.
pub fn pi_approximation(digits: usize) -> Rational {
    let places = digits.min(MAX_PI_DIGITS) + GUARD_DIGITS;
    let drop = pow(BigInt::from(10), STORED_DIGITS - places);
    Rational::new(&*PI_FIXED / drop, pow(BigInt::from(10), places))
}
