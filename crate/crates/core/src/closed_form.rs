//! Closed forms for `E(2n,k)`, its row sums, and the two Bernoulli-number
//! identities relating them.

use num_traits::{Signed, Zero};

use crate::arith::{
    bernoulli, binomial, factorial, h_image_coeff, int, pow2, sign, zeta_even, PiValue, Rational,
};
use crate::verify::Check;
use crate::{Error, Result};

/// `E(2n,k)`: the sum of all multiple zeta values with even arguments, weight
/// `2n` and depth `k`. Always `c·π^{2n}` with `c > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvenZetaSum {
    n: u32,
    k: u32,
    value: PiValue,
}

impl EvenZetaSum {
    pub fn new(n: u32, k: u32, value: PiValue) -> Result<Self> {
        check_depth(n, k)?;
        match value.single_term() {
            Some((j, c)) if j == n && c.is_positive() => Ok(EvenZetaSum { n, k, value }),
            _ => Err(Error::InvalidArgument(format!(
                "E({}, {k}) must be a positive multiple of pi^{}, got {value}",
                2 * n,
                2 * n
            ))),
        }
    }

    /// The weight `2n`.
    pub fn weight(&self) -> u32 {
        2 * self.n
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn depth(&self) -> u32 {
        self.k
    }

    pub fn value(&self) -> &PiValue {
        &self.value
    }

    /// Rational `c` in `E(2n,k) = c·π^{2n}`.
    pub fn coefficient(&self) -> Rational {
        self.value.coeff(self.n)
    }
}

pub(crate) fn check_depth(n: u32, k: u32) -> Result<()> {
    if k < 1 || k > n {
        Err(Error::DepthOutOfRange { n, k })
    } else {
        Ok(())
    }
}

fn ratio_of(num: num_bigint::BigInt, den: num_bigint::BigInt) -> Rational {
    Rational::new(num, den)
}

/// `E(2n,k)` as a sum of `⌊(k−1)/2⌋+1` terms
/// `(−1)^j π^{2j} ζ(2n−2j) C(2k−2j−1, k) / (2^{2k−2j−2} (2j+1)!)`.
pub fn e_sum_theorem1(n: u32, k: u32) -> Result<EvenZetaSum> {
    check_depth(n, k)?;
    let value = (0..=(k - 1) / 2)
        .map(|j| {
            let c = sign(j % 2 == 0)
                * ratio_of(
                    binomial(u64::from(2 * k - 2 * j - 1), u64::from(k)),
                    factorial(u64::from(2 * j + 1)),
                )
                * pow2(-(2 * i64::from(k) - 2 * i64::from(j) - 2));
            &PiValue::monomial(c, j) * &zeta_even(n - j).expect("n - j >= 1")
        })
        .sum();
    EvenZetaSum::new(n, k, value)
}

/// Coefficients `c_j` with `E(2n,k) = Σ_j c_j·ζ(2j)·ζ(2n−2j)`, where the
/// `j = 0` entry multiplies `ζ(2n)` alone. Independent of `n`.
///
/// `c_0 = C(2k−1,k)/2^{2k−2}`, `c_j = −C(2k−2j−1,k) / (2^{2k−3}(2j+1)B_{2j})`.
pub fn theorem1_zeta_coefficients(k: u32) -> Vec<Rational> {
    assert!(k >= 1, "depth must be positive");
    let k64 = u64::from(k);
    let mut out =
        vec![Rational::from_integer(binomial(2 * k64 - 1, k64)) * pow2(-(2 * i64::from(k) - 2))];
    for j in 1..=(k - 1) / 2 {
        let j64 = u64::from(j);
        let den =
            pow2(2 * i64::from(k) - 3) * int(2 * i64::from(j) + 1) * bernoulli(2 * j as usize);
        out.push(-Rational::from_integer(binomial(2 * k64 - 2 * j64 - 1, k64)) / den);
    }
    out
}

/// Evaluate the `ζ(2j)ζ(2n−2j)` expansion of [`theorem1_zeta_coefficients`].
pub fn e_sum_from_zeta_coefficients(n: u32, k: u32) -> Result<PiValue> {
    check_depth(n, k)?;
    let coeffs = theorem1_zeta_coefficients(k);
    let mut total = zeta_even(n)?.scale(&coeffs[0]);
    for (j, c) in coeffs.iter().enumerate().skip(1) {
        let j = j as u32;
        total = &total + &(&zeta_even(j)? * &zeta_even(n - j)?).scale(c);
    }
    Ok(total)
}

/// `E(2n,k)` as the `n−k+1`-term Bernoulli sum
/// `(−1)^{n−k−1} π^{2n}/(2n+1)! · Σ_i C(n−i,k) C(2n+1,2i) 2(2^{2i−1}−1) B_{2i}`.
pub fn e_sum_theorem3(n: u32, k: u32) -> Result<EvenZetaSum> {
    check_depth(n, k)?;
    let (n64, k64) = (u64::from(n), u64::from(k));
    let sum = (0..=n64 - k64).fold(Rational::zero(), |acc, i| {
        acc + Rational::from_integer(binomial(n64 - i, k64) * binomial(2 * n64 + 1, 2 * i))
            * int(2)
            * (pow2(2 * i as i64 - 1) - int(1))
            * bernoulli(2 * i as usize)
    });
    let c =
        sign((n - k + 1).is_multiple_of(2)) * sum / Rational::from_integer(factorial(2 * n64 + 1));
    EvenZetaSum::new(n, k, PiValue::monomial(c, n))
}

/// `Σ_{k=1}^{n} E(2n,k) = 2(2^{2n−1}−1)(−1)^{n−1} B_{2n} π^{2n}/(2n)!`.
pub fn e_row_sum(n: u32) -> Result<PiValue> {
    if n == 0 {
        return Err(Error::InvalidArgument("row sum needs n >= 1".into()));
    }
    Ok(PiValue::monomial(h_image_coeff(n), n))
}

/// Rows `n = 1..=n_max` of `E(2n,k)` for `k = 1..=n_max`, with zeros where `k > n`.
pub fn e_table(n_max: u32) -> Vec<Vec<PiValue>> {
    (1..=n_max)
        .map(|n| {
            (1..=n_max)
                .map(|k| {
                    if k > n {
                        PiValue::zero()
                    } else {
                        e_sum_theorem1(n, k).expect("k <= n").value
                    }
                })
                .collect()
        })
        .collect()
}

/// `Σ_{i=0}^{⌊(k−1)/2⌋} C(2k−2i−1,k) C(2n+1,2i+1) B_{2n−2i}`, shared left side
/// of both Bernoulli identities.
pub fn bernoulli_identity_lhs(n: u32, k: u32) -> Rational {
    let (n64, k64) = (u64::from(n), u64::from(k));
    (0..=(k64.max(1) - 1) / 2)
        .filter(|&i| i <= n64)
        .fold(Rational::zero(), |acc, i| {
            acc + Rational::from_integer(
                binomial(2 * k64 - 2 * i - 1, k64) * binomial(2 * n64 + 1, 2 * i + 1),
            ) * bernoulli((2 * n64 - 2 * i) as usize)
        })
}

/// Right side for `k ≤ n`:
/// `(−1)^k 2^{2k−2n} Σ_{i=0}^{n−k} C(n−i,k) C(2n+1,2i) (2^{2i−1}−1) B_{2i}`.
pub fn bernoulli_identity_rhs(n: u32, k: u32) -> Rational {
    let (n64, k64) = (u64::from(n), u64::from(k));
    let sum = (0..=n64 - k64).fold(Rational::zero(), |acc, i| {
        acc + Rational::from_integer(binomial(n64 - i, k64) * binomial(2 * n64 + 1, 2 * i))
            * (pow2(2 * i as i64 - 1) - int(1))
            * bernoulli(2 * i as usize)
    });
    sign(k.is_multiple_of(2)) * pow2(2 * i64::from(k) - 2 * i64::from(n)) * sum
}

/// The Bernoulli identity obtained by equating the two closed forms, on
/// `1 ≤ k ≤ n`.
pub fn verify_bernoulli_identity(n: u32, k: u32) -> Result<Check> {
    check_depth(n, k)?;
    let lhs = bernoulli_identity_lhs(n, k);
    let rhs = bernoulli_identity_rhs(n, k);
    Ok(Check::equal(
        format!("bernoulli-identity n={n} k={k}"),
        &lhs,
        &rhs,
    ))
}

/// The complementary identity for `k > n`:
/// left side `= (2n+1)/2 · C(2k−2n, k)`.
pub fn verify_gessel_viennot(n: u32, k: u32) -> Result<Check> {
    if n < 1 || k <= n {
        return Err(Error::InvalidArgument(format!(
            "complementary identity needs k > n >= 1, got n={n} k={k}"
        )));
    }
    let lhs = bernoulli_identity_lhs(n, k);
    let rhs = Rational::new((2 * i64::from(n) + 1).into(), 2.into())
        * Rational::from_integer(binomial(2 * u64::from(k) - 2 * u64::from(n), u64::from(k)));
    Ok(Check::equal(
        format!("gessel-viennot n={n} k={k}"),
        &lhs,
        &rhs,
    ))
}
