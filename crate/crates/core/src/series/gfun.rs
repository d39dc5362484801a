//! The polynomials `P_k`, `Q_k` with `G_k(t) = P_k(π²t)·π√t·cot(π√t) + Q_k(π²t)`.

use std::fmt;

use num_bigint::BigInt;

use super::{cot_series, g_k_series, GradedSeries, RatPoly};
use crate::arith::{binomial, factorial, int, pow2, Rational};
use crate::verify::{Check, Report};
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PqKind {
    P,
    Q,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PqPolynomial {
    pub kind: PqKind,
    pub index: u32,
    pub poly: RatPoly,
}

impl fmt::Display for PqPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            PqKind::P => "P",
            PqKind::Q => "Q",
        };
        write!(f, "{name}_{}(x) = {}", self.index, self.poly)
    }
}

// (−4)^j
fn minus_four_pow(j: u32) -> Rational {
    let p = Rational::from_integer(BigInt::from(4).pow(j));
    if j.is_multiple_of(2) {
        p
    } else {
        -p
    }
}

/// Closed forms
/// `P_k(x) = −Σ_{j≤⌊(k−1)/2⌋} (−4x)^j C(2k−2j−1,k) / (2^{2k−1}(2j+1)!)` and
/// `Q_k(x) = Σ_{j≤⌊k/2⌋} (−4x)^j C(2k−2j,k) / (2^{2k}(2j)!)`.
pub fn pq_polynomials(k: u32) -> (PqPolynomial, PqPolynomial) {
    let k64 = u64::from(k);
    let p = if k == 0 {
        RatPoly::zero()
    } else {
        RatPoly::new(
            (0..=(k - 1) / 2)
                .map(|j| {
                    let j64 = u64::from(j);
                    -minus_four_pow(j)
                        * Rational::new(
                            binomial(2 * k64 - 2 * j64 - 1, k64),
                            factorial(2 * j64 + 1),
                        )
                        * pow2(-(2 * i64::from(k) - 1))
                })
                .collect(),
        )
    };
    let q = RatPoly::new(
        (0..=k / 2)
            .map(|j| {
                let j64 = u64::from(j);
                minus_four_pow(j)
                    * Rational::new(binomial(2 * k64 - 2 * j64, k64), factorial(2 * j64))
                    * pow2(-2 * i64::from(k))
            })
            .collect(),
    );
    (
        PqPolynomial {
            kind: PqKind::P,
            index: k,
            poly: p,
        },
        PqPolynomial {
            kind: PqKind::Q,
            index: k,
            poly: q,
        },
    )
}

/// Closed forms for `k = 0..=k_max`.
pub fn pq_table(k_max: u32) -> Vec<(RatPoly, RatPoly)> {
    (0..=k_max)
        .map(|k| {
            let (p, q) = pq_polynomials(k);
            (p.poly, q.poly)
        })
        .collect()
}

/// Check the closed forms against the initial conditions `P_0 = 0`,
/// `Q_0 = 1` and the recurrences
/// `(k+1)P_{k+1} = kP_k − xP_k′ − Q_k/2`,
/// `(k+1)Q_{k+1} = (2k+1)Q_k/2 − xQ_k′ + xP_k/2` for `0 ≤ k < k_max`.
pub fn verify_pq_recurrence(k_max: u32) -> Report {
    verify_pq_recurrence_with(&pq_table(k_max))
}

/// As [`verify_pq_recurrence`], for an arbitrary table `[(P_0,Q_0), …]`.
/// Failing checks carry the offending `k` and the polynomial difference.
pub fn verify_pq_recurrence_with(table: &[(RatPoly, RatPoly)]) -> Report {
    let mut report = Report::new("pq-recurrence");
    if let Some((p0, q0)) = table.first() {
        report.push(Check::equal("P_0 = 0", p0, &RatPoly::zero()));
        report.push(Check::equal("Q_0 = 1", q0, &RatPoly::constant(int(1))));
    }
    let half = Rational::new(1.into(), 2.into());
    for (k, pair) in table.windows(2).enumerate() {
        let ((p, q), (p_next, q_next)) = (&pair[0], &pair[1]);
        let kr = int(k as i64);
        let k1 = int(k as i64 + 1);

        let lhs = p_next.scale(&k1);
        let rhs = &(&p.scale(&kr) - &p.derivative().mul_x()) - &q.scale(&half);
        push_with_delta(&mut report, format!("P recurrence k={k}"), &lhs, &rhs);

        let lhs = q_next.scale(&k1);
        let rhs = &(&q.scale(&(int(2 * k as i64 + 1) * &half)) - &q.derivative().mul_x())
            + &p.mul_x().scale(&half);
        push_with_delta(&mut report, format!("Q recurrence k={k}"), &lhs, &rhs);
    }
    report
}

fn push_with_delta(report: &mut Report, instance: String, lhs: &RatPoly, rhs: &RatPoly) {
    let delta = lhs - rhs;
    let instance = if delta.is_zero() {
        instance
    } else {
        format!("{instance} delta={delta}")
    };
    report.push(Check::equal(instance, lhs, rhs));
}

/// Check `G_k = P_k·cot-series + Q_k` to order `N`.
pub fn verify_gfun(k: u32, order: usize) -> Result<Check> {
    let g = g_k_series(k as usize, order)?;
    let (p, q) = pq_polynomials(k);
    let rhs: GradedSeries =
        &(&p.poly.to_graded(order) * &cot_series(order)) + &q.poly.to_graded(order);
    Ok(Check::equal(format!("gfun k={k} order={order}"), &g, &rhs))
}
