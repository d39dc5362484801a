//! Symmetric-function identities behind the generating function, checked
//! exactly in the monomial basis.
//!
//! The `*_with` variants take the `N_{n,k}` family as a closure so that a
//! deliberately corrupted family can be fed through the same checks.

use super::{basis_e, basis_h, basis_p, check_cap, n_nk, zt, SymPoly};
use crate::arith::{binomial, int, sign, zt_of_e, zt_of_h, Rational};
use crate::closed_form::e_sum_theorem1;
use crate::verify::{Check, Report};
use crate::Result;

fn binom(a: usize, b: usize) -> Rational {
    Rational::from_integer(binomial(a as u64, b as u64))
}

/// `Σ_{a=k}^{n} (−1)^{a−k} C(a,k) e_a h_{n−a}`: the `t^n s^k` coefficient of
/// `E((s−1)t)·H(t)`.
pub fn infprod_side(n: usize, k: usize, cap: usize) -> Result<SymPoly> {
    let mut acc = SymPoly::zero(cap);
    for a in k..=n {
        let c = sign((a - k).is_multiple_of(2)) * binom(a, k);
        let term = &basis_e(a, cap)? * &basis_h(n - a, cap)?;
        acc = &acc + &term.scale(&c);
    }
    Ok(acc)
}

/// `E((s−1)t)·H(t) = 1 + Σ N_{n,k} t^n s^k`, coefficientwise for
/// `0 ≤ k ≤ n ≤ max_weight`, `n ≥ 1`.
pub fn verify_infprod(max_weight: usize, cap: usize) -> Result<Report> {
    verify_infprod_with(max_weight, cap, |n, k| n_nk(n, k, cap))
}

pub fn verify_infprod_with(
    max_weight: usize,
    cap: usize,
    family: impl Fn(usize, usize) -> Result<SymPoly>,
) -> Result<Report> {
    check_cap(max_weight, cap)?;
    let mut report = Report::new("infprod");
    for n in 1..=max_weight {
        for k in 0..=n {
            let lhs = infprod_side(n, k, cap)?;
            let rhs = family(n, k)?;
            report.push(Check::equal(format!("infprod n={n} k={k}"), &lhs, &rhs));
        }
    }
    Ok(report)
}

/// Both sides of
/// `Σ_{i=1}^{n−k} p_i N_{n−i,k} = (n−k) N_{n,k} + (k+1) N_{n,k+1}`.
pub fn sfi_sides(
    n: usize,
    k: usize,
    cap: usize,
    family: &impl Fn(usize, usize) -> Result<SymPoly>,
) -> Result<(SymPoly, SymPoly)> {
    let mut lhs = SymPoly::zero(cap);
    for i in 1..=n - k {
        lhs = &lhs + &(&basis_p(i, cap)? * &family(n - i, k)?);
    }
    let rhs =
        &family(n, k)?.scale(&int((n - k) as i64)) + &family(n, k + 1)?.scale(&int(k as i64 + 1));
    Ok((lhs, rhs))
}

/// The power-sum recurrence for `N_{n,k}` (the `t^n s^k` coefficient of
/// `t·∂F/∂t + (1−s)·∂F/∂s = t·P(t)·F`), for `1 ≤ k < n ≤ max_weight`.
pub fn verify_sfi(max_weight: usize, cap: usize) -> Result<Report> {
    verify_sfi_with(max_weight, cap, |n, k| n_nk(n, k, cap))
}

pub fn verify_sfi_with(
    max_weight: usize,
    cap: usize,
    family: impl Fn(usize, usize) -> Result<SymPoly>,
) -> Result<Report> {
    check_cap(max_weight, cap)?;
    let mut report = Report::new("sfi");
    for n in 2..=max_weight {
        for k in 1..n {
            let (lhs, rhs) = sfi_sides(n, k, cap, &family)?;
            report.push(Check::equal(format!("sfi n={n} k={k}"), &lhs, &rhs));
        }
    }
    Ok(report)
}

/// `Σ_{i=0}^{r} (−1)^i C(k+i,i) h_{r−i} e_{k+i}`.
pub fn nexp_side(k: usize, r: usize, cap: usize) -> Result<SymPoly> {
    let mut acc = SymPoly::zero(cap);
    for i in 0..=r {
        let c = sign(i % 2 == 0) * binom(k + i, i);
        acc = &acc + &(&basis_h(r - i, cap)? * &basis_e(k + i, cap)?).scale(&c);
    }
    Ok(acc)
}

/// `N_{k+r,k}` in terms of `h` and `e`, for `k ≥ 1`, `r ≥ 0`,
/// `k + r ≤ max_weight`.
pub fn verify_nexp(max_weight: usize, cap: usize) -> Result<Report> {
    verify_nexp_with(max_weight, cap, |n, k| n_nk(n, k, cap))
}

pub fn verify_nexp_with(
    max_weight: usize,
    cap: usize,
    family: impl Fn(usize, usize) -> Result<SymPoly>,
) -> Result<Report> {
    check_cap(max_weight, cap)?;
    let mut report = Report::new("nexp");
    for k in 1..=max_weight {
        for r in 0..=max_weight - k {
            let lhs = family(k + r, k)?;
            let rhs = nexp_side(k, r, cap)?;
            report.push(Check::equal(format!("nexp k={k} r={r}"), &lhs, &rhs));
        }
    }
    Ok(report)
}

/// `Σ_{i=1}^{r} p_i h_{r−i} = r·h_r` for `1 ≤ r ≤ max_weight`.
pub fn verify_newton(max_weight: usize, cap: usize) -> Result<Report> {
    check_cap(max_weight, cap)?;
    let mut report = Report::new("newton");
    for r in 1..=max_weight {
        let mut lhs = SymPoly::zero(cap);
        for i in 1..=r {
            lhs = &lhs + &(&basis_p(i, cap)? * &basis_h(r - i, cap)?);
        }
        let rhs = basis_h(r, cap)?.scale(&int(r as i64));
        report.push(Check::equal(format!("newton r={r}"), &lhs, &rhs));
    }
    Ok(report)
}

/// `Zt(N_{n,k}) = E(2n,k)` (closed form) for `1 ≤ k ≤ n ≤ max_weight`.
pub fn verify_zt_nnk(max_weight: usize, cap: usize) -> Result<Report> {
    check_cap(max_weight, cap)?;
    let mut report = Report::new("zt-nnk");
    for n in 1..=max_weight {
        for k in 1..=n {
            let lhs = zt(&n_nk(n, k, cap)?)?;
            let rhs = e_sum_theorem1(n as u32, k as u32)?.value().clone();
            report.push(Check::equal(format!("zt(N) n={n} k={k}"), &lhs, &rhs));
        }
    }
    Ok(report)
}

/// `Zt(e_i)` and `Zt(h_i)` through the power-sum basis agree with their
/// closed forms, for `0 ≤ i ≤ max_weight`.
pub fn verify_basis_images(max_weight: usize, cap: usize) -> Result<Report> {
    check_cap(max_weight, cap)?;
    let mut report = Report::new("basis-images");
    for i in 0..=max_weight {
        let e = zt(&basis_e(i, cap)?)?;
        report.push(Check::equal(format!("zt(e_{i})"), &e, &zt_of_e(i as u32)));
        let h = zt(&basis_h(i, cap)?)?;
        report.push(Check::equal(format!("zt(h_{i})"), &h, &zt_of_h(i as u32)));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::Partition;

    #[test]
    fn small_bounds_hold() {
        assert!(verify_infprod(2, 12).unwrap().passed());
        assert!(verify_sfi(4, 12).unwrap().passed());
        assert!(verify_nexp(4, 12).unwrap().passed());
        assert!(verify_newton(4, 12).unwrap().passed());
    }

    #[test]
    fn sfi_weight_two_example() {
        // p_1 N_{1,1} = m_1·m_1 = 2m_{1,1} + m_2 = N_{2,1} + 2N_{2,2}
        let (lhs, rhs) = sfi_sides(2, 1, 12, &|n, k| n_nk(n, k, 12)).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.to_string(), "2*m[1,1] + m[2]");
    }

    #[test]
    fn nexp_small_example() {
        // N_{2,1} = h_1 e_1 − 2 h_0 e_2 = m_2
        assert_eq!(nexp_side(1, 1, 12).unwrap(), n_nk(2, 1, 12).unwrap());
    }

    fn corrupted(n: usize, k: usize, cap: usize) -> Result<SymPoly> {
        let mut p = n_nk(n, k, cap)?;
        if (n, k) == (4, 2) {
            p.remove_term(&Partition::new(vec![2, 2]).unwrap());
        }
        Ok(p)
    }

    #[test]
    fn dropped_term_is_caught() {
        let r = verify_infprod_with(5, 12, |n, k| corrupted(n, k, 12)).unwrap();
        let failing: Vec<_> = r.failures().map(|c| c.instance.clone()).collect();
        assert_eq!(failing, vec!["infprod n=4 k=2".to_string()]);

        let r = verify_sfi_with(5, 12, |n, k| corrupted(n, k, 12)).unwrap();
        assert!(!r.passed());
        assert!(r
            .failures()
            .all(|c| c.instance.contains("n=4") || c.instance.contains("n=5")));

        let r = verify_nexp_with(5, 12, |n, k| corrupted(n, k, 12)).unwrap();
        let failing: Vec<_> = r.failures().map(|c| c.instance.clone()).collect();
        assert_eq!(failing, vec!["nexp k=2 r=2".to_string()]);
    }

    #[test]
    fn perturbed_coefficient_is_caught() {
        let r = verify_sfi_with(4, 12, |n, k| {
            let p = n_nk(n, k, 12)?;
            Ok(if (n, k) == (3, 1) {
                p.scale(&int(2))
            } else {
                p
            })
        })
        .unwrap();
        assert!(!r.passed());
    }

    #[test]
    fn bound_above_cap_is_rejected() {
        assert!(verify_infprod(13, 12).is_err());
        assert!(verify_zt_nnk(6, 5).is_err());
    }
}
