//! Brute-force floating point evaluation of multiple zeta values by
//! truncated nested sums. Independent of every exact route in the crate.
//!
//! `ζ(i_1,…,i_k) ≈ Σ_{L ≥ n_1 > … > n_k ≥ 1} Π n_j^{−i_j}` is evaluated with
//! prefix sums, innermost argument first, in `O(k·L)`. When the outermost
//! argument is 2 the truncation error behaves like `c/L`, and the estimates
//! at `L` and `2L` are combined linearly in `1/L` to cancel it.
//!
//! The error hint `|S(2L) − S(L)|` is a heuristic (roughly the size of the
//! `c/L` tail), not a proven bound.

use std::collections::HashMap;
use std::sync::Arc;

use crate::arith::zeta_even;
use crate::symfunc::Partition;
use crate::verify::{Check, Report};
use crate::{Error, Result};

pub const DEFAULT_LIMIT: usize = 100_000;

/// Relative tolerance for Euler's double-zeta identities.
pub const EULER_REL_TOL: f64 = 1e-6;

/// Admissible argument list `(i_1,…,i_k)` with `i_1 ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MzvArgs(Vec<u32>);

impl MzvArgs {
    pub fn new(args: Vec<u32>) -> Result<Self> {
        if args.is_empty() || args.contains(&0) {
            return Err(Error::InvalidArgument(format!(
                "bad MZV arguments {args:?}"
            )));
        }
        if args[0] < 2 {
            return Err(Error::Inadmissible(args));
        }
        Ok(MzvArgs(args))
    }

    pub fn args(&self) -> &[u32] {
        &self.0
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleEstimate {
    pub value: f64,
    pub limit: usize,
    pub extrapolated: bool,
    pub error_hint: f64,
}

impl OracleEstimate {
    pub fn relative_error(&self, exact: f64) -> f64 {
        ((self.value - exact) / exact).abs()
    }
}

/// Evaluator holding prefix-sum tables up to `2L`, shared between argument
/// lists with a common tail.
#[derive(Debug)]
pub struct Oracle {
    limit: usize,
    extrapolate: bool,
    tables: HashMap<Vec<u32>, Arc<Vec<f64>>>,
}

impl Oracle {
    pub fn new(limit: usize, extrapolate: bool) -> Self {
        assert!(limit >= 1, "summation limit must be positive");
        Oracle {
            limit,
            extrapolate,
            tables: HashMap::new(),
        }
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    /// `table[m] = Σ_{m ≥ n_1 > … > n_d ≥ 1} Π n_j^{−tail_j}` for `m ≤ 2L`.
    fn table(&mut self, tail: &[u32]) -> Arc<Vec<f64>> {
        if let Some(t) = self.tables.get(tail) {
            return Arc::clone(t);
        }
        let len = 2 * self.limit + 1;
        let table = match tail.split_first() {
            None => Arc::new(vec![1.0; len]),
            Some((&exponent, rest)) => {
                let inner = self.table(rest);
                let mut out = vec![0.0; len];
                let exp = -(exponent as i32);
                for n in 1..len {
                    out[n] = out[n - 1] + (n as f64).powi(exp) * inner[n - 1];
                }
                Arc::new(out)
            }
        };
        self.tables.insert(tail.to_vec(), Arc::clone(&table));
        table
    }

    pub fn mzv(&mut self, args: &MzvArgs) -> OracleEstimate {
        let table = self.table(args.args());
        let (at_l, at_2l) = (table[self.limit], table[2 * self.limit]);
        let extrapolated = self.extrapolate && args.args()[0] == 2;
        let value = if extrapolated {
            2.0 * at_2l - at_l
        } else {
            at_l
        };
        OracleEstimate {
            value,
            limit: self.limit,
            extrapolated,
            error_hint: (at_2l - at_l).abs(),
        }
    }

    fn sum_of(&mut self, args: impl IntoIterator<Item = MzvArgs>) -> OracleEstimate {
        let mut total = OracleEstimate {
            value: 0.0,
            limit: self.limit,
            extrapolated: false,
            error_hint: 0.0,
        };
        for a in args {
            let e = self.mzv(&a);
            total.value += e.value;
            total.error_hint += e.error_hint;
            total.extrapolated |= e.extrapolated;
        }
        total
    }

    /// `E(2n,k)` as the sum over all even compositions.
    pub fn e_sum(&mut self, n: u32, k: u32) -> OracleEstimate {
        self.sum_of(even_compositions(n, k))
    }

    /// Image of `m_λ` under `x_i ↦ 1/i²`:
    /// `(1/|Iso|)·Σ_{σ∈S_k} ζ(2λ_σ(1),…,2λ_σ(k))`, i.e. the sum over the
    /// distinct rearrangements of `2λ`.
    pub fn zt_monomial(&mut self, lambda: &Partition) -> Result<OracleEstimate> {
        if lambda.is_empty() {
            return Err(Error::InvalidArgument("empty partition".into()));
        }
        let doubled: Vec<u32> = lambda.parts().iter().map(|p| 2 * p).collect();
        let args = distinct_permutations(&doubled)
            .into_iter()
            .map(MzvArgs::new)
            .collect::<Result<Vec<_>>>()?;
        Ok(self.sum_of(args))
    }

    /// Euler's `Σ_{i=2}^{2n−1} (−1)^i ζ(i,2n−i) = ζ(2n)/2` and
    /// `Σ_{i=2}^{2n−1} ζ(i,2n−i) = ζ(2n)`, plus their consequence
    /// `E(2n,2) = (plain + alternating)/2 = (3/4)ζ(2n)`.
    pub fn euler_double_checks(&mut self, n: u32) -> Result<Report> {
        if n < 2 {
            return Err(Error::InvalidArgument(format!(
                "Euler identities need n >= 2, got {n}"
            )));
        }
        let zeta = zeta_even(n)?.to_f64();
        let (mut plain, mut alternating, mut hint) = (0.0, 0.0, 0.0);
        for i in 2..2 * n {
            let e = self.mzv(&MzvArgs::new(vec![i, 2 * n - i])?);
            plain += e.value;
            alternating += if i % 2 == 0 { e.value } else { -e.value };
            hint += e.error_hint;
        }
        let even_part = self.e_sum(n, 2);
        let mut report = Report::new("euler-double");
        let mut push = |what: &str, got: f64, want: f64| {
            let rel = ((got - want) / want).abs();
            report.push(Check::new(
                format!(
                    "{what} 2n={} rel_err={rel:.2e} error_hint={hint:.2e}",
                    2 * n
                ),
                rel <= EULER_REL_TOL,
                format!("{got:.15e}"),
                format!("{want:.15e}"),
            ));
        };
        push("alternating", alternating, zeta / 2.0);
        push("plain", plain, zeta);
        push("even-pairs", (plain + alternating) / 2.0, 0.75 * zeta);
        push(
            "even-pairs-vs-E",
            (plain + alternating) / 2.0,
            even_part.value,
        );
        Ok(report)
    }
}

/// One-off evaluation of a single multiple zeta value.
pub fn mzv_numeric(args: &MzvArgs, limit: usize, extrapolate: bool) -> OracleEstimate {
    Oracle::new(limit, extrapolate).mzv(args)
}

pub fn e_sum_numeric(n: u32, k: u32, limit: usize, extrapolate: bool) -> OracleEstimate {
    Oracle::new(limit, extrapolate).e_sum(n, k)
}

pub fn zt_monomial_numeric(
    lambda: &Partition,
    limit: usize,
    extrapolate: bool,
) -> Result<OracleEstimate> {
    Oracle::new(limit, extrapolate).zt_monomial(lambda)
}

pub fn euler_double_checks(n: u32, limit: usize, extrapolate: bool) -> Result<Report> {
    Oracle::new(limit, extrapolate).euler_double_checks(n)
}

/// All `(2a_1,…,2a_k)` with `a_j ≥ 1`, `Σ a_j = n`, in decreasing
/// lexicographic order. There are `C(n−1, k−1)` of them.
pub fn even_compositions(n: u32, k: u32) -> Vec<MzvArgs> {
    let mut out = Vec::new();
    if k == 0 || k > n {
        return out;
    }
    let mut current = Vec::with_capacity(k as usize);
    compose(n, k, &mut current, &mut out);
    out
}

fn compose(rest: u32, slots: u32, current: &mut Vec<u32>, out: &mut Vec<MzvArgs>) {
    if slots == 0 {
        if rest == 0 {
            out.push(MzvArgs(current.clone()));
        }
        return;
    }
    for a in (1..=rest + 1 - slots).rev() {
        current.push(2 * a);
        compose(rest - a, slots - 1, current, out);
        current.pop();
    }
}

/// Distinct rearrangements of `values`, in increasing lexicographic order.
pub fn distinct_permutations(values: &[u32]) -> Vec<Vec<u32>> {
    let mut v = values.to_vec();
    v.sort_unstable();
    let mut out = vec![v.clone()];
    loop {
        let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
            return out;
        };
        let j = (i..v.len())
            .rev()
            .find(|&j| v[j] > v[i - 1])
            .expect("pivot exists");
        v.swap(i - 1, j);
        v[i..].reverse();
        out.push(v.clone());
    }
}

/// `|Iso(λ)|`: the product of factorials of the part multiplicities.
pub fn iso_order(lambda: &Partition) -> u64 {
    lambda
        .multiplicities()
        .iter()
        .map(|&(_, m)| (1..=u64::from(m)).product::<u64>())
        .product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::zt_of_e;

    fn args(a: &[u32]) -> MzvArgs {
        MzvArgs::new(a.to_vec()).unwrap()
    }

    #[test]
    fn rejects_divergent() {
        assert_eq!(
            MzvArgs::new(vec![1, 2]),
            Err(Error::Inadmissible(vec![1, 2]))
        );
        assert!(MzvArgs::new(vec![]).is_err());
        assert!(MzvArgs::new(vec![2, 0]).is_err());
    }

    #[test]
    fn dp_matches_explicit_double_loop() {
        let mut brute = 0.0;
        for n1 in 1..=4u32 {
            for n2 in 1..n1 {
                brute += 1.0 / f64::from(n1 * n1 * n2 * n2);
            }
        }
        let est = mzv_numeric(&args(&[2, 2]), 4, false);
        assert!((est.value - brute).abs() < 1e-15);
        assert!(!est.extrapolated);
    }

    #[test]
    fn dp_matches_explicit_triple_loop() {
        let mut brute = 0.0;
        for n1 in 1..=9u32 {
            for n2 in 1..n1 {
                for n3 in 1..n2 {
                    brute += 1.0 / (f64::from(n1).powi(3) * f64::from(n2) * f64::from(n3).powi(2));
                }
            }
        }
        let est = mzv_numeric(&args(&[3, 1, 2]), 9, true);
        assert!((est.value - brute).abs() < 1e-15);
    }

    #[test]
    fn zeta_two_and_two_two() {
        let z2 = mzv_numeric(&args(&[2]), DEFAULT_LIMIT, false);
        assert!(z2.relative_error(std::f64::consts::PI.powi(2) / 6.0) < 1e-5);
        let z22 = mzv_numeric(&args(&[2, 2]), DEFAULT_LIMIT, true);
        assert!(z22.extrapolated);
        assert!(z22.relative_error(zt_of_e(2).to_f64()) < 1e-6);
    }

    #[test]
    fn error_hint_shrinks_with_limit() {
        for a in [&[2u32][..], &[2, 2], &[4, 2], &[2, 4, 2]] {
            let coarse = mzv_numeric(&args(a), 1000, true);
            let fine = mzv_numeric(&args(a), 2000, true);
            assert!(fine.error_hint < coarse.error_hint, "{a:?}");
        }
    }

    #[test]
    fn compositions() {
        let got: Vec<Vec<u32>> = even_compositions(3, 2)
            .iter()
            .map(|a| a.args().to_vec())
            .collect();
        assert_eq!(got, vec![vec![4, 2], vec![2, 4]]);
        let got: Vec<Vec<u32>> = even_compositions(4, 2)
            .iter()
            .map(|a| a.args().to_vec())
            .collect();
        assert_eq!(got, vec![vec![6, 2], vec![4, 4], vec![2, 6]]);
        assert_eq!(even_compositions(10, 4).len(), 84);
        assert!(even_compositions(2, 3).is_empty());
    }

    #[test]
    fn permutations_and_iso() {
        assert_eq!(distinct_permutations(&[2, 2]), vec![vec![2, 2]]);
        assert_eq!(distinct_permutations(&[4, 2]), vec![vec![2, 4], vec![4, 2]]);
        assert_eq!(distinct_permutations(&[1, 1, 2]).len(), 3);
        assert_eq!(iso_order(&Partition::new(vec![2, 1, 1, 1]).unwrap()), 6);
    }

    #[test]
    fn monomial_images() {
        let mut oracle = Oracle::new(20_000, true);
        let m11 = oracle.zt_monomial(&Partition::ones(2)).unwrap();
        let z22 = oracle.mzv(&args(&[2, 2]));
        assert_eq!(m11.value, z22.value);
        let m21 = oracle
            .zt_monomial(&Partition::new(vec![2, 1]).unwrap())
            .unwrap();
        let e62 = oracle.e_sum(3, 2);
        assert!((m21.value - e62.value).abs() < 1e-14);
        let m3 = oracle.zt_monomial(&Partition::row(3)).unwrap();
        assert!((m3.value - zeta_even(3).unwrap().to_f64()).abs() < 1e-12);
    }

    #[test]
    fn euler_identities_small_limit() {
        let r = euler_double_checks(3, 20_000, true).unwrap();
        assert!(r.passed(), "{r}");
        assert!(euler_double_checks(1, 100, true).is_err());
    }
}
