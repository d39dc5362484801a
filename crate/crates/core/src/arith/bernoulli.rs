use std::sync::{LazyLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{binomial, Rational};

// Append-only memo of B_0, B_1, ...; fills under the write lock are idempotent.
static MEMO: LazyLock<RwLock<Vec<Rational>>> = LazyLock::new(|| RwLock::new(vec![Rational::one()]));

/// Bernoulli number `B_m` with the convention `B_1 = −1/2`.
///
/// Uses the recurrence `Σ_{j=0}^{m} C(m+1, j) B_j = 0`, memoized.
pub fn bernoulli(m: usize) -> Rational {
    if let Some(b) = MEMO.read().unwrap().get(m) {
        return b.clone();
    }
    let mut table = MEMO.write().unwrap();
    while table.len() <= m {
        let next = next_bernoulli(&table);
        table.push(next);
    }
    table[m].clone()
}

fn next_bernoulli(known: &[Rational]) -> Rational {
    let m = known.len();
    if m >= 3 && m % 2 == 1 {
        return Rational::zero();
    }
    let m1 = (m + 1) as u64;
    let sum = known
        .iter()
        .enumerate()
        .filter(|(_, b)| !b.is_zero())
        .fold(Rational::zero(), |acc, (j, b)| {
            acc + Rational::from_integer(binomial(m1, j as u64)) * b
        });
    -sum / Rational::from_integer(BigInt::from(m1))
}

/// Snapshot of `B_0..=B_M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BernoulliTable {
    values: Vec<Rational>,
}

impl BernoulliTable {
    pub fn up_to(max: usize) -> Self {
        bernoulli(max);
        let values = MEMO.read().unwrap()[..=max].to_vec();
        BernoulliTable { values }
    }

    pub fn get(&self, m: usize) -> Option<&Rational> {
        self.values.get(m)
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }
}
