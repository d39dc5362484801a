use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::sync::{Arc, LazyLock, RwLock};

use num_traits::{One, Signed, Zero};

use super::Partition;
use crate::arith::Rational;

/// Symmetric function in the monomial basis, truncated above `weight_cap`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymPoly {
    terms: BTreeMap<Partition, Rational>,
    weight_cap: usize,
}

impl SymPoly {
    pub fn zero(weight_cap: usize) -> Self {
        SymPoly {
            terms: BTreeMap::new(),
            weight_cap,
        }
    }

    pub fn one(weight_cap: usize) -> Self {
        SymPoly::monomial(Partition::empty(), Rational::one(), weight_cap)
    }

    /// `c·m_λ`; zero if `|λ|` exceeds the cap.
    pub fn monomial(lambda: Partition, c: Rational, weight_cap: usize) -> Self {
        let mut out = SymPoly::zero(weight_cap);
        out.add_term(lambda, c);
        out
    }

    pub fn weight_cap(&self) -> usize {
        self.weight_cap
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.terms
            .get(lambda)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Weights of the nonzero homogeneous components, ascending.
    pub fn weights(&self) -> Vec<usize> {
        let mut w: Vec<usize> = self.terms.keys().map(Partition::weight).collect();
        w.sort_unstable();
        w.dedup();
        w
    }

    pub fn homogeneous_component(&self, weight: usize) -> SymPoly {
        SymPoly {
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| l.weight() == weight)
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
            weight_cap: self.weight_cap,
        }
    }

    pub fn add_term(&mut self, lambda: Partition, c: Rational) {
        if c.is_zero() || lambda.weight() > self.weight_cap {
            return;
        }
        match self.terms.entry(lambda) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Remove the term for `λ`, returning its coefficient.
    pub fn remove_term(&mut self, lambda: &Partition) -> Rational {
        self.terms.remove(lambda).unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> SymPoly {
        if c.is_zero() {
            return SymPoly::zero(self.weight_cap);
        }
        SymPoly {
            terms: self.terms.iter().map(|(l, v)| (l.clone(), v * c)).collect(),
            weight_cap: self.weight_cap,
        }
    }

    pub fn with_cap(&self, weight_cap: usize) -> SymPoly {
        let mut out = SymPoly::zero(weight_cap);
        for (l, c) in &self.terms {
            out.add_term(l.clone(), c.clone());
        }
        out
    }
}

/// Product of two symmetric functions in the monomial basis, truncated at
/// the smaller weight cap.
pub fn monomial_mul(a: &SymPoly, b: &SymPoly) -> SymPoly {
    let cap = a.weight_cap.min(b.weight_cap);
    let mut out = SymPoly::zero(cap);
    for (la, ca) in &a.terms {
        for (lb, cb) in &b.terms {
            if la.weight() + lb.weight() > cap {
                continue;
            }
            let coef = ca * cb;
            for (nu, count) in monomial_product(la, lb).iter() {
                out.add_term(nu.clone(), &coef * Rational::from_integer((*count).into()));
            }
        }
    }
    out
}

type ProductTable = Vec<(Partition, u64)>;
type ProductCache = HashMap<(Partition, Partition), Arc<ProductTable>>;

static PRODUCTS: LazyLock<RwLock<ProductCache>> = LazyLock::new(|| RwLock::new(HashMap::new()));

/// Structure constants of `m_λ·m_μ = Σ_ν c_ν m_ν`.
///
/// `c_ν` is the coefficient of the monomial `x^ν` in the product of the
/// expansions of `m_λ` and `m_μ` in `ℓ(λ)+ℓ(μ)` variables: the number of
/// ways to write the exponent vector `ν` as `α + β` with `α` a
/// rearrangement of `λ` and `β` a rearrangement of `μ` (both zero-padded).
pub fn monomial_product(lambda: &Partition, mu: &Partition) -> Arc<ProductTable> {
    let key = if lambda <= mu {
        (lambda.clone(), mu.clone())
    } else {
        (mu.clone(), lambda.clone())
    };
    if let Some(hit) = PRODUCTS.read().unwrap().get(&key) {
        return Arc::clone(hit);
    }
    let table = Arc::new(compute_product(&key.0, &key.1));
    PRODUCTS
        .write()
        .unwrap()
        .entry(key)
        .or_insert_with(|| Arc::clone(&table))
        .clone()
}

fn compute_product(lambda: &Partition, mu: &Partition) -> ProductTable {
    let weight = lambda.weight() + mu.weight();
    let min_len = lambda.len().max(mu.len());
    let max_len = lambda.len() + mu.len();
    Partition::all(weight)
        .into_iter()
        .filter(|nu| (min_len..=max_len).contains(&nu.len()))
        .filter_map(|nu| {
            let mut a = multiset_with_zeros(lambda, nu.len());
            let mut b = multiset_with_zeros(mu, nu.len());
            let count = count_splits(nu.parts(), &mut a, &mut b);
            (count > 0).then_some((nu, count))
        })
        .collect()
}

fn multiset_with_zeros(p: &Partition, slots: usize) -> Vec<(u32, u32)> {
    let mut m = p.multiplicities();
    if slots > p.len() {
        m.push((0, (slots - p.len()) as u32));
    }
    m
}

// Number of ways to assign, position by position, a value from `a` and a
// value from `b` summing to the entry of `nu`, using each multiset exactly.
fn count_splits(nu: &[u32], a: &mut [(u32, u32)], b: &mut [(u32, u32)]) -> u64 {
    let Some((&target, rest)) = nu.split_first() else {
        return 1;
    };
    let mut total = 0;
    for ia in 0..a.len() {
        let (va, ca) = a[ia];
        if ca == 0 || va > target {
            continue;
        }
        let need = target - va;
        let Some(ib) = b.iter().position(|&(vb, cb)| vb == need && cb > 0) else {
            continue;
        };
        a[ia].1 -= 1;
        b[ib].1 -= 1;
        total += count_splits(rest, a, b);
        a[ia].1 += 1;
        b[ib].1 += 1;
    }
    total
}

impl Add<&SymPoly> for &SymPoly {
    type Output = SymPoly;
    fn add(self, rhs: &SymPoly) -> SymPoly {
        let mut out = self.with_cap(self.weight_cap.min(rhs.weight_cap));
        for (l, c) in &rhs.terms {
            out.add_term(l.clone(), c.clone());
        }
        out
    }
}

impl Sub<&SymPoly> for &SymPoly {
    type Output = SymPoly;
    fn sub(self, rhs: &SymPoly) -> SymPoly {
        let mut out = self.with_cap(self.weight_cap.min(rhs.weight_cap));
        for (l, c) in &rhs.terms {
            out.add_term(l.clone(), -c.clone());
        }
        out
    }
}

impl Mul<&SymPoly> for &SymPoly {
    type Output = SymPoly;
    fn mul(self, rhs: &SymPoly) -> SymPoly {
        monomial_mul(self, rhs)
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (l, c)) in self.terms.iter().enumerate() {
            let sep = match (i, c.is_negative()) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            let mag = c.abs();
            if mag.is_one() {
                write!(f, "{sep}m{l}")?;
            } else {
                write!(f, "{sep}{mag}*m{l}")?;
            }
        }
        Ok(())
    }
}
