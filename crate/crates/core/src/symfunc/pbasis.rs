use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, LazyLock, RwLock};

use num_bigint::BigInt;
use num_traits::Zero;

use super::{check_cap, monomial_mul, Partition, SymPoly};
use crate::arith::{zeta_even, PiValue, Rational};
use crate::linalg::invert;
use crate::Result;

/// Change of basis at one weight: `inverse[λ][μ]` is the coefficient of
/// `p_λ` in `m_μ`.
struct Transition {
    index: HashMap<Partition, usize>,
    partitions: Vec<Partition>,
    inverse: Vec<Vec<Rational>>,
}

static TRANSITIONS: LazyLock<RwLock<HashMap<usize, Arc<Transition>>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

fn transition(weight: usize) -> Result<Arc<Transition>> {
    if let Some(t) = TRANSITIONS.read().unwrap().get(&weight) {
        return Ok(Arc::clone(t));
    }
    let partitions = Partition::all(weight);
    let index: HashMap<Partition, usize> = partitions
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    // column λ holds the monomial expansion of p_λ
    let size = partitions.len();
    let mut matrix = vec![vec![BigInt::zero(); size]; size];
    for (col, lambda) in partitions.iter().enumerate() {
        let p_lambda = lambda
            .parts()
            .iter()
            .fold(SymPoly::one(weight), |acc, &part| {
                monomial_mul(
                    &acc,
                    &SymPoly::monomial(
                        Partition::row(part),
                        Rational::from_integer(1.into()),
                        weight,
                    ),
                )
            });
        for (mu, c) in p_lambda.terms() {
            debug_assert!(c.is_integer());
            matrix[index[mu]][col] = c.to_integer();
        }
    }
    let inverse = invert(&matrix)?;
    let t = Arc::new(Transition {
        index,
        partitions,
        inverse,
    });
    Ok(TRANSITIONS
        .write()
        .unwrap()
        .entry(weight)
        .or_insert_with(|| Arc::clone(&t))
        .clone())
}

/// Coordinates of `a` in the power-sum basis `p_λ = Π p_{λ_i}`, homogeneous
/// component by component.
pub fn to_p_basis(a: &SymPoly) -> Result<BTreeMap<Partition, Rational>> {
    let mut out = BTreeMap::new();
    for w in a.weights() {
        check_cap(w, a.weight_cap())?;
        let t = transition(w)?;
        let component = a.homogeneous_component(w);
        for (row, lambda) in t.partitions.iter().enumerate() {
            let c = component.terms().fold(Rational::zero(), |acc, (mu, v)| {
                let m = &t.inverse[row][t.index[mu]];
                if m.is_zero() {
                    acc
                } else {
                    acc + m * v
                }
            });
            if !c.is_zero() {
                out.insert(lambda.clone(), c);
            }
        }
    }
    Ok(out)
}

/// `Zt`: the algebra map `p_i ↦ ζ(2i)` (equivalently `x_i ↦ 1/i²`).
pub fn zt(a: &SymPoly) -> Result<PiValue> {
    let coords = to_p_basis(a)?;
    let mut total = PiValue::zero();
    for (lambda, c) in coords {
        let image = lambda
            .parts()
            .iter()
            .try_fold(PiValue::one(), |acc, &part| {
                zeta_even(part).map(|z| &acc * &z)
            })?;
        total = &total + &image.scale(&c);
    }
    Ok(total)
}
