//! Symmetric functions of bounded weight in the monomial basis, the families
//! `e_i`, `h_i`, `p_i`, `N_{n,k}`, and the map `Zt: p_i ↦ ζ(2i)`.
//!
//! Products are exact in infinitely many variables: an identity between
//! symmetric functions of weight at most `M` holds if and only if it holds
//! in `M` variables.

mod identities;
mod partition;
mod pbasis;
mod sympoly;

use num_traits::One;

pub use identities::{
    infprod_side, nexp_side, sfi_sides, verify_basis_images, verify_infprod, verify_infprod_with,
    verify_newton, verify_nexp, verify_nexp_with, verify_sfi, verify_sfi_with, verify_zt_nnk,
};
pub use partition::Partition;
pub use pbasis::{to_p_basis, zt};
pub use sympoly::{monomial_mul, monomial_product, SymPoly};

use crate::arith::Rational;
use crate::{Error, Result};

pub const DEFAULT_WEIGHT_CAP: usize = 12;

fn check_cap(weight: usize, cap: usize) -> Result<()> {
    if weight > cap {
        Err(Error::WeightExceedsCap { weight, cap })
    } else {
        Ok(())
    }
}

fn sum_of(parts: impl IntoIterator<Item = Partition>, cap: usize) -> SymPoly {
    let mut out = SymPoly::zero(cap);
    for p in parts {
        out.add_term(p, Rational::one());
    }
    out
}

/// Elementary symmetric function `e_i = m_{1^i}`.
pub fn basis_e(i: usize, cap: usize) -> Result<SymPoly> {
    check_cap(i, cap)?;
    Ok(sum_of([Partition::ones(i)], cap))
}

/// Complete homogeneous symmetric function `h_i = Σ_{λ⊢i} m_λ`.
pub fn basis_h(i: usize, cap: usize) -> Result<SymPoly> {
    check_cap(i, cap)?;
    Ok(sum_of(Partition::all(i), cap))
}

/// Power sum `p_i = m_{(i)}`; `p_0 = 1`.
pub fn basis_p(i: usize, cap: usize) -> Result<SymPoly> {
    check_cap(i, cap)?;
    Ok(sum_of([Partition::row(i as u32)], cap))
}

/// `N_{n,k}`: sum of `m_λ` over partitions of `n` with exactly `k` parts.
/// Zero when `k > n`.
pub fn n_nk(n: usize, k: usize, cap: usize) -> Result<SymPoly> {
    check_cap(n, cap)?;
    Ok(sum_of(Partition::with_length(n, k), cap))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn m(parts: &[u32]) -> SymPoly {
        SymPoly::monomial(Partition::new(parts.to_vec()).unwrap(), int(1), 12)
    }

    #[test]
    fn bases() {
        assert_eq!(basis_e(2, 12).unwrap(), m(&[1, 1]));
        assert_eq!(basis_h(2, 12).unwrap(), &m(&[2]) + &m(&[1, 1]));
        assert_eq!(basis_p(3, 12).unwrap(), m(&[3]));
        assert_eq!(basis_p(0, 12).unwrap(), SymPoly::one(12));
        assert!(matches!(
            basis_h(13, 12),
            Err(Error::WeightExceedsCap {
                weight: 13,
                cap: 12
            })
        ));
    }

    #[test]
    fn n_nk_examples() {
        assert_eq!(n_nk(3, 2, 12).unwrap(), m(&[2, 1]));
        assert_eq!(n_nk(4, 2, 12).unwrap(), &m(&[3, 1]) + &m(&[2, 2]));
        for k in 1..=6 {
            assert_eq!(n_nk(k, k, 12).unwrap(), basis_e(k, 12).unwrap());
        }
        assert!(n_nk(2, 3, 12).unwrap().is_zero());
    }

    #[test]
    fn newton_weight_two() {
        let e1 = basis_e(1, 12).unwrap();
        let e2 = basis_e(2, 12).unwrap();
        assert_eq!(&(&e1 * &e1) - &e2.scale(&int(2)), m(&[2]));
    }

    #[test]
    fn n_nk_rows_sum_to_h() {
        for n in 1..=10 {
            let total = (1..=n).fold(SymPoly::zero(12), |acc, k| &acc + &n_nk(n, k, 12).unwrap());
            assert_eq!(total, basis_h(n, 12).unwrap());
        }
    }
}
