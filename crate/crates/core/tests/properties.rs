use evenzeta::arith::{int, ratio, zt_of_h};
use evenzeta::closed_form::{e_row_sum, e_sum_theorem1};
use evenzeta::series::{
    cot_series, f_expand, g_k_series, pq_polynomials, sinc_series, GradedSeries,
};
use evenzeta::symfunc::{basis_e, basis_h, basis_p, n_nk, zt, Partition, SymPoly};
use num_traits::{Signed, Zero};
use proptest::prelude::*;

#[test]
fn e_sums_are_positive_multiples_of_pi_power() {
    for n in 1..=40 {
        for k in 1..=n {
            let e = e_sum_theorem1(n, k).unwrap();
            assert_eq!(e.weight(), 2 * n);
            assert!(e.coefficient().is_positive());
        }
    }
}

#[test]
fn sinc_times_reciprocal_is_one() {
    let s = sinc_series(40);
    assert_eq!(&s * &s.reciprocal().unwrap(), GradedSeries::one(40));
}

#[test]
fn setting_s_to_one_gives_csc() {
    let f = f_expand(20, 20).unwrap();
    for n in 1..=20u32 {
        assert_eq!(f.row_sum(n as usize), e_row_sum(n).unwrap().coeff(n));
        assert_eq!(f.row_sum(n as usize), zt_of_h(n).coeff(n));
    }
}

#[test]
fn g_k_is_the_s_coefficient_and_vanishes_below_k() {
    let f = f_expand(14, 14).unwrap();
    for k in 0..=14 {
        let g = g_k_series(k, 14).unwrap();
        assert_eq!(g, f.s_coefficient(k), "k={k}");
        for n in 0..k {
            assert!(g.coeff(n).is_zero(), "G_{k} has a t^{n} term");
        }
    }
}

// The proof of the depth formula keeps only the degree >= k part of
// (1/2)(1 − cot)·Σ_j (−4x)^j C(2k−2j−1,k)/(2^{2k−2}(2j+1)!); the discarded
// part must be exactly the low-degree difference from G_k.
#[test]
fn discarded_low_degree_terms() {
    let order = 16;
    let cot = cot_series(order);
    let half_one_minus_cot = (&GradedSeries::one(order) - &cot).scale(&ratio(1, 2));
    for k in 1..=12u32 {
        let (p, _) = pq_polynomials(k);
        // the polynomial sum equals −2·P_k
        let poly = p.poly.scale(&int(-2)).to_graded(order);
        let expr = &half_one_minus_cot * &poly;
        let g = g_k_series(k as usize, order).unwrap();
        let diff = &g - &expr;
        for n in k as usize..=order {
            assert!(diff.coeff(n).is_zero(), "k={k} n={n}");
        }
    }
}

#[test]
fn newton_h_p_recurrence_and_row_sums() {
    for r in 1..=10 {
        let lhs = (1..=r).fold(SymPoly::zero(12), |acc, i| {
            &acc + &(&basis_p(i, 12).unwrap() * &basis_h(r - i, 12).unwrap())
        });
        assert_eq!(lhs, basis_h(r, 12).unwrap().scale(&int(r as i64)));
        let rows = (1..=r).fold(SymPoly::zero(12), |acc, k| &acc + &n_nk(r, k, 12).unwrap());
        assert_eq!(rows, basis_h(r, 12).unwrap());
    }
}

#[test]
fn zt_of_e_through_p_basis() {
    for i in 0..=10 {
        assert_eq!(
            zt(&basis_e(i, 12).unwrap()).unwrap(),
            evenzeta::zt_of_e(i as u32)
        );
    }
}

fn arb_sympoly(max_weight: usize) -> impl Strategy<Value = SymPoly> {
    let parts = (1..=max_weight)
        .flat_map(Partition::all)
        .collect::<Vec<_>>();
    prop::collection::vec((prop::sample::select(parts), -5i64..6, 1i64..4), 1..4).prop_map(
        |terms| {
            let mut p = SymPoly::zero(12);
            for (l, n, d) in terms {
                p.add_term(l, ratio(n, d));
            }
            p
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn zt_is_multiplicative(a in arb_sympoly(5), b in arb_sympoly(5)) {
        let product = &a * &b;
        prop_assert_eq!(zt(&product).unwrap(), &zt(&a).unwrap() * &zt(&b).unwrap());
    }

    #[test]
    fn zt_is_additive(a in arb_sympoly(6), b in arb_sympoly(6)) {
        prop_assert_eq!(zt(&(&a + &b)).unwrap(), &zt(&a).unwrap() + &zt(&b).unwrap());
    }
}
