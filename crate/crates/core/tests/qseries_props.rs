use num_bigint::BigInt;
use proptest::prelude::*;

use superbott_core::partitions::partitions_in_box;
use superbott_core::qseries::{ci_codim, fact_ring_rank, flag_poincare, gaussian_binomial, q_factorial};
use superbott_core::HilbertSeries;

/// Schubert cell count: `t^{2|λ|}` summed over `λ` in a `q × (n − q)` box.
fn schubert_cells(n: usize, q: usize) -> HilbertSeries {
    let mut coeffs = vec![BigInt::from(0); 2 * q * (n - q) + 1];
    for lam in partitions_in_box(q, n - q) {
        coeffs[2 * lam.size()] += 1;
    }
    HilbertSeries::from_coeffs(coeffs)
}

#[test]
fn grassmannian_poincare_counts_schubert_cells() {
    for n in 0..=8usize {
        for q in 0..=n {
            let g = gaussian_binomial(n, q).unwrap();
            assert_eq!(g, schubert_cells(n, q), "Gr({q}, {n})");
            assert_eq!(g, flag_poincare(&[q, n - q]).unwrap());
        }
    }
    assert!(gaussian_binomial(2, 3).is_err());
}

#[test]
fn examples() {
    assert_eq!(gaussian_binomial(2, 1).unwrap().to_string(), "1 + t^2");
    assert_eq!(gaussian_binomial(4, 2).unwrap().to_string(), "1 + t^2 + 2 t^4 + t^6 + t^8");
    assert_eq!(flag_poincare(&[1, 1, 1]).unwrap(), q_factorial(3));
    assert_eq!(fact_ring_rank(&[2, 1, 3]), 60u32.into());
    assert_eq!(ci_codim(1, 1, 3, 1, 0).unwrap(), 2);
    assert!(ci_codim(2, 2, 4, 1, 1).is_err());
}

fn dvec() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0usize..=4, 1..=4).prop_filter("sum <= 8", |v| v.iter().sum::<usize>() <= 8)
}

proptest! {
    #[test]
    fn flag_poincare_is_palindromic_with_rank_at_one(d in dvec()) {
        let f = flag_poincare(&d).unwrap();
        prop_assert!(f.is_palindromic() && f.is_nonnegative() && f.is_even_supported());
        prop_assert_eq!(f.eval_at_one(), BigInt::from(fact_ring_rank(&d)));
    }

    #[test]
    fn flag_poincare_is_a_product_of_grassmannians(d in dvec()) {
        let mut acc = HilbertSeries::one();
        let mut rest: usize = d.iter().sum();
        for &k in &d {
            acc = acc.mul(&gaussian_binomial(rest, k).unwrap());
            rest -= k;
        }
        prop_assert_eq!(acc, flag_poincare(&d).unwrap());
    }

    #[test]
    fn flag_poincare_ignores_block_order(mut d in dvec()) {
        let f = flag_poincare(&d).unwrap();
        d.reverse();
        prop_assert_eq!(f, flag_poincare(&d).unwrap());
    }

    #[test]
    fn exact_division_round_trips(a in prop::collection::vec(-4i64..=4, 0..6), b in prop::collection::vec(-4i64..=4, 1..4)) {
        let a = HilbertSeries::from_i64(&a);
        let b = HilbertSeries::from_i64(&b);
        prop_assume!(!b.is_zero());
        prop_assert_eq!(a.mul(&b).div_exact(&b).unwrap(), a);
    }
}
