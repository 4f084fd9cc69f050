use std::collections::BTreeSet;

use num_rational::BigRational;
use partitions::*;
use proptest::prelude::*;
use series_core::arith::int;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn enumeration_is_complete(n in 0i64..=20) {
        let ps = partitions(n);
        let distinct: BTreeSet<_> = ps.iter().cloned().collect();
        prop_assert_eq!(distinct.len(), ps.len());
        for p in &ps {
            prop_assert_eq!(p.size(), n);
            prop_assert!(p.parts().windows(2).all(|w| w[0] >= w[1]));
        }
        // p(n) from 1/(q)_inf
        let count = euler_product(n).inv().unwrap().coeff(n);
        prop_assert_eq!(BigRational::from_integer(ps.len().into()), count);
    }

    #[test]
    fn bo_is_symmetric(n in 2usize..=3, swap in 0usize..3) {
        let (i, j) = [(0, 1), (0, 2), (1, 2)][swap % if n == 2 { 1 } else { 3 }];
        let f = bloch_okounkov(n, 4, &vec![3; n]);
        for (e, c) in f.terms() {
            let mut e2 = e.clone();
            e2.swap(i, j);
            prop_assert_eq!(&f.coeff(&e2), c);
        }
    }

    #[test]
    fn tail_regularization_is_exact(cutoff in 0i64..=6, x in 1i64..=5) {
        let a = bloch_okounkov_cutoff(1, cutoff, cutoff + 2, &[x]);
        let b = bloch_okounkov_cutoff(1, cutoff + 2, cutoff + 2, &[x]);
        for e in -1..=x {
            prop_assert!(a.coeff(&[e]).agrees_through(&b.coeff(&[e]), cutoff));
        }
    }

    #[test]
    fn bo_parity(n in 1usize..=3) {
        // F_n(-x) = (-1)^n F_n(x)
        let f = bloch_okounkov(n, 4, &vec![3; n]);
        for (e, _) in f.terms() {
            let deg: i64 = e.iter().sum();
            prop_assert_eq!((deg + n as i64) % 2, 0);
        }
    }

    #[test]
    fn exp_is_a_homomorphism(a in -5i64..=5, b in -5i64..=5) {
        let (a, b) = (int(a), int(b));
        let lhs = Laurent::exp(&a, 6).mul(&Laurent::exp(&b, 6));
        prop_assert_eq!(lhs, Laurent::exp(&(a + b), 6));
    }
}

#[test]
fn c2e_stationary_small_orders() {
    for n in 0..=3 {
        for (q, x) in [(2, 2), (4, 3)] {
            assert!(c2e_pt_stationary(n, q, x).passed(), "n={n} q={q} x={x}");
        }
    }
}

#[test]
fn pipt_small_orders() {
    for (q, x) in [(1, 1), (3, 4), (5, 2)] {
        assert!(c2e_pipt_closed_form(q, x).passed(), "q={q} x={x}");
    }
}
