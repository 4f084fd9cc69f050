use cohomology::{build_p2xe, normalization_product, CohClass, NumericPack, Tensor, Variant};
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;
use series_core::RationalFunction;

fn koszul(g: &cohomology::Geometry, i: usize, j: usize) -> BigRational {
    if g.x.is_odd(i) && g.x.is_odd(j) {
        -BigRational::one()
    } else {
        BigRational::one()
    }
}

#[test]
fn pair_formula_matches_class_on_triple_product() {
    let g = build_p2xe();
    for i in 0..12 {
        for j in 0..12 {
            let (a, b) = (g.x.basis(i), g.x.basis(j));
            let from_class = g.e_corr_tensor(&Tensor::product(&a, &b));
            assert_eq!(from_class, g.e_corr_pair(&a, &b), "{} {}", g.x.labels[i], g.x.labels[j]);
        }
    }
}

#[test]
fn e_symmetry_with_koszul_sign() {
    let g = build_p2xe();
    for i in 0..12 {
        for j in 0..12 {
            let (a, b) = (g.x.basis(i), g.x.basis(j));
            let lhs = g.e_corr_pair(&a, &b);
            let rhs = g.e_corr_pair(&b, &a).scale(&koszul(&g, i, j));
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn single_action_agrees_with_pair_action() {
    let g = build_p2xe();
    for i in 0..12 {
        let t = g.e_corr(&g.x.basis(i));
        for j in 0..12 {
            let b = g.x.basis(j);
            let want = g.e_corr_pair(&g.x.basis(i), &b).scale(&koszul(&g, i, j));
            assert_eq!(t.apply(&b, &g.x), want);
        }
    }
}

#[test]
fn projection_formula() {
    let g = build_p2xe();
    for a in 0..g.b.dim() {
        for i in 0..12 {
            let alpha = g.b.basis(a);
            let gamma = g.x.basis(i);
            let lhs = g.pi_push(&g.x.cup(&g.pi_pull(&alpha), &gamma));
            assert_eq!(lhs, g.b.cup(&alpha, &g.pi_push(&gamma)));
        }
    }
}

#[test]
fn base_linearity() {
    let g = build_p2xe();
    for a in 0..g.b.dim() {
        let pa = g.pi_pull(&g.b.basis(a));
        let left = Tensor::product(&pa, &g.x.one());
        for i in 0..12 {
            let gamma = g.x.basis(i);
            let lhs = g.e_corr(&g.x.cup(&pa, &gamma));
            assert_eq!(lhs, left.mul(&g.e_corr(&gamma), &g.x));
        }
        for c in 0..g.b.dim() {
            let pc = g.pi_pull(&g.b.basis(c));
            let pac = g.pi_pull(&g.b.cup(&g.b.basis(a), &g.b.basis(c)));
            for i in 0..12 {
                for j in 0..12 {
                    let (x, y) = (g.x.basis(i), g.x.basis(j));
                    let lhs = g.e_corr_pair(&g.x.cup(&pa, &x), &g.x.cup(&pc, &y));
                    assert_eq!(lhs, g.x.cup(&pac, &g.e_corr_pair(&x, &y)));
                }
            }
        }
    }
}

#[test]
fn perpendicular_classes() {
    let g = build_p2xe();
    let db = g.delta_b_pulled();
    for i in (0..12).filter(|i| g.wt_basis(*i) == 0) {
        let a = g.x.basis(i);
        let sum = Tensor::product(&a, &g.x.one()).add(&Tensor::product(&g.x.one(), &a));
        assert_eq!(g.e_corr(&a), sum.mul(&db, &g.x));
    }
}

#[test]
fn pairing_with_unit() {
    let g = build_p2xe();
    for i in 0..12 {
        let a = g.x.basis(i);
        assert_eq!(g.e_corr_pair(&a, &g.x.one()), g.pi_pull_push(&a));
    }
}

#[test]
fn weight_spaces_span() {
    let g = build_p2xe();
    let mut counts = [0usize; 3];
    for i in 0..12 {
        let w = g.wt_basis(i);
        assert!((-1..=1).contains(&w));
        counts[(w + 1) as usize] += 1;
    }
    assert_eq!(counts.iter().sum::<usize>(), 12);
    assert_eq!(counts, [3, 6, 3]);
}

fn class_strategy() -> impl Strategy<Value = CohClass> {
    proptest::collection::vec(-3i64..=3, 12)
        .prop_map(|v| CohClass(v.into_iter().map(|n| BigRational::from_integer(n.into())).collect()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn graded_commutative(i in 0usize..12, j in 0usize..12) {
        let g = build_p2xe();
        let ab = g.x.cup(&g.x.basis(i), &g.x.basis(j));
        let ba = g.x.cup(&g.x.basis(j), &g.x.basis(i));
        prop_assert_eq!(ab, ba.scale(&koszul(&g, i, j)));
    }

    #[test]
    fn pair_action_is_bilinear(a in class_strategy(), b in class_strategy(), c in class_strategy()) {
        let g = build_p2xe();
        let lhs = g.e_corr_pair(&a.add(&b), &c);
        prop_assert_eq!(lhs, g.e_corr_pair(&a, &c).add(&g.e_corr_pair(&b, &c)));
    }

    #[test]
    fn log_derivative_of_normalization(e in 0i64..6, c1 in -3i64..3) {
        // D_q F = (e(B) + c1N.c1TB + c1N^2)(G_2 + 1/24) F with the q-tail of G_2 + 1/24 = Σ σ_1(n) q^n
        let pack = NumericPack { e_b: e, c1n_c1tb: c1, c1n_sq: 0 };
        let n = 12;
        let f = normalization_product(&pack, n, 0, Variant::Pt);
        let sigma = series_core::FourierSeries::from_fn(0, n, |k| {
            let s: i64 = (1..=k.max(0)).filter(|d| k % d == 0).sum();
            RationalFunction::from_int(s)
        });
        let rhs = sigma.mul(&f).scale(&BigRational::from_integer(pack.q_exponent().into()));
        prop_assert!(f.d_q().agrees_through(&rhs, n));
    }
}
