use cohomology::{build_p2xe, normalization_product, CohClass, NumericPack, Tensor, Variant};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use series_core::RationalFunction;

fn r(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

#[test]
fn p2xe_model_shape() {
    let g = build_p2xe();
    assert_eq!(g.x.dim(), 12);
    assert!(g.x.check_axioms());
    let a = g.parse_class("a").unwrap();
    let b = g.parse_class("b").unwrap();
    assert_eq!(g.x.cup(&a, &b), g.parse_class("p").unwrap());
    assert_eq!(g.x.cup(&b, &a), g.parse_class("-p").unwrap());
    assert!(g.x.cup(&a, &a).is_zero());
    assert_eq!(g.x.integrate(&g.parse_class("H^2p").unwrap()), r(1));
}

#[test]
fn weights_on_p2xe() {
    let g = build_p2xe();
    let wt = |s: &str| g.wt_of(&g.parse_class(s).unwrap()).unwrap();
    assert_eq!(wt("p"), 1);
    assert_eq!(wt("H"), -1);
    assert_eq!(wt("1"), -1);
    assert_eq!(wt("H^2p"), 1);
    assert_eq!(wt("Ha"), 0);
    assert_eq!(wt("H^2b"), 0);
    assert!(g.wt_of(&g.parse_class("p + H").unwrap()).is_err());
}

#[test]
fn fiber_integration() {
    let g = build_p2xe();
    for a in 0..3 {
        let hp = g.x.basis(4 * a + 3);
        assert_eq!(g.pi_push(&hp), g.b.basis(a));
        assert!(g.pi_push(&g.x.basis(4 * a)).is_zero());
    }
}

#[test]
fn c3_vanishes_for_product() {
    assert_eq!(NumericPack::p2xe().c3(), 0);
}

#[test]
fn e_of_unit_and_w() {
    let g = build_p2xe();
    assert_eq!(g.e_corr(&g.x.one()), g.delta_b_pulled());
    assert_eq!(g.e_corr(&g.w), g.delta_x());
}

#[test]
fn e_of_w_pair_is_identity() {
    let g = build_p2xe();
    for i in 0..g.x.dim() {
        let e = g.x.basis(i);
        assert_eq!(g.e_corr_pair(&g.w, &e), e);
        assert_eq!(g.e_corr_tensor(&Tensor::product(&g.w, &e)), e);
    }
}

#[test]
fn e_of_point_class() {
    // ℰ(H^2 p) = H^2 p ⊠ H^2 + H^2 ⊠ H^2 p plus odd terms
    let g = build_p2xe();
    let t = g.e_corr(&g.parse_class("H^2p").unwrap());
    let even: Tensor = Tensor {
        terms: t
            .terms
            .iter()
            .filter(|((i, j), _)| !g.x.is_odd(*i) && !g.x.is_odd(*j))
            .map(|(k, v)| (*k, v.clone()))
            .collect(),
    };
    let h2 = g.parse_class("H^2").unwrap();
    let h2p = g.parse_class("H^2p").unwrap();
    assert_eq!(even, Tensor::product(&h2p, &h2).add(&Tensor::product(&h2, &h2p)));
    assert!(t.terms.len() > even.terms.len());
}

#[test]
fn diagonal_acts_as_identity() {
    let g = build_p2xe();
    let d = g.delta_x();
    for i in 0..12 {
        assert_eq!(d.apply(&g.x.basis(i), &g.x), g.x.basis(i));
    }
}

#[test]
fn parser_rejects_garbage() {
    let g = build_p2xe();
    assert!(g.parse_class("Q").is_err());
    assert!(g.parse_class("H*").is_err());
    assert_eq!(g.parse_class("2*H - H").unwrap(), g.parse_class("H").unwrap());
    assert_eq!(g.render(&g.parse_class("3H^2").unwrap()), "3*H^2");
}

/// Independent expansion of `∏(1-q^m)^{-e}` via `exp(e Σ σ_1(n) q^n / n)`
/// computed as the recurrence `n c_n = e Σ_{k=1}^n σ_1(k) c_{n-k}`.
fn eta_power(e: i64, n: usize) -> Vec<BigRational> {
    let sigma = |k: usize| (1..=k).filter(|d| k.is_multiple_of(*d)).sum::<usize>() as i64;
    let mut c = vec![BigRational::one()];
    for m in 1..=n {
        let s: BigRational = (1..=m).map(|k| r(e * sigma(k)) * &c[m - k]).sum();
        c.push(s / r(m as i64));
    }
    c
}

#[test]
fn normalization_for_p2xe() {
    let f = normalization_product(&NumericPack::p2xe(), 20, 4, Variant::Pt);
    let want = eta_power(3, 20);
    for (n, w) in want.iter().enumerate() {
        assert_eq!(f.coeff(n as i64), RationalFunction::constant(w.clone()), "q^{n}");
    }
    assert_eq!(want[1], r(3));
    assert_eq!(want[2], r(9));
}

#[test]
fn normalization_trivial_pack() {
    let f = normalization_product(&NumericPack::default(), 10, 3, Variant::Pt);
    assert_eq!(f.coeff(0), RationalFunction::one());
    for n in 1..=10 {
        assert!(f.coeff(n).is_zero());
    }
}

#[test]
fn normalization_pi_pt_drops_p_factors() {
    let pack = NumericPack { e_b: 2, c1n_c1tb: 0, c1n_sq: 1 };
    let pt = normalization_product(&pack, 4, 3, Variant::Pt);
    let pipt = normalization_product(&pack, 4, 3, Variant::PiPt);
    let want = eta_power(3, 4);
    for n in 0..=4 {
        assert_eq!(pipt.coeff(n), RationalFunction::constant(want[n as usize].clone()));
    }
    assert_ne!(pt.coeff(1), pipt.coeff(1));
    // q^1 from (1 - p^l q)^{60 l}, l = 1..3
    let lin = pt.coeff(1).sub(&pipt.coeff(1));
    let want = (1..=3).fold(RationalFunction::zero(), |acc, l| acc.add(&RationalFunction::p_pow(l).scale_by(&r(-60 * l))));
    assert_eq!(lin, want);
}

#[test]
fn pack_json_roundtrip() {
    let p = NumericPack::from_json(r#"{"eB": 24, "c1N_c1TB": 0, "c1N_sq": 0}"#).unwrap();
    assert_eq!(p.e_b, 24);
    let back: NumericPack = serde_json::from_str(&serde_json::to_string(&p).unwrap()).unwrap();
    assert_eq!(back, p);
    assert!(NumericPack::from_json(r#"{"eB": 1}"#).is_err());
    let _ = BigInt::zero();
    let _ = CohClass::zero(1);
}
