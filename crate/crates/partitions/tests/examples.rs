use num_rational::BigRational;
use partitions::c2e::pochhammer;
use partitions::*;
use qjac_ring::{evaluate, generator_expansion, parse_poly, Generator, MeroQJac, SeriesName};
use series_core::arith::{factorial, int, rat};
use series_core::{to_jet, Coeff, JetSeries, QSeries, TPoly};

#[test]
fn partition_counts() {
    let counts: Vec<usize> = (0..=10).map(|n| partitions(n).len()).collect();
    assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    assert_eq!(partitions_up_to(4).len(), 12);
    assert_eq!(Partition::new(vec![3, 1, 1]).part(4), 0);
}

#[test]
fn bo_empty_partition_term() {
    let f = bloch_okounkov(1, 4, &[5]);
    let q0 = |e: i64| f.coeff(&[e]).coeff(0);
    assert_eq!(q0(-1), int(1));
    assert_eq!(q0(0), int(0));
    assert_eq!(q0(1), rat(-1, 24));
    assert_eq!(q0(3), rat(7, 5760));
}

#[test]
fn bo_first_q_coefficient() {
    // λ = (1) adds e^{x/2} - e^{-x/2}; the product factor removes one copy of the tail
    let f = bloch_okounkov(1, 4, &[7]);
    for k in -1..=7 {
        let want = if k > 0 && k % 2 == 1 {
            int(2) * rat(1, 2).pow(k as i32) / BigRational::from_integer(factorial(k as u64))
        } else {
            int(0)
        };
        assert_eq!(f.coeff(&[k]).coeff(1), want, "x^{k}");
    }
}

#[test]
fn bo_one_point_is_inverse_theta() {
    let (q, x) = (8, 6);
    let f = bloch_okounkov(1, q, &[x]);
    let theta = to_jet(&evaluate(&MeroQJac::generator(Generator::Theta), q), x + 2).unwrap();
    let mut th = JetSeries::new(vec!["x1".into()], theta.lowpow().to_vec(), theta.trunc().to_vec(), q);
    for (e, c) in theta.terms() {
        th.add_term(e.clone(), c);
    }
    let prod = f.mul(&th);
    assert!(prod.trunc()[0] >= x);
    for e in prod.lowpow()[0]..=prod.trunc()[0] {
        let want = if e == 0 { QSeries::one(q) } else { QSeries::zero(q) };
        assert!(prod.coeff(&[e]).agrees_through(&want, q), "x^{e}");
    }
}

#[test]
fn bo_coefficients_are_quasimodular() {
    let f1 = bloch_okounkov(1, 12, &[6]);
    let fits = fit_coefficients(&f1, 6, 10).unwrap();
    assert_eq!(fits[&vec![-1]], parse_poly("1").unwrap());
    assert_eq!(fits[&vec![1]], parse_poly("G2").unwrap());
    assert_eq!(fits[&vec![3]], parse_poly("G2^2/2 + G4/12").unwrap());
    assert!(fits[&vec![-1]].d_g2().is_zero());
    let f2 = bloch_okounkov(2, 12, &[6, 6]);
    let fits2 = fit_coefficients(&f2, 6, 10).unwrap();
    assert_eq!(fits2.len(), (-1..=6).flat_map(|a| (-1..=6).filter(move |b| a + b <= 6)).count());
    for (e, p) in &fits2 {
        if (e[0] + e[1]) % 2 == 1 {
            assert!(p.is_zero(), "{e:?}");
        }
    }
}

#[test]
fn pixton_identity() {
    let r1 = pixton_check(1, 8, 5).unwrap();
    assert!(r1.passed(), "{r1:?}");
    let r2 = pixton_check(2, 8, 5).unwrap();
    assert!(r2.passed(), "{r2:?}");
    assert_eq!(r2.checked, 34);
}

#[test]
fn pixton_pair_term_is_needed() {
    // without the pair term the x1^0 x2^0 coefficient would be wrong
    let f2 = bloch_okounkov(2, 8, &[2, 2]);
    let fits = fit_coefficients(&f2, 0, 3).unwrap();
    let lhs = fits[&vec![0, 0]].d_g2();
    // (x1 + x2)^2 F_2 at x1^0 x2^0 only sees the x1^{-1} x2^{-1} term, through 2 x1 x2
    let square = f2.coeff(&[-1, -1]).scale(&int(2));
    assert_ne!(evaluate(&MeroQJac::poly(lhs), 8).coeff(0), series_core::RationalFunction::constant(square.coeff(0)));
}

#[test]
fn c2e_stationary_matches_bloch_okounkov() {
    let r0 = c2e_pt_stationary(0, 6, 5);
    assert!(r0.passed());
    assert_eq!(r0.checked, 1);
    let r1 = c2e_pt_stationary(1, 6, 6);
    assert!(r1.passed(), "{r1:?}");
    for n in 2..=3 {
        assert!(c2e_pt_stationary(n, 6, 5).passed());
    }
}

#[test]
fn pipt_closed_form() {
    let r = c2e_pipt_closed_form(6, 6);
    assert!(r.heine && r.product && r.exponential_q_part);
    assert!(r.passed());
    // the exponential of the twisted constants is not 1/S(i sqrt(t1 t2) x)
    assert!(!r.exponential_constant);
    assert_eq!(r.mismatches, vec!["exponential constant x^2", "exponential constant x^4", "exponential constant x^6"]);
}

#[test]
fn pipt_low_coefficients() {
    let s = pipt_sum(3, 3);
    // q^0: 1/(e^{t1 x} - 1) = 1/(t1 x) - 1/2 + t1 x/12
    let q0 = |e: i64| s.coeff(&[e]).coeff(0);
    assert_eq!(q0(-1), TPoly::monomial(int(1), -1, 0));
    assert_eq!(q0(0), TPoly::monomial(rat(-1, 2), 0, 0));
    assert_eq!(q0(1), TPoly::monomial(rat(1, 12), 1, 0));
    // q^1: e^{-(t1 + t2) x} - e^{-t1 x}
    let q1 = |e: i64| s.coeff(&[e]).coeff(1);
    assert!(q1(0).is_zero_coeff());
    assert_eq!(q1(1), TPoly::monomial(int(-1), 0, 1));
    let want2 = TPoly::monomial(rat(1, 2), 0, 2).add(&TPoly::monomial(int(1), 1, 1));
    assert_eq!(q1(2), want2);
}

#[test]
fn pochhammer_inverse() {
    let c = TPoly::monomial(int(-1), 1, 0);
    let p = pochhammer(&c, false, 5, 4).mul(&pochhammer(&c, true, 5, 4));
    for e in 0..=4 {
        let want = if e == 0 { QSeries::one(5) } else { QSeries::zero(5) };
        assert_eq!(p.coeff(&[e]).truncate(5).tighten(), want.tighten());
    }
}

#[test]
fn twisted_eisenstein() {
    let g = g_twisted(2, 1, 4);
    let c = |n| g.coeff(n).coeff_at_zero(0);
    assert_eq!(c(0), rat(-1, 12));
    assert_eq!((1..=4).map(c).collect::<Vec<_>>(), vec![int(1), int(3), int(4), int(7)]);
    let g2 = generator_expansion(SeriesName::parse("G2").unwrap(), 4).unwrap();
    assert_eq!(g2.coeff(0).coeff_at_zero(0) - c(0), rat(1, 24));
    for n in 1..=4 {
        assert_eq!(g2.coeff(n), g.coeff(n));
    }
    assert!(g_twisted(6, 0, 3).coeff(0).is_zero());
    assert_eq!(g_twisted(4, 1, 2).coeff(1).coeff_at_zero(0), int(1));
}
