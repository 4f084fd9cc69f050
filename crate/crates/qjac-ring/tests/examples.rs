use num_rational::BigRational;
use qjac_ring::deriv::derive_poly;
use qjac_ring::expansion::delta_series;
use qjac_ring::{
    commutator_check, derived_derivative, evaluate, fit, generator_expansion, image_table, parse_mero, parse_poly,
    Derivation, Generator, MeroQJac, QJacError, QJacPoly, SeriesName,
};
use series_core::arith::{int, rat, sigma};
use series_core::RationalFunction;

fn rf(n: i64) -> RationalFunction {
    RationalFunction::from_int(n)
}

fn g(name: Generator) -> QJacPoly {
    QJacPoly::generator(name)
}

fn p() -> RationalFunction {
    RationalFunction::p_pow(1)
}

#[test]
fn theta_constant_term() {
    let t = generator_expansion(SeriesName::Gen(Generator::Theta), 3).unwrap();
    assert_eq!(t.coeff(0), RationalFunction::s_pow(1).sub(&RationalFunction::s_pow(-1)));
}

#[test]
fn g2_expansion() {
    let g2 = generator_expansion(SeriesName::Gen(Generator::G2), 4).unwrap();
    let want = [rat(-1, 24), int(1), int(3), int(4), int(7)];
    for (n, w) in want.iter().enumerate() {
        assert_eq!(g2.coeff(n as i64), RationalFunction::constant(w.clone()));
    }
}

#[test]
fn g4_and_wp_constant_terms() {
    let g4 = generator_expansion(SeriesName::Gen(Generator::G4), 2).unwrap();
    assert_eq!(g4.coeff(0), RationalFunction::constant(rat(1, 240)));
    let wp = generator_expansion(SeriesName::Gen(Generator::P), 2).unwrap();
    // 1/12 + p/(1-p)^2, from -D_p of A's constant term minus 2 G2's constant term
    let want = RationalFunction::constant(rat(1, 12)).add(&p().div(&rf(1).sub(&p()).pow(2).unwrap()).unwrap());
    assert_eq!(wp.coeff(0), want);
}

#[test]
fn odd_eisenstein_is_an_error() {
    assert!(generator_expansion(SeriesName::G(3), 2).is_err());
}

#[test]
fn evaluate_is_a_homomorphism() {
    let f = parse_mero("A^2/2 - G2").unwrap();
    let a = generator_expansion(SeriesName::Gen(Generator::A), 4).unwrap();
    let g2 = generator_expansion(SeriesName::Gen(Generator::G2), 4).unwrap();
    let want = a.mul(&a).scale(&rat(1, 2)).sub(&g2);
    assert_eq!(evaluate(&f, 4), want);
}

#[test]
fn k3_denominator_leading_term() {
    let f = parse_mero("-1/(Theta^2*Delta)").unwrap();
    let s = evaluate(&f, 2);
    let x = RationalFunction::s_pow(1).sub(&RationalFunction::s_pow(-1));
    assert_eq!(s.coeff(-1), x.pow(-2).unwrap().neg());
}

#[test]
fn d_tau_of_g2_evaluates_to_d_q() {
    let d = derived_derivative(&MeroQJac::generator(Generator::G2), Derivation::Dtau).unwrap();
    let g2 = generator_expansion(SeriesName::Gen(Generator::G2), 8).unwrap();
    assert_eq!(evaluate(&d, 8), g2.d_q());
}

#[test]
fn fit_round_trip() {
    let f = parse_mero("P + 2*G2").unwrap();
    let s = evaluate(&f, 8);
    assert_eq!(fit(&s, 2, &int(0), 0, 0).unwrap(), f);
}

#[test]
fn fit_d_q_of_g2() {
    let g2 = generator_expansion(SeriesName::Gen(Generator::G2), 10).unwrap();
    let f = fit(&g2.d_q(), 4, &int(0), 0, 0).unwrap();
    assert_eq!(f, parse_mero("-2*G2^2 + 5/6*G4").unwrap());
}

#[test]
fn fit_g6_uses_only_jacobi_generators() {
    let s = generator_expansion(SeriesName::G(6), 10).unwrap();
    let f = fit(&s, 6, &int(0), 0, 0).unwrap();
    for (e, _) in f.numerator.terms() {
        assert_eq!((e[0], e[1], e[2]), (0, 0, 0), "unexpected monomial in {}", f.numerator);
    }
    // cross-check against sigma_5 far beyond the fitted order
    let big = evaluate(&f, 20);
    for n in 1..=20 {
        assert_eq!(big.coeff(n), RationalFunction::constant(BigRational::from_integer(sigma(5, n as u64))));
    }
}

#[test]
fn fit_errors_are_distinct() {
    let g2 = generator_expansion(SeriesName::Gen(Generator::G2), 10).unwrap();
    // G2 is not a weight 4 form
    assert_eq!(fit(&g2, 4, &int(0), 0, 0), Err(QJacError::NoSolution));
    // too few coefficients to pin down weight 8
    let short = generator_expansion(SeriesName::G(8), 0).unwrap();
    assert!(matches!(
        fit(&short, 8, &int(0), 0, 0),
        Err(QJacError::InsufficientData { .. }) | Err(QJacError::Underdetermined { .. })
    ));
}

#[test]
fn partial_examples() {
    let a2 = parse_poly("-G2 + A^2/2").unwrap();
    assert_eq!(a2.d_g2(), QJacPoly::from_int(-1));
    let a3 = parse_poly("-G2*A + A^3/6").unwrap();
    assert_eq!(a3.d_a(), a2);
    let jac = parse_poly("Theta^2*P*G4 + Pp^2 - 3*P^3").unwrap();
    assert!(jac.d_g2().is_zero());
}

#[test]
fn derived_images_from_the_definitions() {
    let t = image_table().unwrap();
    assert_eq!(t.dp[Generator::Theta as usize], g(Generator::Theta).mul(&g(Generator::A)));
    assert_eq!(t.dp[Generator::A as usize], parse_poly("-P - 2*G2").unwrap());
    assert_eq!(t.dtau[Generator::G2 as usize], parse_poly("-2*G2^2 + 5/6*G4").unwrap());
}

#[test]
fn every_image_matches_the_differentiated_series() {
    let t = image_table().unwrap();
    for gen in Generator::ALL {
        let s = generator_expansion(SeriesName::Gen(gen), 14).unwrap();
        let dp = evaluate(&MeroQJac::poly(t.dp[gen as usize].clone()), 14);
        let dt = evaluate(&MeroQJac::poly(t.dtau[gen as usize].clone()), 14);
        assert_eq!(dp, s.d_p(), "D_p {gen:?}");
        assert_eq!(dt, s.d_q(), "D_tau {gen:?}");
    }
}

#[test]
fn delta_polynomial_matches_product() {
    let d = qjac_ring::delta_poly();
    assert_eq!(evaluate(&MeroQJac::poly(d), 16), delta_series(16));
}

#[test]
fn commutators_on_generators() {
    let rep = commutator_check(&g(Generator::G2)).unwrap();
    assert!(rep.all_pass());
    let lhs = derive_poly(&g(Generator::G2), Derivation::Dtau).unwrap().d_g2();
    assert_eq!(lhs, g(Generator::G2).scale(&int(-4)));
    let theta = g(Generator::Theta);
    let r = derive_poly(&theta, Derivation::Dp).unwrap().d_a();
    assert_eq!(r, theta);
    for gen in Generator::ALL {
        assert!(commutator_check(&g(gen)).unwrap().all_pass(), "{gen:?}");
    }
    assert!(commutator_check(&parse_poly("A + G2").unwrap()).is_err());
}

#[test]
fn quotient_rule_against_series() {
    let f = parse_mero("A*G2/(Theta^2*Delta)").unwrap();
    for d in [Derivation::Dp, Derivation::Dtau] {
        let lhs = evaluate(&derived_derivative(&f, d).unwrap(), 6);
        let s = evaluate(&f, 6);
        let rhs = match d {
            Derivation::Dp => s.d_p(),
            Derivation::Dtau => s.d_q(),
        };
        assert_eq!(lhs, rhs, "{d:?}");
    }
}
