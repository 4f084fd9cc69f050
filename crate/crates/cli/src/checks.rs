//! Individual verifications; each returns one [`Check`].

use cohomology::{build_p2xe, normalization_product, NumericPack, Tensor, Variant};
use hae_k3::{boundary, kkv, leading_a, leading_brute, residue_eval, stationary_mero, Family, SeriesTable};
use hae_verify::{check_system, hae_instance, p2xe, Insertion, Instance, Op};
use num_rational::BigRational;
use partitions::{bloch_okounkov, c2e_pipt_closed_form, c2e_pt_stationary, fit_coefficients, pixton_check};
use qjac_ring::{
    commutator_check, derived_derivative, evaluate, fit_with_margin, generator_expansion, parse_poly, slice_monomials,
    Derivation, Generator, Grading, MeroQJac, QJacPoly, SeriesName,
};
use rand::{Rng, SeedableRng};
use series_core::{to_jet, FourierSeries, RationalFunction};

use crate::Check;

fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Images of the six generators under `D_p`, `D_tau` against the
/// differentiated expansions.
pub fn bootstrap(qorder: i64) -> Check {
    let mut bad = Vec::new();
    for g in Generator::ALL {
        let s = match generator_expansion(SeriesName::Gen(g), qorder) {
            Ok(s) => s,
            Err(e) => return Check::failed("ring.bootstrap", e),
        };
        for (d, want) in [(Derivation::Dp, s.d_p()), (Derivation::Dtau, s.d_q())] {
            let ok = derived_derivative(&MeroQJac::generator(g), d)
                .map(|img| evaluate(&img, qorder) == want)
                .unwrap_or(false);
            if !ok {
                bad.push(format!("{d:?} {}", g.name()));
            }
        }
    }
    Check::new("ring.bootstrap", bad.is_empty(), format!("12 images to q^{qorder}; failing: {bad:?}"))
}

/// Random homogeneous polynomial with small rational coefficients.
pub fn random_poly(rng: &mut impl Rng, max_weight: i64, max_index2: i64) -> QJacPoly {
    loop {
        let g = Grading { weight: rng.gen_range(0..=max_weight), index2: rng.gen_range(0..=max_index2) };
        let mut p = QJacPoly::zero();
        for e in slice_monomials(g) {
            if rng.gen_bool(0.5) {
                let c = BigRational::new(rng.gen_range(-5i64..=5).into(), rng.gen_range(1i64..=4).into());
                p.add_term(e, c);
            }
        }
        if !p.is_zero() {
            return p;
        }
    }
}

/// The four commutation relations on `count` random polynomials of weight
/// at most 8 and index at most 2.
pub fn commutators(count: usize, seed: u64) -> Check {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0;
    for _ in 0..count {
        let p = random_poly(&mut rng, 8, 4);
        match commutator_check(&p) {
            Ok(r) if r.all_pass() => {}
            _ => failures += 1,
        }
    }
    Check::new("ring.commutators", failures == 0, format!("{count} polynomials, {failures} failures"))
}

/// Recognition of `D_q G2` in weight 4.
pub fn ramanujan(qorder: i64, margin: usize) -> Check {
    let s = match generator_expansion(SeriesName::Gen(Generator::G2), qorder) {
        Ok(s) => s.d_q(),
        Err(e) => return Check::failed("ring.ramanujan", e),
    };
    let want = MeroQJac::poly(parse_poly("-2*G2^2 + 5/6*G4").expect("literal"));
    match fit_with_margin(&s, 4, &int(0), 0, 0, margin) {
        Ok(f) => Check::new("ring.ramanujan", f == want, format!("D_q G2 = {f}")),
        Err(e) => Check::failed("ring.ramanujan", e),
    }
}

/// Reference values of `A_k`, `B_k` and `C_kl`.
pub fn reference_k3() -> Vec<(Family, i64, i64, String)> {
    let d = "(-2*G2^2 + 5/6*G4)";
    let g = "(4/3*G2^3 - 2/3*G2*G4 + 7/720*G6)";
    vec![
        (Family::A, 0, 0, "1".into()),
        (Family::A, 1, 0, "A".into()),
        (Family::A, 2, 0, "-G2 + A^2/2".into()),
        (Family::A, 3, 0, "-G2*A + A^3/6".into()),
        (Family::A, 4, 0, "A^4/24 - A^2*G2/2 + G2^2/3 - G4/72".into()),
        (Family::A, 5, 0, "A^5/120 - A^3*G2/6 + A*G2^2/3 - A*G4/72".into()),
        (Family::B, 0, 0, "-1".into()),
        (Family::B, 1, 0, "0".into()),
        (Family::B, 2, 0, "A^2/2 - P/2 + 2*G2".into()),
        (Family::B, 3, 0, "A^3/3 + A*G2 - A*P/2 - Pp/12".into()),
        (Family::B, 4, 0, "A^4/8 - A^2*P/4 - G2^2 + G2*P/3 - P^2/24 - A*Pp/12 + 5/36*G4".into()),
        (Family::C, 1, 1, d.into()),
        (Family::C, 2, 1, format!("{d}*A")),
        (Family::C, 3, 1, format!("{d}*A^2/2 + {g}")),
        (Family::C, 4, 1, format!("{d}*A^3/6 + {g}*A")),
        (Family::C, 2, 2, format!("{d}*A^2 + 2/3*G2^3 - 1/6*G2*G4 - 7/720*G6")),
        (Family::C, 3, 2, format!("1/2*{d}*A^3 + (2*G2^3 - 5/6*G2*G4)*A")),
    ]
}

pub fn family_name(f: Family) -> &'static str {
    match f {
        Family::A => "A",
        Family::B => "B",
        Family::C => "C",
    }
}

pub fn k3_table(table: &SeriesTable) -> Check {
    let mut bad = Vec::new();
    let entries = reference_k3();
    for (fam, k, l, s) in &entries {
        let want = parse_poly(s).expect("reference entry parses");
        if table.get(*fam, *k, *l).ok() != Some(want) {
            bad.push(format!("{}{k}{l}", family_name(*fam)));
        }
    }
    Check::new("k3.table", bad.is_empty(), format!("{} entries; failing: {bad:?}", entries.len()))
}

/// Brute-force leading coefficients against the closed form, and the `q^0`
/// rows of the solved `A_k`.
pub fn leading_terms(table: &SeriesTable) -> Check {
    let one = RationalFunction::one();
    let p = RationalFunction::p_pow(1);
    let mut bad = Vec::new();
    for k in 0..=6 {
        let f = leading_a(k).mul(&p).div(&one.sub(&p).pow(2).expect("power")).expect("nonzero").neg();
        for n in 0..=10 {
            let sign = if n % 2 == 0 { int(1) } else { int(-1) };
            if sign * leading_brute(n, k) != f.coeff_at_zero(2 * n) {
                bad.push(format!("brute n={n} k={k}"));
            }
        }
    }
    for k in 0..=5 {
        let q0 = table.a(k).map(|a| evaluate(&MeroQJac::poly(a), 0).coeff(0));
        if q0.ok() != Some(leading_a(k)) || leading_a(k) != boundary(Family::A, k) {
            bad.push(format!("A_{k} q^0 row"));
        }
    }
    Check::new("k3.leading", bad.is_empty(), format!("77 brute values, 6 rows; failing: {bad:?}"))
}

pub fn residues(table: &SeriesTable, zorder: i64, qorder: i64) -> Check {
    let mut bad = Vec::new();
    let entries = reference_k3();
    for (fam, k, l, _) in &entries {
        let name = format!("{}{k}{l}", family_name(*fam));
        let ok = (|| -> Option<bool> {
            let p = table.get(*fam, *k, *l).ok()?;
            let want = to_jet(&evaluate(&MeroQJac::poly(p), qorder), zorder).ok()?;
            let got = residue_eval(*fam, *k, *l, zorder, qorder).ok()?;
            let lo = want.lowpow()[0].min(got.lowpow()[0]);
            Some((lo..=zorder).all(|e| got.coeff(&[e]) == want.coeff(&[e])))
        })();
        if ok != Some(true) {
            bad.push(name);
        }
    }
    Check::new(
        "residue.table",
        bad.is_empty(),
        format!("{} entries at z^{zorder}, q^{qorder}; failing: {bad:?}", entries.len()),
    )
}

/// `q^{-1}` coefficient of `-1/(Θ^2 Δ)` and the empty stationary series.
pub fn kkv_base(table: &SeriesTable) -> Check {
    let f = evaluate(&kkv(), 2);
    let one = RationalFunction::one();
    let p = RationalFunction::p_pow(1);
    // -1/(s - 1/s)^2 = -p/(1 - p)^2
    let want = p.div(&one.sub(&p).pow(2).expect("power")).expect("nonzero").neg();
    let lead = f.coeff(-2).is_zero() && f.coeff(-1) == want;
    let stationary = stationary_mero(&[], &[], table).map(|m| m == kkv()).unwrap_or(false);
    Check::new("k3.kkv", lead && stationary, format!("q^-1 coefficient {lead}, stationary empty case {stationary}"))
}

/// Quasimodular recognition of the `x`-coefficients of `F_1`, `F_2`.
pub fn bo_fits(qorder: i64, degree: i64, margin: usize) -> Check {
    let mut detail = Vec::new();
    let mut ok = true;
    for n in 1..=2usize {
        let f = bloch_okounkov(n, qorder, &vec![degree; n]);
        match fit_coefficients(&f, degree, margin) {
            Ok(m) => detail.push(format!("F{n}: {} coefficients", m.len())),
            Err(e) => {
                ok = false;
                detail.push(format!("F{n}: {e}"));
            }
        }
    }
    Check::new("partitions.bo_fits", ok, detail.join(", "))
}

pub fn pixton(n: usize, qorder: i64, xorder: i64) -> Check {
    let name = format!("partitions.pixton_n{n}");
    match pixton_check(n, qorder, xorder) {
        Ok(r) => Check::new(name, r.passed(), format!("{} monomials, mismatches {:?}", r.checked, r.mismatches)),
        Err(e) => Check::failed(name, e),
    }
}

pub fn c2e_pt(n: usize, qorder: i64, xorder: i64) -> Check {
    let r = c2e_pt_stationary(n, qorder, xorder);
    Check::new(
        format!("c2e.pt_n{n}"),
        r.passed(),
        format!("{} monomials, mismatches {:?}", r.checked, r.mismatches),
    )
}

/// The `π`-PT closed form; the second line of the returned pair notes the
/// constant-term comparison of the exponential form, which is not part of
/// the pass condition.
pub fn c2e_pipt(qorder: i64, xorder: i64) -> (Check, String) {
    let r = c2e_pipt_closed_form(qorder, xorder);
    let check = Check::new(
        "c2e.pipt",
        r.passed(),
        format!("heine {}, product {}, exponential q-part {}", r.heine, r.product, r.exponential_q_part),
    );
    let note = format!(
        "c2e.pipt: exponential constant term matches 1/S: {} ({} mismatches recorded)",
        r.exponential_constant,
        r.mismatches.len()
    );
    (check, note)
}

/// Status of every table instance plus the two named ones.
pub fn p2e_system() -> Check {
    let run = || -> Result<(bool, String), hae_verify::VerifyError> {
        let th = p2xe::theory();
        let db = p2xe::load_db(&th)?;
        let mut inst: Vec<Instance> = p2xe::table_instances(&th)?;
        let class = |s: &str| th.geometry.parse_class(s).expect("class");
        let named = [
            hae_instance(Op::DA, &[Insertion::chtilde(3, class("H^2p"))], 1, &th)?,
            hae_instance(Op::DG2, &[Insertion::chtilde(2, class("H^2p")), Insertion::chtilde(2, class("Hp"))], 1, &th)?,
        ];
        let names: Vec<String> = named.iter().map(|i| i.name.clone()).collect();
        inst.extend(named);
        let rep = check_system(&db, &inst);
        let status = |n: &str| -> &'static str {
            if rep.inconsistencies.iter().any(|(m, _)| m == n) {
                "contradiction"
            } else if rep.undetermined.iter().any(|m| m == n) {
                "undetermined"
            } else {
                "determined"
            }
        };
        let named_ok = names.iter().all(|n| status(n) == "determined");
        let ok = rep.is_consistent() && named_ok;
        let detail = format!(
            "{} instances: {} verified, {} inconsistent, {} undetermined, {} predictions; {}",
            inst.len(),
            rep.verified.len(),
            rep.inconsistencies.len(),
            rep.undetermined.len(),
            rep.predictions.len(),
            names.iter().map(|n| format!("[{n}] {}", status(n))).collect::<Vec<_>>().join(", ")
        );
        Ok((ok, detail))
    };
    match run() {
        Ok((ok, d)) => Check::new("p2e.system", ok, d),
        Err(e) => Check::failed("p2e.system", e),
    }
}

/// `ℰ(1) = Δ_B`, `ℰ(W) = Δ_X`, `ℰ(W ⊠ γ) = γ`, `ℰ(γ ⊠ 1) = π^*π_*γ`.
pub fn correspondence_units() -> Check {
    let g = build_p2xe();
    let mut bad = Vec::new();
    if g.e_corr(&g.x.one()) != g.delta_b_pulled() {
        bad.push("E(1)".to_string());
    }
    if g.e_corr(&g.w) != g.delta_x() {
        bad.push("E(W)".to_string());
    }
    for i in 0..g.x.dim() {
        let e = g.x.basis(i);
        if g.e_corr_tensor(&Tensor::product(&g.w, &e)) != e || g.e_corr_pair(&g.w, &e) != e {
            bad.push(format!("E(W x {})", g.x.labels[i]));
        }
        if g.e_corr_tensor(&Tensor::product(&e, &g.x.one())) != g.pi_pull_push(&e) {
            bad.push(format!("E({} x 1)", g.x.labels[i]));
        }
    }
    Check::new("p2e.correspondence", bad.is_empty(), format!("{} basis classes; failing: {bad:?}", g.x.dim()))
}

/// `<1>` against `prod (1 - q^m)^{-3}` and `D_q F = e (G2 + 1/24) F`.
pub fn normalization(qorder: i64) -> Check {
    let pack = NumericPack::p2xe();
    let f = normalization_product(&pack, qorder, 3, Variant::Pt);
    // prod (1 - q^m)^3 by direct multiplication
    let mut euler = FourierSeries::one(qorder);
    for m in 1..=qorder {
        let factor = FourierSeries::one(qorder).sub(&FourierSeries::monomial(RationalFunction::one(), m, qorder));
        euler = euler.mul(&factor);
    }
    let product_ok = f.mul(&euler.pow(3)).agrees_through(&FourierSeries::one(qorder), qorder);
    let sigma = FourierSeries::from_fn(0, qorder, |n| {
        let s: i64 = (1..=n.max(0)).filter(|d| n % d == 0).sum();
        RationalFunction::from_int(s)
    });
    let rhs = sigma.mul(&f).scale(&int(pack.q_exponent()));
    let log_ok = f.d_q().agrees_through(&rhs, qorder);
    Check::new(
        "normalization.p2xe",
        product_ok && log_ok,
        format!("to q^{qorder}: product {product_ok}, log-derivative {log_ok}"),
    )
}
