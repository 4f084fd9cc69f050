//! The derivations `D_p = p d/dp` and `D_τ = q d/dq` on the ring.
//!
//! Images of the generators are partly known in closed form and partly
//! recovered by fitting the differentiated expansions; the table is built on
//! first use and then frozen.

use std::sync::OnceLock;

use num_rational::BigRational;
use series_core::arith::{int, rat};

use crate::expansion::{delta_series, eisenstein, Evaluator};
use crate::fit::fit;
use crate::{Generator, Grading, MeroQJac, QJacError, QJacPoly};

/// `q`-order at which fitted images are recovered.
pub const BOOTSTRAP_ORDER: i64 = 12;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Derivation {
    Dp,
    Dtau,
}

#[derive(Clone, Debug)]
pub struct ImageTable {
    pub dp: [QJacPoly; 6],
    pub dtau: [QJacPoly; 6],
    /// `G6` as a polynomial in `℘, ℘', G4`.
    pub g6: QJacPoly,
    /// `Δ` as a polynomial, from `G4` and `G6`.
    pub delta: QJacPoly,
}

impl ImageTable {
    pub fn image(&self, d: Derivation, g: Generator) -> &QJacPoly {
        match d {
            Derivation::Dp => &self.dp[g as usize],
            Derivation::Dtau => &self.dtau[g as usize],
        }
    }
}

fn gen(g: Generator) -> QJacPoly {
    QJacPoly::generator(g)
}

fn fit_poly(target: &series_core::FourierSeries, weight: i64, index2: i64) -> Result<QJacPoly, QJacError> {
    let f = fit(target, weight, &rat(index2, 2), 0, 0)?;
    debug_assert!(f.is_poly());
    Ok(f.numerator)
}

fn bootstrap() -> Result<ImageTable, QJacError> {
    use Generator::*;
    let ev = Evaluator::new(BOOTSTRAP_ORDER);
    let two = int(2);
    let dp = [
        gen(Theta).mul(&gen(A)),
        gen(P).neg().sub(&gen(G2).scale(&two)),
        QJacPoly::zero(),
        gen(Pprime),
        fit_poly(&ev.generator(Pprime).d_p(), 4, 0)?,
        QJacPoly::zero(),
    ];
    let dtau_g2 = gen(G2).pow(2).scale(&int(-2)).add(&gen(G4).scale(&rat(5, 6)));
    let mut dtau: [QJacPoly; 6] = Default::default();
    for g in Generator::ALL {
        dtau[g as usize] = if g == G2 {
            dtau_g2.clone()
        } else {
            let s = ev.generator(g);
            fit_poly(&s.d_q(), g.weight() + 2, g.index2())?
        };
    }
    let g6_series = eisenstein(6, BOOTSTRAP_ORDER)?.map_into(|c| series_core::RationalFunction::constant(c.clone()));
    let g6 = fit_poly(&g6_series, 6, 0)?;
    // Δ = (E4^3 - E6^2)/1728 with E4 = 240 G4, E6 = -504 G6
    let delta = gen(G4)
        .pow(3)
        .scale(&int(240 * 240 * 240))
        .sub(&g6.pow(2).scale(&int(504 * 504)))
        .scale(&rat(1, 1728));
    if ev.poly(&delta) != delta_series(BOOTSTRAP_ORDER) {
        return Err(QJacError::NotInRing("Δ polynomial does not match the product".into()));
    }
    Ok(ImageTable { dp, dtau, g6, delta })
}

static TABLE: OnceLock<Result<ImageTable, QJacError>> = OnceLock::new();

/// The frozen generator-image table, built on first call.
pub fn image_table() -> Result<&'static ImageTable, QJacError> {
    TABLE.get_or_init(bootstrap).as_ref().map_err(Clone::clone)
}

pub fn g6_poly() -> QJacPoly {
    image_table().expect("image table").g6.clone()
}

pub fn delta_poly() -> QJacPoly {
    image_table().expect("image table").delta.clone()
}

/// Leibniz extension of the generator images to a polynomial.
pub fn derive_poly(f: &QJacPoly, d: Derivation) -> Result<QJacPoly, QJacError> {
    let t = image_table()?;
    let mut out = QJacPoly::zero();
    for g in Generator::ALL {
        let p = f.partial(g);
        if !p.is_zero() {
            out = out.add(&p.mul(t.image(d, g)));
        }
    }
    Ok(out)
}

/// `D_p` or `D_τ` of a quotient, by the quotient rule over `Θ^a Δ^b`.
pub fn derived_derivative(f: &MeroQJac, d: Derivation) -> Result<MeroQJac, QJacError> {
    let t = image_table()?;
    let mut num = derive_poly(&f.numerator, d)?;
    if f.theta_pow > 0 {
        let log_theta = t
            .image(d, Generator::Theta)
            .div_theta(1)
            .ok_or_else(|| QJacError::NotInRing("image of Θ is not divisible by Θ".into()))?;
        num = num.sub(&f.numerator.mul(&log_theta).scale(&int(f.theta_pow as i64)));
    }
    if f.delta_pow > 0 && d == Derivation::Dtau {
        // D_τ log Δ = -24 G2
        num = num.add(&f.numerator.mul(&gen(Generator::G2)).scale(&int(24 * f.delta_pow as i64)));
    }
    Ok(MeroQJac::new(num, f.theta_pow, f.delta_pow))
}

/// Applies `D_p^a D_τ^b` (the two commute).
pub fn derive_word(f: &MeroQJac, n_p: u32, n_tau: u32) -> Result<MeroQJac, QJacError> {
    let mut out = f.clone();
    for _ in 0..n_p {
        out = derived_derivative(&out, Derivation::Dp)?;
    }
    for _ in 0..n_tau {
        out = derived_derivative(&out, Derivation::Dtau)?;
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct CommutatorReport {
    pub grading: Grading,
    /// (relation, holds)
    pub relations: Vec<(&'static str, bool)>,
}

impl CommutatorReport {
    pub fn all_pass(&self) -> bool {
        self.relations.iter().all(|(_, ok)| *ok)
    }
}

/// Verifies the four commutation relations between the formal partials and
/// the derivations on a homogeneous polynomial.
pub fn commutator_check(f: &QJacPoly) -> Result<CommutatorReport, QJacError> {
    let g = f.grading()?;
    let dp = |x: &QJacPoly| derive_poly(x, Derivation::Dp);
    let dt = |x: &QJacPoly| derive_poly(x, Derivation::Dtau);
    let wt = BigRational::from_integer(g.weight.into());
    let ind2 = BigRational::from_integer(g.index2.into());

    let r1 = dt(f)?.d_g2().sub(&dt(&f.d_g2())?) == f.scale(&(wt * int(-2)));
    let r2 = dp(f)?.d_a().sub(&dp(&f.d_a())?) == f.scale(&ind2);
    let r3 = dp(f)?.d_g2().sub(&dp(&f.d_g2())?) == f.d_a().scale(&int(-2));
    let r4 = dt(f)?.d_a().sub(&dt(&f.d_a())?) == dp(f)?;
    Ok(CommutatorReport {
        grading: g,
        relations: vec![
            ("[d/dG2, D_tau] = -2 wt", r1),
            ("[d/dA, D_p] = 2 ind", r2),
            ("[d/dG2, D_p] = -2 d/dA", r3),
            ("[d/dA, D_tau] = D_p", r4),
        ],
    })
}
