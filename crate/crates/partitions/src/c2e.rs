//! Descendent series of `C^2 x E` under the torus with weights `t1`, `t2`.

use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;
use series_core::arith::{factorial, int};
use series_core::{Coeff, JetSeries, QSeries, TPoly};

use crate::bloch_okounkov::{bloch_okounkov, euler_product, partition_sum, var_names};
use crate::eisenstein::g_twisted;
use crate::laurent::{geometric_tail, Laurent};
use crate::partition::Partition;

/// Jets whose scalars are Laurent polynomials in `t1`, `t2`.
pub type TJet = JetSeries<TPoly>;

fn t(c: i64, a: i32, b: i32) -> TPoly {
    TPoly::monomial(int(c), a, b)
}

fn tsum(x: &TPoly, y: &TPoly) -> TPoly {
    Coeff::add(x, y)
}

/// `1/S(i sqrt(t1 t2) x)` with `S(x) = (e^{x/2} - e^{-x/2})/x`.
fn inverse_s(hi: i64) -> Laurent<TPoly> {
    let mut s = Laurent::zero(0, hi);
    for k in 0..=hi / 2 {
        let c = BigRational::new(1.into(), factorial(2 * k as u64 + 1) * num_traits::pow(4u64, k as usize));
        let sign = if k % 2 == 0 { 1 } else { -1 };
        s.coeffs[2 * k as usize] = t(sign, k as i32, k as i32).scale_by(&c);
    }
    s.inv().expect("constant term is one")
}

/// `(1 - e^{t1 x}) / (t1 t2 S(i sqrt(t1 t2) x))`, low order 1.
fn prefactor(hi: i64) -> Laurent<TPoly> {
    let one = Laurent::monomial(TPoly::one_coeff(), 0, hi);
    let num = one.sub(&Laurent::exp(&TPoly::t1(), hi));
    let mut out = num.mul(&inverse_s(hi)).scale(&t(1, -1, -1));
    // the x^0 coefficient vanishes identically
    out.low = 1;
    out.coeffs.remove(0);
    out
}

/// `sum_{i >= 1} e^{(-λ_i t2 - i t1) x}`, regularized by the closed tail.
fn pt_factor(lambda: &Partition, hi: i64) -> Laurent<TPoly> {
    let mut f = geometric_tail(&TPoly::t1(), hi).expect("t1 is a unit");
    for i in 1..=lambda.len() {
        let i = i as i64;
        let a = tsum(&t(-lambda.part(i as usize), 0, 1), &t(-i, 1, 0));
        f = f.add(&Laurent::exp(&a, hi).sub(&Laurent::exp(&t(-i, 1, 0), hi)));
    }
    f
}

#[derive(Clone, Debug, Serialize)]
pub struct C2eReport {
    pub n: usize,
    pub qorder: i64,
    pub xorder: i64,
    pub checked: usize,
    pub mismatches: Vec<Vec<i64>>,
}

impl C2eReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn compare(a: &TJet, b: &TJet, lo: i64, hi: i64) -> (usize, Vec<Vec<i64>>) {
    let n = a.vars().len();
    let mut exps = vec![vec![]];
    for _ in 0..n {
        exps = exps
            .into_iter()
            .flat_map(|e: Vec<i64>| {
                (lo..=hi).map(move |x| {
                    let mut e = e.clone();
                    e.push(x);
                    e
                })
            })
            .collect();
    }
    let q = a.qtrunc().min(b.qtrunc());
    let bad: Vec<Vec<i64>> = exps
        .iter()
        .filter(|e| !a.coeff(e).truncate(q).tighten().eq(&b.coeff(e).truncate(q).tighten()))
        .cloned()
        .collect();
    (exps.len(), bad)
}

/// The localization sum at general `t1, t2`: the generating series of
/// `Z(ch~_{k_1}(γ_1) ... ch~_{k_n}(γ_n))` with all `∫γ_l = 1`.
pub fn localization_sum(n: usize, qorder: i64, xorder: i64) -> TJet {
    let pre = prefactor(xorder + 1);
    partition_sum(n, qorder, qorder, &vec![0; n], &vec![xorder; n], |lambda, _| {
        pre.mul(&pt_factor(lambda, xorder - 1))
    })
}

/// Compares the localization sum at `t2 = -t1` with
/// `x_1 ... x_n t1^{-n} F_n(t1 x_1, ..., t1 x_n)`.
pub fn c2e_pt_stationary(n: usize, qorder: i64, xorder: i64) -> C2eReport {
    let minus_one = -BigRational::one();
    let lhs = localization_sum(n, qorder, xorder).map_coeffs(qorder, |s| s.map(|c| c.restrict_t2(&minus_one)));
    let f = bloch_okounkov(n, qorder, &vec![xorder; n]);
    let mut rhs = TJet::new(var_names(n), vec![0; n], vec![xorder; n], qorder);
    for (e, c) in f.terms() {
        let deg: i64 = e.iter().sum();
        let shifted: Vec<i64> = e.iter().map(|x| x + 1).collect();
        let tp = t(1, (deg - n as i64) as i32, 0);
        rhs.add_term(shifted, &c.map_into(|x| tp.scale_by(x)));
    }
    let (checked, mismatches) = compare(&lhs, &rhs, 0, xorder);
    C2eReport { n, qorder, xorder, checked, mismatches }
}

fn x_jet(l: Laurent<TPoly>, qorder: i64) -> TJet {
    let terms = l
        .coeffs
        .iter()
        .enumerate()
        .map(|(k, c)| (l.low + k as i64, QSeries::constant(c.clone(), qorder)))
        .collect();
    JetSeries::univariate("x", l.low, l.hi(), qorder, terms)
}

/// `prod_{k >= 1} (1 - q^k e^{c x})`, or its inverse.
pub fn pochhammer(c: &TPoly, inverse: bool, qorder: i64, xorder: i64) -> TJet {
    let mut acc = x_jet(Laurent::monomial(TPoly::one_coeff(), 0, xorder), qorder);
    for k in 1..=qorder {
        let mut f = TJet::new(vec!["x".into()], vec![0], vec![xorder], qorder);
        f.add_term(vec![0], &QSeries::one(qorder));
        let mmax = if inverse { qorder / k } else { 1 };
        for m in 1..=mmax {
            let e = Laurent::exp(&c.scale_by(&int(m)), xorder);
            let sign = if inverse { 1 } else { -1 };
            for (j, x) in e.coeffs.iter().enumerate() {
                f.add_term(vec![j as i64], &QSeries::monomial(x.scale_by(&int(sign)), k * m, qorder));
            }
        }
        acc = acc.mul(&f);
    }
    acc
}

fn euler_t(qorder: i64) -> QSeries<TPoly> {
    euler_product(qorder).map_into(|c| TPoly::from_rational(c.clone()))
}

/// `(q)_inf (q e^{-(t1+t2)x})_inf / ((q e^{-t2 x})_inf (q e^{-t1 x})_inf)`.
fn product_ratio(qorder: i64, xorder: i64) -> TJet {
    let s = tsum(&t(-1, 1, 0), &t(-1, 0, 1));
    pochhammer(&s, false, qorder, xorder)
        .mul(&pochhammer(&t(-1, 0, 1), true, qorder, xorder))
        .mul(&pochhammer(&t(-1, 1, 0), true, qorder, xorder))
        .mul_series(&euler_t(qorder))
}

/// `exp(-sum_{i,j >= 1} (-1)^{i+j} t1^i t2^j x^{i+j} G^{s_ij}_{i+j} / (i! j!))`
/// with `s_ij` chosen by `twist`.
fn exponential_form(qorder: i64, xorder: i64, twist: impl Fn(i64, i64) -> u32) -> TJet {
    let mut e = TJet::new(vec!["x".into()], vec![0], vec![xorder], qorder);
    for i in 1..xorder {
        for j in 1..=(xorder - i) {
            let g = g_twisted((i + j) as u32, twist(i, j), qorder);
            let sign = if (i + j) % 2 == 0 { -1 } else { 1 };
            let c = BigRational::new(
                int(sign).numer().clone(),
                factorial(i as u64) * factorial(j as u64),
            );
            let tp = t(1, i as i32, j as i32).scale_by(&c);
            e.add_term(vec![i + j], &g.map_into(|r| tp.scale_by(&r.coeff_at_zero(0))));
        }
    }
    // e has no constant term, so the exponential series stops at x^xorder
    let mut out = x_jet(Laurent::monomial(TPoly::one_coeff(), 0, xorder), qorder);
    let mut pow = out.clone();
    for m in 1..=xorder / 2 {
        pow = pow.mul(&e).scale(&BigRational::new(1.into(), m.into()));
        out = out.add(&pow);
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct PiptReport {
    pub qorder: i64,
    pub xorder: i64,
    /// Partition sum against the `q`-Pochhammer quotient.
    pub heine: bool,
    /// `n = 1` localization sum against `-1/(t1 t2 S) * product_ratio`.
    pub product: bool,
    /// `product_ratio` against the exponential with untwisted `G_k^0`.
    pub exponential_q_part: bool,
    /// `1/S(i sqrt(t1 t2) x)` against the exponential of the constant terms
    /// of `G_{2k}^1`.
    pub exponential_constant: bool,
    pub mismatches: Vec<String>,
}

impl PiptReport {
    /// The two product identities and the `q`-dependent part of the
    /// exponential form.
    pub fn passed(&self) -> bool {
        self.heine && self.product && self.exponential_q_part
    }
}

/// `(q)_inf sum_λ q^{|λ|} sum_{i >= 1} e^{(-λ_i t2 - i t1) x}`.
pub fn pipt_sum(qorder: i64, xorder: i64) -> TJet {
    partition_sum(1, qorder, qorder, &[-1], &[xorder], |lambda, _| pt_factor(lambda, xorder))
}

pub fn c2e_pipt_closed_form(qorder: i64, xorder: i64) -> PiptReport {
    let mut mismatches = Vec::new();
    let mut check = |name: &str, a: &TJet, b: &TJet, lo: i64| {
        let (_, bad) = compare(a, b, lo, xorder);
        for e in &bad {
            mismatches.push(format!("{name} x^{}", e[0]));
        }
        bad.is_empty()
    };

    let lhs = pipt_sum(qorder, xorder);
    let tail = x_jet(geometric_tail(&TPoly::t1(), xorder).expect("t1 is a unit"), qorder);
    let ratio = product_ratio(qorder, xorder + 1);
    let heine = check("heine", &lhs, &tail.mul(&ratio), -1);

    let inv_s = x_jet(inverse_s(xorder).scale(&t(-1, -1, -1)), qorder);
    let product = check("product", &localization_sum(1, qorder, xorder), &inv_s.mul(&ratio), 0);

    let q_part = exponential_form(qorder, xorder, |_, _| 0);
    let exponential_q_part = check("exponential q-part", &ratio.truncate(&[xorder]), &q_part, 0);

    let constants = exponential_form(0, xorder, |i, j| u32::from(i == j));
    let s0 = x_jet(inverse_s(xorder), 0);
    let exponential_constant = check("exponential constant", &s0, &constants, 0);

    PiptReport { qorder, xorder, heine, product, exponential_q_part, exponential_constant, mismatches }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_s_leading_terms() {
        // 1/S(iy) = 1 + y^2/24 + ... with y^2 = t1 t2 x^2
        let s = inverse_s(2);
        assert!(s.coeff(0) == TPoly::one_coeff());
        assert_eq!(s.coeff(2), TPoly::monomial(BigRational::new(1.into(), 24.into()), 1, 1));
        assert!(s.coeff(1).is_zero_coeff());
    }

    #[test]
    fn prefactor_at_antidiagonal() {
        // x e^{t1 x/2}/t1 after t2 = -t1
        let p = prefactor(4).map(|c| c.restrict_t2(&-BigRational::one()));
        let want = Laurent::exp(&TPoly::monomial(BigRational::new(1.into(), 2.into()), 1, 0), 3)
            .mul(&Laurent::monomial(t(1, -1, 0), 1, 10));
        assert_eq!(p.truncate(4), want.truncate(4));
    }
}
