//! `d/dG2 F_n = (x_1 + ... + x_n)^2 F_n - 2 sum_{i<j} (x_i + x_j) F_{n-1}(x_i + x_j, ...)`
//! with the derivative taken on each quasimodular `x`-coefficient.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;
use qjac_ring::{fit_with_margin, Evaluator, Generator, MeroQJac, QJacPoly};
use serde::Serialize;
use series_core::arith::{binomial, int};
use series_core::{FourierSeries, JetSeries, QSeries, RationalFunction};

use crate::bloch_okounkov::{bloch_okounkov, var_names};
use crate::PartitionError;

fn to_fourier(c: &QSeries<BigRational>) -> FourierSeries {
    c.map_into(|x| RationalFunction::constant(x.clone()))
}

fn exponents(lo: &[i64], hi: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for (a, b) in lo.iter().zip(hi) {
        out = out
            .into_iter()
            .flat_map(|e: Vec<i64>| {
                (*a..=*b).map(move |x| {
                    let mut e = e.clone();
                    e.push(x);
                    e
                })
            })
            .collect();
    }
    out
}

/// Recognizes every `x`-coefficient of an `n`-point function with total
/// degree at most `max_degree` as a quasimodular polynomial of weight
/// `degree + n`, demanding `margin` conditions beyond the slice dimension.
pub fn fit_coefficients(
    f: &JetSeries<BigRational>,
    max_degree: i64,
    margin: usize,
) -> Result<BTreeMap<Vec<i64>, QJacPoly>, PartitionError> {
    let n = f.vars().len() as i64;
    let zero = BigRational::zero();
    let mut out = BTreeMap::new();
    for e in exponents(f.lowpow(), f.trunc()) {
        let deg: i64 = e.iter().sum();
        if deg > max_degree {
            continue;
        }
        let target = to_fourier(&f.coeff(&e));
        let m = fit_with_margin(&target, deg + n, &zero, 0, 0, margin).map_err(|source| PartitionError::Fit { monomial: e.clone(), source })?;
        let p = m.numerator;
        let quasimodular = m.theta_pow == 0
            && m.delta_pow == 0
            && p.terms().all(|(x, _)| x[Generator::Theta as usize] == 0 && x[Generator::A as usize] == 0);
        if !quasimodular {
            return Err(PartitionError::NotQuasimodular(e));
        }
        out.insert(e, p);
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct PixtonReport {
    pub n: usize,
    pub qorder: i64,
    pub xorder: i64,
    pub checked: usize,
    pub mismatches: Vec<Vec<i64>>,
}

impl PixtonReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.checked > 0
    }
}

fn constant_jet(vars: Vec<String>, e: Vec<i64>, c: BigRational, hi: i64, qorder: i64) -> JetSeries<BigRational> {
    let n = vars.len();
    let mut j = JetSeries::new(vars, vec![0; n], vec![hi; n], qorder);
    j.add_term(e, &QSeries::constant(c, qorder));
    j
}

/// Right hand side as a jet on `[-1, xorder]^n`.
fn rhs(n: usize, f: &JetSeries<BigRational>, qorder: i64, xorder: i64) -> JetSeries<BigRational> {
    let vars = var_names(n);
    let big = xorder + 2;
    let mut sum = JetSeries::new(vars.clone(), vec![0; n], vec![big; n], qorder);
    for l in 0..n {
        let mut e = vec![0; n];
        e[l] = 1;
        sum = sum.add(&constant_jet(vars.clone(), e, int(1), big, qorder));
    }
    let mut out = sum.pow(2).mul(f).truncate(&vec![xorder; n]);
    if n < 2 {
        return out;
    }
    // H(y, rest) = y F_{n-1}(y, rest), needed through y^{2 xorder}
    let mut orders = vec![xorder; n - 1];
    orders[0] = 2 * xorder - 1;
    let g = bloch_okounkov(n - 1, qorder, &orders);
    let mut pair = JetSeries::new(vars.clone(), vec![-1; n], vec![xorder; n], qorder);
    for i in 0..n {
        for j in i + 1..n {
            let rest: Vec<usize> = (0..n).filter(|&l| l != i && l != j).collect();
            for (e, c) in g.terms() {
                let m = e[0] + 1;
                for a in 0..=m {
                    let (ei, ej) = (a, m - a);
                    if ei > xorder || ej > xorder {
                        continue;
                    }
                    let mut ex = vec![0; n];
                    ex[i] = ei;
                    ex[j] = ej;
                    for (k, &l) in rest.iter().enumerate() {
                        ex[l] = e[k + 1];
                    }
                    let w = BigRational::from_integer(binomial(m, a)) * int(-2);
                    pair.add_term(ex, &c.scale(&w));
                }
            }
        }
    }
    out = out.add(&pair);
    out
}

/// Extra conditions asked of each coefficient fit in [`pixton_check`]; the
/// `x^{-1}` coefficients are constants, so low `q`-orders leave few rows.
pub const PIXTON_MARGIN: usize = 3;

/// Checks Pixton's identity for `F_n` on every monomial with exponents
/// `>= -1` and total degree at most `xorder`.
pub fn pixton_check(n: usize, qorder: i64, xorder: i64) -> Result<PixtonReport, PartitionError> {
    let f = bloch_okounkov(n, qorder, &vec![xorder; n]);
    let fits = fit_coefficients(&f, xorder, PIXTON_MARGIN)?;
    let r = rhs(n, &f, qorder, xorder);
    let ev = Evaluator::new(qorder);
    let mut checked = 0;
    let mut mismatches = Vec::new();
    for (e, p) in &fits {
        let lhs = ev.mero(&MeroQJac::poly(p.d_g2()));
        let want = to_fourier(&r.coeff(e));
        checked += 1;
        if !(0..=qorder).all(|k| lhs.coeff(k) == want.coeff(k)) {
            mismatches.push(e.clone());
        }
    }
    Ok(PixtonReport { n, qorder, xorder, checked, mismatches })
}
