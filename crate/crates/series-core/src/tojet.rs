//! Expansion in `z` under `p = e^z` (so `s = e^{z/2}`).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::arith::{factorial, series_div};
use crate::{FourierSeries, JetSeries, QSeries, RationalFunction, SeriesError};

/// Taylor coefficients of `sum_j c_j e^{j z / 2}` through `z^max`.
fn exp_moments(c: &[BigInt], max: usize) -> Vec<BigRational> {
    (0..=max)
        .map(|k| {
            let mut acc = BigRational::zero();
            for (j, cj) in c.iter().enumerate() {
                if !cj.is_zero() && (j > 0 || k == 0) {
                    let x = BigRational::new(BigInt::from(j), BigInt::from(2)).pow(k as i32);
                    acc += x * BigRational::from_integer(cj.clone());
                }
            }
            acc / BigRational::from_integer(factorial(k as u64))
        })
        .collect()
}

fn z_valuation(c: &[BigInt]) -> Result<(usize, Vec<BigRational>), SeriesError> {
    // a nonzero exponential polynomial with r terms vanishes to order < r at z = 0
    let m = exp_moments(c, c.len());
    match m.iter().position(|x| !x.is_zero()) {
        Some(v) => Ok((v, m)),
        None => Err(SeriesError::DivisionByZero),
    }
}

/// Laurent expansion of `f(e^{z/2})`: returns `(v, c)` with
/// `f = sum_i c[i] z^(v + i)` through `z^zorder`.
pub fn ratfun_to_laurent(f: &RationalFunction, zorder: i64) -> Result<(i64, Vec<BigRational>), SeriesError> {
    if f.is_zero() {
        return Ok((0, Vec::new()));
    }
    let (vn, _) = z_valuation(f.numerator())?;
    let (vd, _) = z_valuation(f.denominator())?;
    let v = vn as i64 - vd as i64;
    let len = (zorder - v + 1).max(0) as usize;
    let n = exp_moments(f.numerator(), vn + len);
    let d = exp_moments(f.denominator(), vd + len);
    let q = series_div(&n[vn..], &d[vd..], len);
    Ok((v, q.into_iter().map(|x| x * f.scale()).collect()))
}

/// Converts a Fourier series into a jet in `z` through `z^zorder`.
pub fn to_jet(a: &FourierSeries, zorder: i64) -> Result<JetSeries<BigRational>, SeriesError> {
    let mut per_q: Vec<(i64, i64, Vec<BigRational>)> = Vec::new();
    let mut low = 0i64;
    for (i, c) in a.coeffs().iter().enumerate() {
        let n = a.qshift() + i as i64;
        let (v, cs) = ratfun_to_laurent(c, zorder)?;
        if cs.iter().any(|x| !x.is_zero()) {
            low = low.min(v);
        }
        per_q.push((n, v, cs));
    }
    let mut out = JetSeries::new(vec!["z".to_string()], vec![low], vec![zorder], a.trunc());
    for k in low..=zorder {
        let coeffs: Vec<BigRational> = per_q
            .iter()
            .map(|(_, v, cs)| {
                if k < *v {
                    BigRational::zero()
                } else {
                    cs.get((k - v) as usize).cloned().unwrap_or_else(BigRational::zero)
                }
            })
            .collect();
        out.add_term(vec![k], &QSeries::new(a.qshift(), a.trunc(), coeffs));
    }
    Ok(out)
}

/// `1 / (e^{x/2} - e^{-x/2})` as a Laurent list from `x^-1` through `x^order`.
pub fn inverse_sinh_half(order: i64) -> Vec<BigRational> {
    let f = RationalFunction::s_pow(1).sub(&RationalFunction::s_pow(-1)).inv().expect("nonzero");
    let (v, c) = ratfun_to_laurent(&f, order).expect("finite pole");
    debug_assert_eq!(v, -1);
    c
}
