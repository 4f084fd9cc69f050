//! Truncated Laurent jets in one or several variables with `q`-series coefficients.

use std::collections::BTreeMap;

use num_rational::BigRational;

use crate::{Coeff, QSeries};

/// `sum_e c_e(q) x^e` with every exponent `e_i` in `[lowpow_i, trunc_i]`.
///
/// Coefficients are known through `q^qtrunc`. Terms whose `q`-series vanish
/// are not stored.
#[derive(Clone, Debug, PartialEq)]
pub struct JetSeries<R: Coeff> {
    vars: Vec<String>,
    lowpow: Vec<i64>,
    trunc: Vec<i64>,
    qtrunc: i64,
    coeffs: BTreeMap<Vec<i64>, QSeries<R>>,
}

impl<R: Coeff> JetSeries<R> {
    pub fn new(vars: Vec<String>, lowpow: Vec<i64>, trunc: Vec<i64>, qtrunc: i64) -> Self {
        assert_eq!(vars.len(), lowpow.len());
        assert_eq!(vars.len(), trunc.len());
        JetSeries { vars, lowpow, trunc, qtrunc, coeffs: BTreeMap::new() }
    }

    /// Single-variable jet from `(exponent, coefficient)` pairs.
    pub fn univariate(var: &str, lowpow: i64, trunc: i64, qtrunc: i64, terms: Vec<(i64, QSeries<R>)>) -> Self {
        let mut out = Self::new(vec![var.to_string()], vec![lowpow], vec![trunc], qtrunc);
        for (e, c) in terms {
            out.add_term(vec![e], &c);
        }
        out
    }

    /// The constant jet `c`.
    pub fn constant(vars: Vec<String>, trunc: Vec<i64>, c: QSeries<R>) -> Self {
        let n = vars.len();
        let mut out = Self::new(vars, vec![0; n], trunc, c.trunc());
        out.add_term(vec![0; n], &c);
        out
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn lowpow(&self) -> &[i64] {
        &self.lowpow
    }

    pub fn trunc(&self) -> &[i64] {
        &self.trunc
    }

    pub fn qtrunc(&self) -> i64 {
        self.qtrunc
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &QSeries<R>)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn in_range(&self, e: &[i64]) -> bool {
        e.iter()
            .zip(self.lowpow.iter().zip(&self.trunc))
            .all(|(x, (lo, hi))| lo <= x && x <= hi)
    }

    /// Adds `c x^e`; terms beyond the truncation are dropped.
    ///
    /// Panics if `e` lies below `lowpow`.
    pub fn add_term(&mut self, e: Vec<i64>, c: &QSeries<R>) {
        assert!(
            e.iter().zip(&self.lowpow).all(|(x, lo)| x >= lo),
            "exponent {e:?} below lowpow {:?}",
            self.lowpow
        );
        if !self.in_range(&e) || c.is_zero() {
            return;
        }
        let c = c.truncate(self.qtrunc);
        let slot = self.coeffs.remove(&e);
        let sum = match slot {
            Some(old) => old.add(&c),
            None => c,
        };
        if !sum.is_zero() {
            self.coeffs.insert(e, sum);
        }
    }

    /// Coefficient of `x^e`, zero when absent. Panics beyond the truncation.
    pub fn coeff(&self, e: &[i64]) -> QSeries<R> {
        assert!(
            e.iter().zip(&self.trunc).all(|(x, hi)| x <= hi),
            "exponent {e:?} beyond truncation {:?}",
            self.trunc
        );
        self.coeffs
            .get(e)
            .cloned()
            .unwrap_or_else(|| QSeries::zero(self.qtrunc))
    }

    fn check_vars(&self, other: &Self) {
        assert_eq!(self.vars, other.vars, "jet variables differ");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_vars(other);
        let lowpow = self.lowpow.iter().zip(&other.lowpow).map(|(a, b)| *a.min(b)).collect();
        let trunc = self.trunc.iter().zip(&other.trunc).map(|(a, b)| *a.min(b)).collect();
        let mut out = Self::new(self.vars.clone(), lowpow, trunc, self.qtrunc.min(other.qtrunc));
        for (e, c) in self.coeffs.iter().chain(other.coeffs.iter()) {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.coeffs.values_mut() {
            *c = c.neg();
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        let mut out = Self::new(self.vars.clone(), self.lowpow.clone(), self.trunc.clone(), self.qtrunc);
        for (e, c) in &self.coeffs {
            out.add_term(e.clone(), &c.scale(k));
        }
        out
    }

    /// Multiplies every coefficient by the `q`-series `f`.
    pub fn mul_series(&self, f: &QSeries<R>) -> Self {
        let qtrunc = self.qtrunc.min(f.trunc()).min(self.qtrunc + f.qshift()).min(f.trunc() + self.min_qshift());
        let mut out = Self::new(self.vars.clone(), self.lowpow.clone(), self.trunc.clone(), qtrunc);
        for (e, c) in &self.coeffs {
            out.add_term(e.clone(), &c.mul(f));
        }
        out
    }

    fn min_qshift(&self) -> i64 {
        self.coeffs.values().map(|c| c.qshift()).min().unwrap_or(0)
    }

    /// Product; per variable the result is known through
    /// `min(trunc_a + lowpow_b, trunc_b + lowpow_a)`.
    pub fn mul(&self, other: &Self) -> Self {
        self.check_vars(other);
        let n = self.vars.len();
        let lowpow: Vec<i64> = (0..n).map(|i| self.lowpow[i] + other.lowpow[i]).collect();
        let trunc: Vec<i64> = (0..n)
            .map(|i| (self.trunc[i] + other.lowpow[i]).min(other.trunc[i] + self.lowpow[i]))
            .collect();
        let (sa, sb) = (self.min_qshift(), other.min_qshift());
        let qtrunc = self
            .qtrunc
            .min(other.qtrunc)
            .min(self.qtrunc + sb)
            .min(other.qtrunc + sa);
        let mut out = Self::new(self.vars.clone(), lowpow, trunc, qtrunc);
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &other.coeffs {
                let e: Vec<i64> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                if out.in_range(&e) {
                    out.add_term(e, &ca.mul(cb));
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        if k == 0 {
            return Self::constant(self.vars.clone(), self.trunc.clone(), QSeries::one(self.qtrunc));
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Restricts the truncation to at most `trunc` per variable.
    pub fn truncate(&self, trunc: &[i64]) -> Self {
        let t: Vec<i64> = self.trunc.iter().zip(trunc).map(|(a, b)| *a.min(b)).collect();
        let mut out = Self::new(self.vars.clone(), self.lowpow.clone(), t, self.qtrunc);
        for (e, c) in &self.coeffs {
            out.add_term(e.clone(), c);
        }
        out
    }

    /// Applies `f` to every coefficient series.
    pub fn map_coeffs<S: Coeff>(&self, qtrunc: i64, f: impl Fn(&QSeries<R>) -> QSeries<S>) -> JetSeries<S> {
        let mut out = JetSeries::new(self.vars.clone(), self.lowpow.clone(), self.trunc.clone(), qtrunc);
        for (e, c) in &self.coeffs {
            out.add_term(e.clone(), &f(c));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    type J = JetSeries<BigRational>;

    fn c(x: i64) -> QSeries<BigRational> {
        QSeries::constant(rat(x, 1), 3)
    }

    #[test]
    fn laurent_product_truncation() {
        // (1/z + z) * (1/z + 2z), known through z^3 and z^4
        let a = J::univariate("z", -1, 3, 3, vec![(-1, c(1)), (1, c(1))]);
        let b = J::univariate("z", -1, 4, 3, vec![(-1, c(1)), (1, c(2))]);
        let p = a.mul(&b);
        assert_eq!(p.lowpow(), &[-2]);
        assert_eq!(p.trunc(), &[2]);
        assert_eq!(p.coeff(&[-2]), c(1));
        assert_eq!(p.coeff(&[0]), c(3));
        assert_eq!(p.coeff(&[2]), c(2));
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let a = J::univariate("z", -1, 3, 3, vec![(-1, c(1)), (1, c(1)), (2, c(5))]);
        assert_eq!(a.pow(3), a.mul(&a).mul(&a));
    }
}
