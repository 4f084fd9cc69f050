//! `F_n = (q)_inf sum_λ q^{|λ|} prod_l sum_{i >= 1} e^{(λ_i - i + 1/2) x_l}`.

use std::collections::BTreeMap;

use num_rational::BigRational;
use series_core::arith::int;
use series_core::{Coeff, JetSeries, QSeries};

use crate::laurent::Laurent;
use crate::partition::{partitions_up_to, Partition};

/// `prod_{m >= 1} (1 - q^m)` through `q^qorder`.
pub fn euler_product(qorder: i64) -> QSeries<BigRational> {
    let mut acc = QSeries::one(qorder);
    for m in 1..=qorder {
        let f = QSeries::one(qorder).sub(&QSeries::monomial(int(1), m, qorder));
        acc = acc.mul(&f);
    }
    acc
}

pub(crate) fn var_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

/// `(q)_inf sum_{|λ| <= cutoff} q^{|λ|} prod_l factor(λ, l)` as a jet in
/// `x_1..x_n`; every factor must share the same `low` and `hi` per variable.
pub(crate) fn partition_sum<C: Coeff>(
    n: usize,
    cutoff: i64,
    qorder: i64,
    low: &[i64],
    hi: &[i64],
    factor: impl Fn(&Partition, usize) -> Laurent<C>,
) -> JetSeries<C> {
    let len = (qorder + 1) as usize;
    let mut acc: BTreeMap<Vec<i64>, Vec<C>> = BTreeMap::new();
    for lambda in partitions_up_to(cutoff.min(qorder)) {
        let q = lambda.size() as usize;
        let factors: Vec<Laurent<C>> = (0..n).map(|l| factor(&lambda, l)).collect();
        // outer product of the per-variable factors
        let mut terms: Vec<(Vec<i64>, C)> = vec![(vec![], C::one_coeff())];
        for f in &factors {
            let mut next = Vec::new();
            for (e, c) in &terms {
                for (k, x) in f.coeffs.iter().enumerate() {
                    if x.is_zero_coeff() {
                        continue;
                    }
                    let mut e2 = e.clone();
                    e2.push(f.low + k as i64);
                    next.push((e2, c.mul(x)));
                }
            }
            terms = next;
        }
        for (e, c) in terms {
            let slot = acc.entry(e).or_insert_with(|| vec![C::zero_coeff(); len]);
            slot[q] = slot[q].add(&c);
        }
    }
    let mut jet = JetSeries::new(var_names(n), low.to_vec(), hi.to_vec(), qorder);
    for (e, c) in acc {
        jet.add_term(e, &QSeries::new(0, qorder, c));
    }
    jet.mul_series(&euler_product(qorder).map_into(|c| C::from_rational(c.clone())))
}

fn bo_factor(lambda: &Partition, hi: i64) -> Laurent<BigRational> {
    let half = BigRational::new(1.into(), 2.into());
    let mut f = Laurent::half_tail(hi);
    for i in 1..=lambda.len() {
        let i64i = i as i64;
        let a = int(lambda.part(i) - i64i) + &half;
        let b = int(-i64i) + &half;
        f = f.add(&Laurent::exp(&a, hi).sub(&Laurent::exp(&b, hi)));
    }
    f
}

/// Bloch-Okounkov `n`-point function through `q^qorder` and `x_l^{xorders[l]}`.
pub fn bloch_okounkov(n: usize, qorder: i64, xorders: &[i64]) -> JetSeries<BigRational> {
    bloch_okounkov_cutoff(n, qorder, qorder, xorders)
}

/// As [`bloch_okounkov`], summing only partitions with `|λ| <= cutoff`.
pub fn bloch_okounkov_cutoff(n: usize, cutoff: i64, qorder: i64, xorders: &[i64]) -> JetSeries<BigRational> {
    assert_eq!(xorders.len(), n);
    partition_sum(n, cutoff, qorder, &vec![-1; n], xorders, |lambda, l| bo_factor(lambda, xorders[l]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_product_pentagonal() {
        let e = euler_product(12);
        let want = [1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1];
        for (n, w) in want.iter().enumerate() {
            assert_eq!(e.coeff(n as i64), int(*w));
        }
    }
}
