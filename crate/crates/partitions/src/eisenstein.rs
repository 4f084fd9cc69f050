use series_core::arith::{bernoulli, int, sigma};
use series_core::{FourierSeries, RationalFunction};

/// `G_k^s = -s B_k / k + sum_n sigma_{k-1}(n) q^n`.
pub fn g_twisted(k: u32, s: u32, qorder: i64) -> FourierSeries {
    assert!(k >= 1 && s <= 1);
    let c0 = -bernoulli(k as usize) * int(s as i64) / int(k as i64);
    FourierSeries::from_fn(0, qorder, |n| {
        if n == 0 {
            RationalFunction::constant(c0.clone())
        } else {
            RationalFunction::constant(num_rational::BigRational::from_integer(sigma(k - 1, n as u64)))
        }
    })
}
