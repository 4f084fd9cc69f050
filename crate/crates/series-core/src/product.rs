//! Infinite products in `q`, truncated.

use num_rational::BigRational;
use num_traits::One;

use crate::{FourierSeries, RationalFunction};

/// Multiplies `coeffs` (ascending from `q^0`) in place by `(1 - c q^m)^e`.
pub(crate) fn apply_factor(coeffs: &mut [RationalFunction], c: &RationalFunction, m: usize, e: i64) {
    if m == 0 || m >= coeffs.len() || e == 0 {
        return;
    }
    let n = coeffs.len();
    if e > 0 {
        for _ in 0..e {
            for k in (m..n).rev() {
                let t = coeffs[k - m].mul(c);
                if !t.is_zero() {
                    coeffs[k] = coeffs[k].sub(&t);
                }
            }
        }
    } else {
        for _ in 0..(-e) {
            for k in m..n {
                let t = coeffs[k - m].mul(c);
                if !t.is_zero() {
                    coeffs[k] = coeffs[k].add(&t);
                }
            }
        }
    }
}

/// Truncated expansion through `q^qorder` of
/// `prod_{m>=1} (1 - q^m)^{e(0,m)} * prod_{l=1..=max_l} prod_{m>=1} (1 - p^l q^m)^{e(l,m)}`.
pub fn product_builder(exponent: impl Fn(u32, u32) -> i64, max_l: u32, qorder: i64) -> FourierSeries {
    let n = (qorder + 1).max(0) as usize;
    let mut coeffs = vec![RationalFunction::zero(); n];
    if n == 0 {
        return FourierSeries::new(0, qorder, coeffs);
    }
    coeffs[0] = RationalFunction::one();
    for l in 0..=max_l {
        let c = RationalFunction::p_pow(l as i64);
        for m in 1..n {
            apply_factor(&mut coeffs, &c, m, exponent(l, m as u32));
        }
    }
    FourierSeries::new(0, qorder, coeffs)
}

/// `(s - s^-1) prod_{m>=1} (1 - p q^m)(1 - p^-1 q^m) / (1 - q^m)^2` through `q^qorder`.
pub fn theta_series(qorder: i64) -> FourierSeries {
    let n = (qorder + 1).max(0) as usize;
    let mut coeffs = vec![RationalFunction::zero(); n];
    if n == 0 {
        return FourierSeries::new(0, qorder, coeffs);
    }
    coeffs[0] = RationalFunction::s_pow(1).sub(&RationalFunction::s_pow(-1));
    let p = RationalFunction::p_pow(1);
    let pinv = RationalFunction::p_pow(-1);
    let one = RationalFunction::constant(BigRational::one());
    for m in 1..n {
        apply_factor(&mut coeffs, &p, m, 1);
        apply_factor(&mut coeffs, &pinv, m, 1);
        apply_factor(&mut coeffs, &one, m, -2);
    }
    FourierSeries::new(0, qorder, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn zero_exponent_gives_one() {
        let one = product_builder(|_, _| 0, 2, 5);
        assert_eq!(one, FourierSeries::one(5));
    }

    #[test]
    fn discriminant_from_product() {
        let d = product_builder(|l, _| if l == 0 { 24 } else { 0 }, 0, 4).shift(1);
        assert_eq!(d.coeff(1), RationalFunction::one());
        assert_eq!(d.coeff(2), RationalFunction::constant(rat(-24, 1)));
        assert_eq!(d.coeff(3), RationalFunction::constant(rat(252, 1)));
        assert_eq!(d.coeff(4), RationalFunction::constant(rat(-1472, 1)));
    }

    #[test]
    fn theta_first_coefficient() {
        let t = theta_series(2);
        let x = RationalFunction::s_pow(1).sub(&RationalFunction::s_pow(-1));
        assert_eq!(t.coeff(1), x.pow(3).unwrap().neg());
    }
}
