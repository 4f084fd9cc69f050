//! Truncated Laurent series in one variable over a coefficient ring.

use num_rational::BigRational;
use num_traits::Zero;
use series_core::arith::{bernoulli_table, factorial};
use series_core::Coeff;

/// `sum_{e = low}^{hi} c_e x^e`, known through `x^hi`.
#[derive(Clone, Debug)]
pub struct Laurent<C> {
    pub low: i64,
    pub coeffs: Vec<C>,
}

/// Equal truncation orders and equal coefficients; explicit zeros below the
/// first nonzero term do not matter.
impl<C: Coeff> PartialEq for Laurent<C> {
    fn eq(&self, o: &Self) -> bool {
        self.hi() == o.hi() && (self.low.min(o.low)..=self.hi()).all(|e| self.coeff(e) == o.coeff(e))
    }
}

impl<C: Coeff> Laurent<C> {
    pub fn zero(low: i64, hi: i64) -> Self {
        Laurent { low, coeffs: vec![C::zero_coeff(); (hi - low + 1).max(0) as usize] }
    }

    pub fn hi(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    pub fn coeff(&self, e: i64) -> C {
        if e < self.low || e > self.hi() {
            return C::zero_coeff();
        }
        self.coeffs[(e - self.low) as usize].clone()
    }

    fn set(&mut self, e: i64, c: C) {
        let i = (e - self.low) as usize;
        self.coeffs[i] = c;
    }

    /// `c x^e` known through `x^hi`.
    pub fn monomial(c: C, e: i64, hi: i64) -> Self {
        let mut out = Self::zero(e, hi);
        if e <= hi {
            out.set(e, c);
        }
        out
    }

    /// `e^{c x}`.
    pub fn exp(c: &C, hi: i64) -> Self {
        let mut out = Self::zero(0, hi);
        let mut pow = C::one_coeff();
        for j in 0..=hi {
            let f = BigRational::from_integer(factorial(j as u64)).recip();
            out.set(j, pow.scale_by(&f));
            pow = pow.mul(c);
        }
        out
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = Self::zero(self.low.min(o.low), self.hi().min(o.hi()));
        for e in out.low..=out.hi() {
            out.set(e, self.coeff(e).add(&o.coeff(e)));
        }
        out
    }

    pub fn neg(&self) -> Self {
        Laurent { low: self.low, coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &C) -> Self {
        Laurent { low: self.low, coeffs: self.coeffs.iter().map(|x| x.mul(c)).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let low = self.low + o.low;
        let hi = (self.hi() + o.low).min(o.hi() + self.low);
        let mut out = Self::zero(low, hi);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero_coeff() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                let e = low + (i + j) as i64;
                if e > hi {
                    break;
                }
                if !b.is_zero_coeff() {
                    let k = (e - low) as usize;
                    out.coeffs[k] = out.coeffs[k].add(&a.mul(b));
                }
            }
        }
        out
    }

    /// Inverse; the lowest coefficient must be a unit.
    pub fn inv(&self) -> Option<Self> {
        let lead = self.coeffs.first()?.try_inv()?;
        let n = self.coeffs.len();
        let mut out: Vec<C> = Vec::with_capacity(n);
        for i in 0..n {
            let mut acc = if i == 0 { C::one_coeff() } else { C::zero_coeff() };
            for j in 1..=i {
                acc = acc.sub(&self.coeffs[j].mul(&out[i - j]));
            }
            out.push(acc.mul(&lead));
        }
        Some(Laurent { low: -self.low, coeffs: out })
    }

    pub fn truncate(&self, hi: i64) -> Self {
        let mut out = self.clone();
        out.coeffs.truncate((hi - self.low + 1).max(0) as usize);
        out
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Laurent<D> {
        Laurent { low: self.low, coeffs: self.coeffs.iter().map(f).collect() }
    }
}

impl Laurent<BigRational> {
    /// `1/(e^{x/2} - e^{-x/2}) = sum_k B_k(1/2) x^{k-1}/k!`.
    pub fn half_tail(hi: i64) -> Self {
        let b = bernoulli_table((hi + 1).max(0) as usize);
        let mut out = Self::zero(-1, hi);
        for k in 0..=(hi + 1) {
            // B_k(1/2) = (2^{1-k} - 1) B_k
            let two = BigRational::from_integer(2.into());
            let c = (two.pow(1 - k as i32) - BigRational::from_integer(1.into())) * &b[k as usize]
                / BigRational::from_integer(factorial(k as u64));
            if !c.is_zero() {
                out.set(k - 1, c);
            }
        }
        out
    }
}

/// `1/(e^{c x} - 1) = sum_k B_k c^{k-1} x^{k-1}/k!` for a unit `c`.
pub fn geometric_tail<C: Coeff>(c: &C, hi: i64) -> Option<Laurent<C>> {
    let inv = c.try_inv()?;
    let b = bernoulli_table((hi + 1).max(0) as usize);
    let mut out = Laurent::zero(-1, hi);
    let mut pow = inv;
    for k in 0..=(hi + 1) {
        let f = &b[k as usize] / BigRational::from_integer(factorial(k as u64));
        out.set(k - 1, pow.scale_by(&f));
        pow = pow.mul(c);
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use series_core::arith::rat;

    #[test]
    fn half_tail_start() {
        let t = Laurent::half_tail(3);
        assert_eq!(t.coeff(-1), rat(1, 1));
        assert_eq!(t.coeff(0), rat(0, 1));
        assert_eq!(t.coeff(1), rat(-1, 24));
        assert_eq!(t.coeff(3), rat(7, 5760));
    }

    #[test]
    fn inverse_of_exp() {
        let e = Laurent::exp(&rat(3, 1), 6);
        let inv = e.inv().unwrap();
        assert_eq!(inv, Laurent::exp(&rat(-3, 1), 6));
        let g = geometric_tail(&rat(1, 1), 4).unwrap();
        let denom = Laurent::exp(&rat(1, 1), 6).sub(&Laurent::monomial(rat(1, 1), 0, 6));
        assert_eq!(g.mul(&denom).truncate(4), Laurent::monomial(rat(1, 1), 0, 4));
    }
}
