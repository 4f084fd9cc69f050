//! Truncated `q`-series `sum_{n = qshift}^{trunc} c_n q^n`.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::{Coeff, RationalFunction, SeriesError};

/// A `q`-series known exactly through `q^trunc`.
///
/// `coeffs[i]` is the coefficient of `q^(qshift + i)`; the vector always has
/// length `trunc - qshift + 1` (or zero when `trunc < qshift`).
#[derive(Clone, Debug, Serialize)]
pub struct QSeries<R> {
    qshift: i64,
    trunc: i64,
    coeffs: Vec<R>,
}

/// `q`-series whose coefficients are rational functions of `s`.
pub type FourierSeries = QSeries<RationalFunction>;

impl<R: Coeff> QSeries<R> {
    /// Pads or cuts `coeffs` to fit `[qshift, trunc]`.
    pub fn new(qshift: i64, trunc: i64, mut coeffs: Vec<R>) -> Self {
        let len = (trunc - qshift + 1).max(0) as usize;
        coeffs.resize(len, R::zero_coeff());
        QSeries { qshift, trunc, coeffs }
    }

    pub fn zero(trunc: i64) -> Self {
        Self::new(0, trunc, Vec::new())
    }

    pub fn constant(c: R, trunc: i64) -> Self {
        Self::new(0, trunc, vec![c])
    }

    pub fn one(trunc: i64) -> Self {
        Self::constant(R::one_coeff(), trunc)
    }

    /// `c q^k`.
    pub fn monomial(c: R, k: i64, trunc: i64) -> Self {
        let mut out = Self::new(k.min(0), trunc, Vec::new());
        if k <= trunc {
            out.coeffs[(k - out.qshift) as usize] = c;
        }
        out
    }

    /// Builds a series from a coefficient function on `qshift..=trunc`.
    pub fn from_fn(qshift: i64, trunc: i64, f: impl FnMut(i64) -> R) -> Self {
        let coeffs = (qshift..=trunc).map(f).collect();
        Self::new(qshift, trunc, coeffs)
    }

    pub fn qshift(&self) -> i64 {
        self.qshift
    }

    pub fn trunc(&self) -> i64 {
        self.trunc
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Coefficient of `q^n`; zero below `qshift`.
    ///
    /// Panics when `n > trunc`, since that coefficient is unknown.
    pub fn coeff(&self, n: i64) -> R {
        assert!(n <= self.trunc, "coefficient q^{n} beyond truncation {}", self.trunc);
        if n < self.qshift {
            return R::zero_coeff();
        }
        self.coeffs[(n - self.qshift) as usize].clone()
    }

    pub fn get(&self, n: i64) -> Option<&R> {
        if n < self.qshift || n > self.trunc {
            return None;
        }
        self.coeffs.get((n - self.qshift) as usize)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero_coeff())
    }

    /// Lowest power with a nonzero stored coefficient.
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero_coeff())
            .map(|i| self.qshift + i as i64)
    }

    /// Drops coefficients beyond `q^n` (never extends).
    pub fn truncate(&self, n: i64) -> Self {
        if n >= self.trunc {
            return self.clone();
        }
        Self::new(self.qshift, n, self.coeffs.clone())
    }

    /// Raises `qshift` to the valuation so that leading zeros are not stored.
    pub fn tighten(&self) -> Self {
        match self.valuation() {
            Some(v) if v > self.qshift => {
                Self::new(v, self.trunc, self.coeffs[(v - self.qshift) as usize..].to_vec())
            }
            Some(_) => self.clone(),
            None => Self::zero(self.trunc),
        }
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        QSeries {
            qshift: self.qshift + k,
            trunc: self.trunc + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn map(&self, f: impl Fn(&R) -> R) -> Self {
        QSeries {
            qshift: self.qshift,
            trunc: self.trunc,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn map_into<S: Coeff>(&self, f: impl Fn(&R) -> S) -> QSeries<S> {
        QSeries {
            qshift: self.qshift,
            trunc: self.trunc,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let lo = self.qshift.min(other.qshift);
        let hi = self.trunc.min(other.trunc);
        Self::from_fn(lo, hi, |n| {
            let a = self.get(n);
            let b = other.get(n);
            match (a, b) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => R::zero_coeff(),
            }
        })
    }

    pub fn neg(&self) -> Self {
        self.map(|c| c.neg())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        self.map(|x| x.scale_by(c))
    }

    pub fn mul_coeff(&self, c: &R) -> Self {
        self.map(|x| x.mul(c))
    }

    /// Product, exact through `min(Na, Nb, Na + sb, Nb + sa)` where `N` is the
    /// truncation and `s` the shift of each operand.
    pub fn mul(&self, other: &Self) -> Self {
        let (sa, na) = (self.qshift, self.trunc);
        let (sb, nb) = (other.qshift, other.trunc);
        let hi = na.min(nb).min(na + sb).min(nb + sa);
        let lo = sa + sb;
        let len = (hi - lo + 1).max(0) as usize;
        let mut out = vec![R::zero_coeff(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero_coeff() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let k = i + j;
                if k >= len {
                    break;
                }
                if !b.is_zero_coeff() {
                    out[k] = out[k].add(&a.mul(b));
                }
            }
        }
        QSeries { qshift: lo, trunc: hi, coeffs: out }
    }

    /// `1/self`, exact through `N - 2v` where `v` is the valuation.
    pub fn inv(&self) -> Result<Self, SeriesError> {
        let t = self.tighten();
        let v = t.valuation().ok_or(SeriesError::DivisionByZero)?;
        let b0inv = t.coeffs[0].try_inv().ok_or(SeriesError::NonInvertibleLeading)?;
        let len = (t.trunc - v + 1).max(0) as usize;
        let mut out: Vec<R> = Vec::with_capacity(len);
        for n in 0..len {
            let mut acc = if n == 0 { R::one_coeff() } else { R::zero_coeff() };
            for k in 1..=n {
                let bk = &t.coeffs[k];
                if !bk.is_zero_coeff() {
                    acc = acc.sub(&bk.mul(&out[n - k]));
                }
            }
            out.push(acc.mul(&b0inv));
        }
        Ok(QSeries {
            qshift: -v,
            trunc: t.trunc - 2 * v,
            coeffs: out,
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self, SeriesError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.trunc);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// `D_q = q d/dq`.
    pub fn d_q(&self) -> Self {
        QSeries {
            qshift: self.qshift,
            trunc: self.trunc,
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c.scale_by(&BigRational::from_integer((self.qshift + i as i64).into())))
                .collect(),
        }
    }

    /// Coefficientwise equality through `q^n`.
    pub fn agrees_through(&self, other: &Self, n: i64) -> bool {
        let lo = self.qshift.min(other.qshift);
        (lo..=n).all(|k| {
            let a = if k < self.qshift { R::zero_coeff() } else { self.coeff(k) };
            let b = if k < other.qshift { R::zero_coeff() } else { other.coeff(k) };
            a == b
        })
    }
}

/// Two series are equal when their truncations agree and every known
/// coefficient matches; leading zeros below `qshift` are ignored.
impl<R: Coeff> PartialEq for QSeries<R> {
    fn eq(&self, other: &Self) -> bool {
        self.trunc == other.trunc && self.agrees_through(other, self.trunc)
    }
}

impl QSeries<RationalFunction> {
    /// `D_p = p d/dp` applied coefficientwise.
    pub fn d_p(&self) -> Self {
        self.map(|c| c.d_p())
    }

    /// Exchanges `s` and `s^-1` in every coefficient.
    pub fn invert_s(&self) -> Self {
        self.map(|c| c.invert_s())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("series serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, SeriesError> {
        serde_json::from_str(text).map_err(|e| SeriesError::Parse(e.to_string()))
    }
}

#[derive(Deserialize)]
struct RawSeries<R> {
    qshift: i64,
    trunc: i64,
    coeffs: Vec<R>,
}

impl<'de, R: Coeff + Deserialize<'de>> Deserialize<'de> for QSeries<R> {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = RawSeries::<R>::deserialize(de)?;
        let len = (raw.trunc - raw.qshift + 1).max(0) as usize;
        if raw.coeffs.len() != len {
            return Err(D::Error::custom(format!(
                "expected {len} coefficients for q^{}..q^{}, found {}",
                raw.qshift,
                raw.trunc,
                raw.coeffs.len()
            )));
        }
        Ok(QSeries {
            qshift: raw.qshift,
            trunc: raw.trunc,
            coeffs: raw.coeffs,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    type QS = QSeries<BigRational>;

    fn euler(n: i64) -> QS {
        // prod (1 - q^m) by brute multiplication
        let mut acc = QS::one(n);
        for m in 1..=n {
            acc = acc.mul(&QS::one(n).sub(&QS::monomial(rat(1, 1), m, n)));
        }
        acc
    }

    #[test]
    fn pentagonal_numbers() {
        let e = euler(12);
        let want = [1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1];
        for (n, w) in want.iter().enumerate() {
            assert_eq!(e.coeff(n as i64), rat(*w, 1));
        }
    }

    #[test]
    fn inverse_of_shifted_series() {
        let e = euler(10).shift(1);
        let inv = e.inv().unwrap();
        assert_eq!(inv.qshift(), -1);
        assert_eq!(inv.trunc(), 9);
        let prod = e.mul(&inv);
        assert_eq!(prod, QS::one(prod.trunc()));
        // partition numbers
        assert_eq!(inv.coeff(4), rat(7, 1));
    }

    #[test]
    fn mul_truncation_rule() {
        let a = QS::one(5).shift(-1);
        let b = QS::one(7);
        assert_eq!(a.mul(&b).trunc(), 4);
    }

    #[test]
    fn json_round_trip() {
        let s = FourierSeries::from_fn(-1, 2, |n| RationalFunction::s_pow(n).add(&RationalFunction::from_int(3)));
        let back = FourierSeries::from_json(&s.to_json()).unwrap();
        assert_eq!(back, s);
        assert_eq!(back.to_json(), s.to_json());
        assert!(FourierSeries::from_json(r#"{"qshift":0,"trunc":2,"coeffs":[]}"#).is_err());
    }
}
