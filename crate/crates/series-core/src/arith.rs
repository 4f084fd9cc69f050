//! Small exact number-theory helpers.

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `C(n, k)` for `n >= 0`; zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `sigma_k(n)`, the sum of `d^k` over divisors `d` of `n >= 1`.
pub fn sigma(k: u32, n: u64) -> BigInt {
    let mut s = BigInt::zero();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            s += BigInt::from(d).pow(k);
            let e = n / d;
            if e != d {
                s += BigInt::from(e).pow(k);
            }
        }
        d += 1;
    }
    s
}

/// Bernoulli numbers with `B_1 = -1/2`.
pub fn bernoulli_table(n: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = Vec::with_capacity(n + 1);
    b.push(BigRational::one());
    for m in 1..=n {
        let mut acc = BigRational::zero();
        for (j, bj) in b.iter().enumerate() {
            acc += bj * BigRational::from_integer(binomial(m as i64 + 1, j as i64));
        }
        b.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
    }
    b
}

pub fn bernoulli(n: usize) -> BigRational {
    bernoulli_table(n).pop().unwrap()
}

/// Power-series quotient `n / d` to `len` terms; `d[0]` must be nonzero.
pub fn series_div(n: &[BigRational], d: &[BigRational], len: usize) -> Vec<BigRational> {
    assert!(!d.is_empty() && !d[0].is_zero(), "series_div: zero constant term");
    let inv0 = d[0].recip();
    let mut out: Vec<BigRational> = Vec::with_capacity(len);
    for i in 0..len {
        let mut acc = n.get(i).cloned().unwrap_or_else(BigRational::zero);
        for j in 1..=i.min(d.len().saturating_sub(1)) {
            if !d[j].is_zero() {
                acc -= &d[j] * &out[i - j];
            }
        }
        out.push(acc * &inv0);
    }
    out
}

/// Parses `"a"`, `"a/b"` or `"-a/b"`.
pub fn parse_rational(text: &str) -> Result<BigRational, String> {
    let t = text.trim();
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n = BigInt::from_str(n).map_err(|e| format!("bad rational {text:?}: {e}"))?;
    let d = BigInt::from_str(d).map_err(|e| format!("bad rational {text:?}: {e}"))?;
    if d.is_zero() {
        return Err(format!("zero denominator in {text:?}"));
    }
    Ok(BigRational::new(n, d))
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// `lcm` of the denominators of a list of rationals.
pub fn denom_lcm<'a>(xs: impl IntoIterator<Item = &'a BigRational>) -> BigInt {
    xs.into_iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(4), rat(-1, 30));
        assert_eq!(bernoulli(12), rat(-691, 2730));
        assert_eq!(bernoulli(7), rat(0, 1));
    }

    #[test]
    fn sigma_values() {
        assert_eq!(sigma(1, 6), BigInt::from(12));
        assert_eq!(sigma(3, 2), BigInt::from(9));
        assert_eq!(sigma(0, 12), BigInt::from(6));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(5, 6), BigInt::zero());
        assert_eq!(binomial(5, -1), BigInt::zero());
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational(" -3/6 ").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("7").unwrap(), rat(7, 1));
        assert!(parse_rational("1/0").is_err());
    }
}
