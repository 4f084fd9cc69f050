//! Exact rational functions of `s`, where `p = s^2`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::poly::{self, IntPoly};
use crate::SeriesError;

/// A quotient `scale * num(s) / den(s)`.
///
/// Canonical form: `num` and `den` are primitive integer polynomials with
/// positive leading coefficients and no common factor, and all rational
/// content (including the sign) lives in `scale`. Zero is `0 * [] / [1]`.
/// Because the form is unique, structural equality is value equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: IntPoly,
    den: IntPoly,
    scale: BigRational,
}

impl RationalFunction {
    pub fn zero() -> Self {
        RationalFunction {
            num: Vec::new(),
            den: vec![BigInt::one()],
            scale: BigRational::zero(),
        }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunction {
            num: vec![BigInt::one()],
            den: vec![BigInt::one()],
            scale: c,
        }
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(c.into()))
    }

    /// `s^k` for any integer `k`.
    pub fn s_pow(k: i64) -> Self {
        Self::monomial(BigRational::one(), k)
    }

    /// `p^k = s^(2k)`.
    pub fn p_pow(k: i64) -> Self {
        Self::s_pow(2 * k)
    }

    pub fn monomial(c: BigRational, k: i64) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let unit = |e: i64| poly::shift_up(&[BigInt::one()], e as usize);
        let (num, den) = if k >= 0 {
            (unit(k), vec![BigInt::one()])
        } else {
            (vec![BigInt::one()], unit(-k))
        };
        RationalFunction { num, den, scale: c }
    }

    /// The Laurent polynomial `sum_i coeffs[i] s^(low + i)`.
    pub fn laurent(low: i64, coeffs: &[BigRational]) -> Self {
        let lcm = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| num_integer::lcm(acc, c.denom().clone()));
        let mut num: IntPoly = coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        poly::trim(&mut num);
        let scale = BigRational::new(BigInt::one(), lcm);
        let (num, den) = if low >= 0 {
            (poly::shift_up(&num, low as usize), vec![BigInt::one()])
        } else {
            (num, poly::shift_up(&[BigInt::one()], (-low) as usize))
        };
        Self::normalize(num, den, scale).expect("nonzero denominator")
    }

    /// Builds `scale * num / den` from integer coefficient lists and normalizes.
    pub fn from_parts(num: IntPoly, den: IntPoly, scale: BigRational) -> Result<Self, SeriesError> {
        let mut num = num;
        let mut den = den;
        poly::trim(&mut num);
        poly::trim(&mut den);
        Self::normalize(num, den, scale)
    }

    fn normalize(num: IntPoly, den: IntPoly, scale: BigRational) -> Result<Self, SeriesError> {
        if den.is_empty() {
            return Err(SeriesError::DivisionByZero);
        }
        if num.is_empty() || scale.is_zero() {
            return Ok(Self::zero());
        }
        let (num, den) = if poly::is_monomial(&den) && den.len() == 1 {
            (num, den)
        } else {
            let g = poly::gcd(&num, &den);
            if g.len() == 1 {
                (num, den)
            } else {
                (
                    poly::div_exact(&num, &g).expect("gcd divides"),
                    poly::div_exact(&den, &g).expect("gcd divides"),
                )
            }
        };
        let (cn, num) = poly::primitive_part(&num);
        let (cd, den) = poly::primitive_part(&den);
        let scale = scale * BigRational::new(cn, cd);
        Ok(RationalFunction { num, den, scale })
    }

    pub fn numerator(&self) -> &[BigInt] {
        &self.num
    }

    pub fn denominator(&self) -> &[BigInt] {
        &self.den
    }

    pub fn scale(&self) -> &BigRational {
        &self.scale
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.num.len() == 1 && self.den.len() == 1 && self.scale.is_one()
    }

    /// The value when the function does not depend on `s`.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        (self.num.len() == 1 && self.den.len() == 1).then(|| self.scale.clone())
    }

    /// True when the denominator is a power of `s`.
    pub fn is_laurent_polynomial(&self) -> bool {
        poly::is_monomial(&self.den)
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        out.scale = -out.scale;
        out
    }

    pub fn scale_by(&self, c: &BigRational) -> Self {
        if c.is_zero() || self.is_zero() {
            return Self::zero();
        }
        let mut out = self.clone();
        out.scale *= c;
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if other.num.len() == 1 && other.den.len() == 1 {
            return self.scale_by(&other.scale);
        }
        if self.num.len() == 1 && self.den.len() == 1 {
            return other.scale_by(&self.scale);
        }
        let g1 = poly::gcd(&self.num, &other.den);
        let g2 = poly::gcd(&other.num, &self.den);
        let q = |a: &IntPoly, g: &IntPoly| {
            if g.len() == 1 {
                a.clone()
            } else {
                poly::div_exact(a, g).expect("gcd divides")
            }
        };
        let num = poly::mul(&q(&self.num, &g1), &q(&other.num, &g2));
        let den = poly::mul(&q(&self.den, &g2), &q(&other.den, &g1));
        let (cn, num) = poly::primitive_part(&num);
        let (cd, den) = poly::primitive_part(&den);
        RationalFunction {
            num,
            den,
            scale: &self.scale * &other.scale * BigRational::new(cn, cd),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        // bring both scales over a common integer denominator
        let qa = self.scale.denom();
        let qb = other.scale.denom();
        let ca = self.scale.numer() * qb;
        let cb = other.scale.numer() * qa;
        let common = BigRational::new(BigInt::one(), qa * qb);
        if self.den == other.den {
            let num = poly::add(&poly::scale(&self.num, &ca), &poly::scale(&other.num, &cb));
            return Self::normalize(num, self.den.clone(), common).expect("nonzero denominator");
        }
        let g = poly::gcd(&self.den, &other.den);
        let (da, db) = if g.len() == 1 {
            (self.den.clone(), other.den.clone())
        } else {
            (
                poly::div_exact(&self.den, &g).unwrap(),
                poly::div_exact(&other.den, &g).unwrap(),
            )
        };
        let num = poly::add(
            &poly::scale(&poly::mul(&self.num, &db), &ca),
            &poly::scale(&poly::mul(&other.num, &da), &cb),
        );
        let den = poly::mul(&self.den, &db);
        Self::normalize(num, den, common).expect("nonzero denominator")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn inv(&self) -> Result<Self, SeriesError> {
        if self.is_zero() {
            return Err(SeriesError::DivisionByZero);
        }
        Ok(RationalFunction {
            num: self.den.clone(),
            den: self.num.clone(),
            scale: self.scale.recip(),
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self, SeriesError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<Self, SeriesError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        Ok(acc)
    }

    /// `D_p = p d/dp = (s/2) d/ds`.
    pub fn d_p(&self) -> Self {
        if self.num.len() <= 1 && self.den.len() <= 1 {
            return Self::zero();
        }
        let dn = poly::derivative(&self.num);
        let dd = poly::derivative(&self.den);
        let top = poly::sub(&poly::mul(&dn, &self.den), &poly::mul(&self.num, &dd));
        let num = poly::shift_up(&top, 1);
        let den = poly::mul(&self.den, &self.den);
        Self::normalize(num, den, &self.scale / BigRational::from_integer(2.into()))
            .expect("nonzero denominator")
    }

    /// Laurent expansion around `s = 0`: returns `(v, c)` with
    /// `f = sum_i c[i] s^(v + i)`, keeping terms up to `s^max_pow`.
    pub fn expand_at_zero(&self, max_pow: i64) -> (i64, Vec<BigRational>) {
        if self.is_zero() {
            return (0, Vec::new());
        }
        let vn = poly::valuation(&self.num).unwrap() as i64;
        let vd = poly::valuation(&self.den).unwrap() as i64;
        let v = vn - vd;
        let n: Vec<BigRational> = self.num[vn as usize..]
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let d: Vec<BigRational> = self.den[vd as usize..]
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let len = (max_pow - v + 1).max(0) as usize;
        let q = crate::arith::series_div(&n, &d, len);
        (v, q.into_iter().map(|c| c * &self.scale).collect())
    }

    /// Coefficient of `s^k` in the expansion around `s = 0`.
    pub fn coeff_at_zero(&self, k: i64) -> BigRational {
        let (v, c) = self.expand_at_zero(k);
        if k < v {
            return BigRational::zero();
        }
        c.get((k - v) as usize).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Exchanges `s` and `s^-1`.
    pub fn invert_s(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let dn = self.num.len() as i64 - 1;
        let dd = self.den.len() as i64 - 1;
        let mut num: IntPoly = self.num.iter().rev().cloned().collect();
        let mut den: IntPoly = self.den.iter().rev().cloned().collect();
        // s^-dn num_rev / (s^-dd den_rev)
        let shift = dd - dn;
        if shift > 0 {
            num = poly::shift_up(&num, shift as usize);
        } else if shift < 0 {
            den = poly::shift_up(&den, (-shift) as usize);
        }
        Self::from_parts(num, den, self.scale.clone()).expect("nonzero denominator")
    }
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

fn fmt_poly(p: &[BigInt]) -> String {
    let mut out = String::new();
    for (i, c) in p.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let a = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = match i {
            0 => String::new(),
            1 => "s".to_string(),
            _ => format!("s^{i}"),
        };
        if mono.is_empty() {
            out.push_str(&a.to_string());
        } else if a.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{a}*{mono}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let num = fmt_poly(&self.num);
        let den = fmt_poly(&self.den);
        let body = if self.den.len() == 1 {
            num
        } else {
            format!("({num})/({den})")
        };
        if self.scale.is_one() {
            write!(f, "{body}")
        } else if body == "1" {
            write!(f, "{}", self.scale)
        } else {
            write!(f, "{}*{body}", self.scale)
        }
    }
}

/// JSON integers: plain numbers when they fit in `i64`, decimal strings otherwise.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum JsonInt {
    Small(i64),
    Big(String),
}

impl JsonInt {
    fn from_big(x: &BigInt) -> Self {
        match x.to_i64() {
            Some(v) => JsonInt::Small(v),
            None => JsonInt::Big(x.to_string()),
        }
    }

    fn to_big(&self) -> Result<BigInt, String> {
        match self {
            JsonInt::Small(v) => Ok(BigInt::from(*v)),
            JsonInt::Big(s) => BigInt::from_str(s).map_err(|e| e.to_string()),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct RfJson {
    num: Vec<JsonInt>,
    den: Vec<JsonInt>,
    scale: String,
}

impl Serialize for RationalFunction {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        RfJson {
            num: self.num.iter().map(JsonInt::from_big).collect(),
            den: self.den.iter().map(JsonInt::from_big).collect(),
            scale: self.scale.to_string(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for RationalFunction {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = RfJson::deserialize(de)?;
        let conv = |v: &[JsonInt]| -> Result<IntPoly, D::Error> {
            v.iter().map(|x| x.to_big().map_err(D::Error::custom)).collect()
        };
        let scale = crate::arith::parse_rational(&raw.scale).map_err(D::Error::custom)?;
        RationalFunction::from_parts(conv(&raw.num)?, conv(&raw.den)?, scale).map_err(D::Error::custom)
    }
}
