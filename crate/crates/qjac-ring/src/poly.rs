//! Polynomials in the six free generators and their quotients by `Θ^a Δ^b`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::{Generator, Grading, QJacError};

pub type Exponent = [u32; 6];

/// Polynomial with rational coefficients in `Θ, A, G2, ℘, ℘', G4`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QJacPoly {
    terms: BTreeMap<Exponent, BigRational>,
}

impl QJacPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial([0; 6], c)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(c.into()))
    }

    pub fn monomial(exp: Exponent, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        QJacPoly { terms }
    }

    pub fn generator(g: Generator) -> Self {
        let mut e = [0; 6];
        e[g as usize] = 1;
        Self::monomial(e, BigRational::one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: &Exponent) -> BigRational {
        self.terms.get(exp).cloned().unwrap_or_else(BigRational::zero)
    }

    /// The value when the polynomial is a constant.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&[0; 6]).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, exp: Exponent, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        QJacPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, -c);
        }
        out
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        QJacPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let mut e = *ea;
                for i in 0..6 {
                    e[i] += eb[i];
                }
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Set of gradings occurring among the monomials.
    pub fn gradings(&self) -> BTreeSet<Grading> {
        self.terms.keys().map(Grading::of_exponent).collect()
    }

    /// The common grading of a nonzero homogeneous polynomial.
    pub fn grading(&self) -> Result<Grading, QJacError> {
        let g = self.gradings();
        match g.len() {
            1 => Ok(*g.iter().next().unwrap()),
            0 => Err(QJacError::Inhomogeneous("zero polynomial has no grading".into())),
            _ => Err(QJacError::Inhomogeneous(format!("{} distinct gradings in {self}", g.len()))),
        }
    }

    /// Formal partial derivative in a generator.
    pub fn partial(&self, g: Generator) -> Self {
        let i = g as usize;
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut f = *e;
            f[i] -= 1;
            out.add_term(f, c * BigRational::from_integer(e[i].into()));
        }
        out
    }

    pub fn d_g2(&self) -> Self {
        self.partial(Generator::G2)
    }

    pub fn d_a(&self) -> Self {
        self.partial(Generator::A)
    }

    /// Smallest `Θ` exponent over all monomials (0 for the zero polynomial).
    pub fn min_theta(&self) -> u32 {
        self.terms.keys().map(|e| e[0]).min().unwrap_or(0)
    }

    /// Divides by `Θ^k`; `None` if some monomial has a smaller `Θ` power.
    pub fn div_theta(&self, k: u32) -> Option<Self> {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            if e[0] < k {
                return None;
            }
            let mut f = *e;
            f[0] -= k;
            out.terms.insert(f, c.clone());
        }
        Some(out)
    }

    pub fn mul_theta(&self, k: u32) -> Self {
        QJacPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut f = *e;
                    f[0] += k;
                    (f, c.clone())
                })
                .collect(),
        }
    }

    /// Substitutes each generator by a polynomial.
    pub fn substitute(&self, images: &[QJacPoly; 6]) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let mut m = Self::constant(c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    m = m.mul(&images[i].pow(k));
                }
            }
            out = out.add(&m);
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, QJacError> {
        serde_json::from_str(text).map_err(|e| QJacError::Parse(e.to_string()))
    }
}

fn fmt_monomial(e: &Exponent) -> String {
    let mut parts = Vec::new();
    for g in Generator::ALL {
        match e[g as usize] {
            0 => {}
            1 => parts.push(g.name().to_string()),
            k => parts.push(format!("{}^{k}", g.name())),
        }
    }
    parts.join("*")
}

impl fmt::Display for QJacPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest-degree monomials first reads more naturally
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let a = c.abs();
            let m = fmt_monomial(e);
            if m.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: [u32; 6],
    coef: String,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    terms: Vec<TermJson>,
}

impl Serialize for QJacPoly {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        PolyJson {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermJson { exp: *e, coef: c.to_string() })
                .collect(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for QJacPoly {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = PolyJson::deserialize(de)?;
        let mut out = QJacPoly::zero();
        for t in raw.terms {
            let c = series_core::arith::parse_rational(&t.coef).map_err(D::Error::custom)?;
            out.add_term(t.exp, c);
        }
        Ok(out)
    }
}

/// `numerator / (Θ^theta_pow Δ^delta_pow)`.
///
/// Kept with no common `Θ` factor between numerator and denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MeroQJac {
    pub numerator: QJacPoly,
    pub theta_pow: u32,
    pub delta_pow: u32,
}

impl MeroQJac {
    pub fn new(numerator: QJacPoly, theta_pow: u32, delta_pow: u32) -> Self {
        let mut out = MeroQJac { numerator, theta_pow, delta_pow };
        out.canonicalize();
        out
    }

    pub fn poly(p: QJacPoly) -> Self {
        MeroQJac { numerator: p, theta_pow: 0, delta_pow: 0 }
    }

    pub fn zero() -> Self {
        Self::poly(QJacPoly::zero())
    }

    pub fn one() -> Self {
        Self::poly(QJacPoly::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::poly(QJacPoly::constant(c))
    }

    pub fn generator(g: Generator) -> Self {
        Self::poly(QJacPoly::generator(g))
    }

    fn canonicalize(&mut self) {
        if self.numerator.is_zero() {
            self.theta_pow = 0;
            self.delta_pow = 0;
            return;
        }
        let k = self.numerator.min_theta().min(self.theta_pow);
        if k > 0 {
            self.numerator = self.numerator.div_theta(k).unwrap();
            self.theta_pow -= k;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn is_poly(&self) -> bool {
        self.theta_pow == 0 && self.delta_pow == 0
    }

    /// Same value written over `Δ^b`, using `Δ` as a polynomial in `G4, ℘, ℘'`.
    fn lift_delta(&self, b: u32) -> Self {
        let k = b - self.delta_pow;
        MeroQJac {
            numerator: self.numerator.mul(&crate::deriv::delta_poly().pow(k)),
            theta_pow: self.theta_pow,
            delta_pow: b,
        }
    }

    fn with_theta_pow(&self, a: u32) -> QJacPoly {
        self.numerator.mul_theta(a - self.theta_pow)
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.delta_pow != other.delta_pow {
            let b = self.delta_pow.max(other.delta_pow);
            return self.lift_delta(b).add(&other.lift_delta(b));
        }
        let a = self.theta_pow.max(other.theta_pow);
        let num = self.with_theta_pow(a).add(&other.with_theta_pow(a));
        MeroQJac::new(num, a, self.delta_pow)
    }

    pub fn neg(&self) -> Self {
        MeroQJac {
            numerator: self.numerator.neg(),
            theta_pow: self.theta_pow,
            delta_pow: self.delta_pow,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        MeroQJac::new(self.numerator.scale(k), self.theta_pow, self.delta_pow)
    }

    pub fn mul(&self, other: &Self) -> Self {
        MeroQJac::new(
            self.numerator.mul(&other.numerator),
            self.theta_pow + other.theta_pow,
            self.delta_pow + other.delta_pow,
        )
    }

    pub fn mul_poly(&self, p: &QJacPoly) -> Self {
        MeroQJac::new(self.numerator.mul(p), self.theta_pow, self.delta_pow)
    }

    /// Grading of a homogeneous nonzero element.
    pub fn grading(&self) -> Result<Grading, QJacError> {
        let g = self.numerator.grading()?;
        Ok(Grading {
            weight: g.weight + self.theta_pow as i64 - 12 * self.delta_pow as i64,
            index2: g.index2 - self.theta_pow as i64,
        })
    }

    pub fn partial(&self, g: Generator) -> Self {
        assert!(
            matches!(g, Generator::A | Generator::G2),
            "only d/dA and d/dG2 preserve the denominator"
        );
        MeroQJac::new(self.numerator.partial(g), self.theta_pow, self.delta_pow)
    }

    pub fn d_g2(&self) -> Self {
        self.partial(Generator::G2)
    }

    pub fn d_a(&self) -> Self {
        self.partial(Generator::A)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, QJacError> {
        let raw: MeroQJac = serde_json::from_str(text).map_err(|e| QJacError::Parse(e.to_string()))?;
        Ok(MeroQJac::new(raw.numerator, raw.theta_pow, raw.delta_pow))
    }
}

impl From<QJacPoly> for MeroQJac {
    fn from(p: QJacPoly) -> Self {
        MeroQJac::poly(p)
    }
}

impl fmt::Display for MeroQJac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_poly() {
            return write!(f, "{}", self.numerator);
        }
        let mut den = Vec::new();
        match self.theta_pow {
            0 => {}
            1 => den.push("Theta".to_string()),
            k => den.push(format!("Theta^{k}")),
        }
        match self.delta_pow {
            0 => {}
            1 => den.push("Delta".to_string()),
            k => den.push(format!("Delta^{k}")),
        }
        write!(f, "({})/({})", self.numerator, den.join("*"))
    }
}
