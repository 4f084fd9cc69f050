//! Laurent polynomials in the equivariant parameters `t1`, `t2`.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::Coeff;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct TPoly {
    terms: BTreeMap<(i32, i32), BigRational>,
}

impl TPoly {
    pub fn monomial(c: BigRational, a: i32, b: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((a, b), c);
        }
        TPoly { terms }
    }

    pub fn t1() -> Self {
        Self::monomial(BigRational::one(), 1, 0)
    }

    pub fn t2() -> Self {
        Self::monomial(BigRational::one(), 0, 1)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i32, i32), &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, a: i32, b: i32) -> BigRational {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(BigRational::zero)
    }

    fn add_term(&mut self, k: (i32, i32), c: BigRational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(k).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&k);
        }
    }

    /// Substitutes `t2 = k * t1`.
    pub fn restrict_t2(&self, k: &BigRational) -> Self {
        let mut out = TPoly::default();
        for (&(a, b), c) in &self.terms {
            out.add_term((a + b, 0), c * k.pow(b));
        }
        out
    }
}

impl Coeff for TPoly {
    fn zero_coeff() -> Self {
        TPoly::default()
    }
    fn one_coeff() -> Self {
        TPoly::monomial(BigRational::one(), 0, 0)
    }
    fn is_zero_coeff(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, c.clone());
        }
        out
    }
    fn sub(&self, other: &Self) -> Self {
        Coeff::add(self, &Coeff::neg(other))
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = TPoly::default();
        for (&(a, b), x) in &self.terms {
            for (&(c, d), y) in &other.terms {
                out.add_term((a + c, b + d), x * y);
            }
        }
        out
    }
    fn neg(&self) -> Self {
        TPoly { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
    fn scale_by(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return TPoly::default();
        }
        TPoly { terms: self.terms.iter().map(|(k, x)| (*k, x * c)).collect() }
    }
    fn from_rational(c: BigRational) -> Self {
        TPoly::monomial(c, 0, 0)
    }
    fn try_inv(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (&(a, b), c) = self.terms.iter().next()?;
        Some(TPoly::monomial(c.recip(), -a, -b))
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(a, b), c) in &self.terms {
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mut mono = Vec::new();
            for (name, e) in [("t1", a), ("t2", b)] {
                match e {
                    0 => {}
                    1 => mono.push(name.to_string()),
                    _ => mono.push(format!("{name}^{e}")),
                }
            }
            let abs = c.abs();
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{abs}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}
