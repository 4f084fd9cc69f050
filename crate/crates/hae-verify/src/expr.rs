//! Linear combinations of correlator symbols with `MeroQJac` coefficients.

use std::collections::BTreeMap;
use std::fmt;

use qjac_ring::{derive_word, MeroQJac, QJacError};

use crate::insertion::Slot;

/// A canonically ordered insertion list in a fixed curve class.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Key {
    pub beta: i64,
    pub slots: Vec<Slot>,
}

/// `D_p^n_p D_τ^n_tau Z(key)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom {
    pub key: Key,
    pub n_p: u32,
    pub n_tau: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Z(Atom),
    DA(Atom),
    DG2(Atom),
}

impl Symbol {
    pub fn atom(&self) -> &Atom {
        match self {
            Symbol::Z(a) | Symbol::DA(a) | Symbol::DG2(a) => a,
        }
    }

    /// A plain correlator with no operator applied.
    pub fn is_plain(&self) -> bool {
        matches!(self, Symbol::Z(a) if a.n_p == 0 && a.n_tau == 0)
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Expr {
    pub terms: BTreeMap<Symbol, MeroQJac>,
}

impl Expr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn symbol(s: Symbol) -> Self {
        let mut e = Self::zero();
        e.add_term(s, MeroQJac::one());
        e
    }

    pub fn key(key: Key) -> Self {
        Self::symbol(Symbol::Z(Atom { key, n_p: 0, n_tau: 0 }))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, s: Symbol, c: MeroQJac) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(s.clone()).or_insert_with(MeroQJac::zero);
        *e = e.add(&c);
        if e.is_zero() {
            self.terms.remove(&s);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (s, c) in &o.terms {
            out.add_term(s.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&MeroQJac::constant(num_rational::BigRational::from_integer((-1).into()))))
    }

    pub fn scale(&self, k: &MeroQJac) -> Self {
        let mut out = Self::zero();
        for (s, c) in &self.terms {
            out.add_term(s.clone(), c.mul(k));
        }
        out
    }

    /// Applies `D_p` or `D_τ` by the Leibniz rule; only plain `Z` symbols may occur.
    pub fn derive(&self, dp: u32, dtau: u32) -> Result<Self, QJacError> {
        let mut out = self.clone();
        for _ in 0..dp {
            out = out.derive_once(true)?;
        }
        for _ in 0..dtau {
            out = out.derive_once(false)?;
        }
        Ok(out)
    }

    fn derive_once(&self, dp: bool) -> Result<Self, QJacError> {
        let mut out = Self::zero();
        for (s, c) in &self.terms {
            let Symbol::Z(a) = s else {
                return Err(QJacError::NotInRing("D_p/D_τ of an anomaly symbol".into()));
            };
            let dc = if dp { derive_word(c, 1, 0)? } else { derive_word(c, 0, 1)? };
            out.add_term(s.clone(), dc);
            let mut b = a.clone();
            if dp {
                b.n_p += 1;
            } else {
                b.n_tau += 1;
            }
            out.add_term(Symbol::Z(b), c.clone());
        }
        Ok(out)
    }
}

impl fmt::Display for Key {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z{}(", self.beta)?;
        for (i, (k, idx)) in self.slots.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "ch~{k}[e{idx}]")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = self.atom();
        let op = match self {
            Symbol::Z(_) => "",
            Symbol::DA(_) => "d/dA ",
            Symbol::DG2(_) => "d/dG2 ",
        };
        write!(f, "{op}")?;
        if a.n_p > 0 {
            write!(f, "Dp^{} ", a.n_p)?;
        }
        if a.n_tau > 0 {
            write!(f, "Dtau^{} ", a.n_tau)?;
        }
        write!(f, "{}", a.key)
    }
}
