//! Künneth tensors `sum c_ij e_i ⊠ e_j` over a pair of algebras.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Algebra, CohClass};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tensor {
    pub terms: BTreeMap<(usize, usize), BigRational>,
}

impl Tensor {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, i: usize, j: usize, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((i, j)).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    /// `a ⊠ b`.
    pub fn product(a: &CohClass, b: &CohClass) -> Self {
        let mut t = Self::zero();
        for (i, x) in a.terms() {
            for (j, y) in b.terms() {
                t.add_term(i, j, x * y);
            }
        }
        t
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut t = self.clone();
        for ((i, j), c) in &o.terms {
            t.add_term(*i, *j, c.clone());
        }
        t
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        let mut t = Self::zero();
        for ((i, j), c) in &self.terms {
            t.add_term(*i, *j, c * k);
        }
        t
    }

    pub fn neg(&self) -> Self {
        self.scale(&-BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Product in `H*(X × X)`: `(a ⊠ b)(c ⊠ d) = (-1)^{|b||c|} ac ⊠ bd`.
    pub fn mul(&self, o: &Self, alg: &Algebra) -> Self {
        let mut t = Self::zero();
        for ((a, b), x) in &self.terms {
            for ((c, d), y) in &o.terms {
                let sign = if alg.is_odd(*b) && alg.is_odd(*c) { -BigRational::one() } else { BigRational::one() };
                let coef = x * y * sign;
                let ac = &alg.mult[*a][*c];
                let bd = &alg.mult[*b][*d];
                for (i, u) in ac.terms() {
                    for (j, v) in bd.terms() {
                        t.add_term(i, j, &coef * u * v);
                    }
                }
            }
        }
        t
    }

    /// Image of the tensor under a linear map on each factor.
    pub fn map(&self, f: impl Fn(usize) -> CohClass) -> Self {
        let mut t = Self::zero();
        for ((i, j), c) in &self.terms {
            t = t.add(&Tensor::product(&f(*i), &f(*j)).scale(c));
        }
        t
    }

    /// Action as a correspondence: `pr_2*(pr_1^*(γ) · T)`.
    pub fn apply(&self, gamma: &CohClass, alg: &Algebra) -> CohClass {
        let mut out = CohClass::zero(alg.dim());
        for ((i, j), c) in &self.terms {
            let w = alg.integrate(&alg.cup(gamma, &alg.basis(*i)));
            if !w.is_zero() {
                out = out.add(&alg.basis(*j).scale(&(w * c)));
            }
        }
        out
    }
}
