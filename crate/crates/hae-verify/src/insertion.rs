//! Descendent insertions and their expansion into `ch̃` of basis classes.

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use cohomology::{CohClass, Geometry};

/// `ch̃_k(e_idx)` for a basis class `e_idx`.
pub type Slot = (i64, usize);

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Ch,
    Chtilde,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Insertion {
    pub kind: Kind,
    pub k: i64,
    pub class: CohClass,
}

impl Insertion {
    pub fn ch(k: i64, class: CohClass) -> Self {
        Insertion { kind: Kind::Ch, k, class }
    }

    pub fn chtilde(k: i64, class: CohClass) -> Self {
        Insertion { kind: Kind::Chtilde, k, class }
    }

    /// `ch̃` terms of a single insertion: `ch_k(γ) = Σ_j (-1/24)^j ch̃_{k-2j}(γ c_2^j)`.
    fn chtilde_terms(&self, g: &Geometry) -> Vec<(BigRational, i64, CohClass)> {
        match self.kind {
            Kind::Chtilde => vec![(BigRational::one(), self.k, self.class.clone())],
            Kind::Ch => {
                let mut out = Vec::new();
                let mut c = BigRational::one();
                let mut gamma = self.class.clone();
                let mut k = self.k;
                let step = BigRational::new((-1).into(), 24.into());
                while !gamma.is_zero() && k >= 0 {
                    out.push((c.clone(), k, gamma.clone()));
                    gamma = g.x.cup(&gamma, &g.c2_x);
                    c *= &step;
                    k -= 2;
                }
                out
            }
        }
    }
}

/// Multilinear expansion of a product of insertions into basis slots.
pub fn expand(ins: &[Insertion], g: &Geometry) -> Vec<(BigRational, Vec<Slot>)> {
    let mut acc: Vec<(BigRational, Vec<Slot>)> = vec![(BigRational::one(), Vec::new())];
    for i in ins {
        let mut next = Vec::new();
        for (c0, k, gamma) in i.chtilde_terms(g) {
            if k < 0 {
                continue;
            }
            for (idx, c1) in gamma.terms() {
                for (c, slots) in &acc {
                    let mut s = slots.clone();
                    s.push((k, idx));
                    next.push((c * &c0 * c1, s));
                }
            }
        }
        acc = next;
    }
    acc.retain(|(c, _)| !c.is_zero());
    acc
}

/// Expands `ch̃_k(γ)` for an arbitrary class into slots, skipping `k < 0`.
pub fn class_slots(k: i64, gamma: &CohClass) -> Vec<(BigRational, Slot)> {
    if k < 0 {
        return Vec::new();
    }
    gamma.terms().map(|(i, c)| (c.clone(), (k, i))).collect()
}
