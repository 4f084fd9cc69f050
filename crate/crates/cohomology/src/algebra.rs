//! A finite-dimensional graded-commutative algebra with an integration map.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::CohError;

/// Coordinates over the basis of some [`Algebra`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CohClass(pub Vec<BigRational>);

impl CohClass {
    pub fn zero(dim: usize) -> Self {
        CohClass(vec![BigRational::zero(); dim])
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut c = Self::zero(dim);
        c.0[i] = BigRational::one();
        c
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }

    pub fn add(&self, o: &Self) -> Self {
        CohClass(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        CohClass(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        CohClass(self.0.iter().map(|a| a * k).collect())
    }

    pub fn neg(&self) -> Self {
        CohClass(self.0.iter().map(|a| -a).collect())
    }

    /// Nonzero `(index, coefficient)` pairs.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigRational)> {
        self.0.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }
}

#[derive(Clone, Debug)]
pub struct Algebra {
    pub labels: Vec<String>,
    /// Real cohomological degree of each basis element.
    pub degree: Vec<u32>,
    /// `mult[i][j] = e_i · e_j`.
    pub mult: Vec<Vec<CohClass>>,
    /// `∫ e_i`.
    pub integral: Vec<BigRational>,
}

impl Algebra {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn is_odd(&self, i: usize) -> bool {
        self.degree[i] % 2 == 1
    }

    pub fn basis(&self, i: usize) -> CohClass {
        CohClass::basis(self.dim(), i)
    }

    pub fn one(&self) -> CohClass {
        let i = self.degree.iter().position(|d| *d == 0).expect("unit in degree 0");
        self.basis(i)
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn cup(&self, a: &CohClass, b: &CohClass) -> CohClass {
        let mut out = CohClass::zero(self.dim());
        for (i, x) in a.terms() {
            for (j, y) in b.terms() {
                out = out.add(&self.mult[i][j].scale(&(x * y)));
            }
        }
        out
    }

    pub fn integrate(&self, a: &CohClass) -> BigRational {
        a.terms().map(|(i, c)| c * &self.integral[i]).sum()
    }

    /// Parity of a homogeneous class; `None` for zero or mixed parity.
    pub fn parity(&self, a: &CohClass) -> Option<bool> {
        let mut it = a.terms().map(|(i, _)| self.is_odd(i));
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    /// `g_ij = ∫ e_i e_j`.
    pub fn pairing_matrix(&self) -> Vec<Vec<BigRational>> {
        (0..self.dim())
            .map(|i| (0..self.dim()).map(|j| self.integrate(&self.mult[i][j])).collect())
            .collect()
    }

    /// Checks associativity and graded commutativity of the table.
    pub fn check_axioms(&self) -> bool {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let sign = if self.is_odd(i) && self.is_odd(j) { -BigRational::one() } else { BigRational::one() };
                if self.mult[i][j] != self.mult[j][i].scale(&sign) {
                    return false;
                }
                for k in 0..n {
                    let l = self.cup(&self.mult[i][j], &self.basis(k));
                    let r = self.cup(&self.basis(i), &self.mult[j][k]);
                    if l != r {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Inverse of a square rational matrix.
pub fn invert(m: &[Vec<BigRational>]) -> Result<Vec<Vec<BigRational>>, CohError> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(CohError::Degenerate)?;
        a.swap(col, piv);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
    }
    Ok(a.into_iter().map(|r| r[n..].to_vec()).collect())
}
