//! Geometry together with the evaluation rules specific to a target.

use num_rational::BigRational;

use cohomology::Geometry;

/// Data for the reduced-class correction of the `K3 x C` equation.
#[derive(Clone, Debug)]
pub struct LatticeCorrection {
    /// Rank of `{F, B}^⊥` in `H^2(S)`.
    pub rank: i64,
    pub f: usize,
    /// Basis indices spanning the modelled part of `{F, B}^⊥`.
    pub perp: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct Theory {
    pub geometry: Geometry,
    /// Basis index of `1`.
    pub unit: usize,
    /// Basis index of `W`.
    pub w: usize,
    /// `ch̃_2(e_i) -> a·β + b` for divisors other than `W`.
    pub divisors: Vec<Option<(BigRational, BigRational)>>,
    /// Real virtual dimension per unit of `β`, for compact targets.
    pub vdim_slope: Option<i64>,
    /// Whether the equations carry the Koszul signs `σ_i`, `σ_ij`.
    pub koszul: bool,
    pub correction: Option<LatticeCorrection>,
}

impl Theory {
    pub fn divisor_value(&self, idx: usize, beta: i64) -> Option<BigRational> {
        self.divisors[idx]
            .as_ref()
            .map(|(a, b)| a * BigRational::from_integer(beta.into()) + b)
    }

    pub fn is_odd(&self, idx: usize) -> bool {
        self.geometry.x.is_odd(idx)
    }
}
