//! The bigraded polynomial ring on `Θ, A, G2, ℘, ℘', G4`: expansion into
//! Fourier series, recognition of series as ring elements, and the
//! derivations `d/dG2`, `d/dA`, `D_p`, `D_τ`.

pub mod deriv;
pub mod expansion;
pub mod fit;
pub mod linalg;
pub mod parse;
pub mod poly;

use std::fmt;

use num_rational::BigRational;
use series_core::SeriesError;

pub use deriv::{commutator_check, delta_poly, derive_poly, derive_word, derived_derivative, g6_poly, image_table, CommutatorReport, Derivation, ImageTable};
pub use expansion::{evaluate, generator_expansion, Evaluator, SeriesName};
pub use fit::{fit, fit_with_margin, slice_monomials, DEFAULT_MARGIN};
pub use parse::{parse_mero, parse_poly};
pub use poly::{Exponent, MeroQJac, QJacPoly};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum QJacError {
    #[error("no solution: target is not in the requested slice")]
    NoSolution,
    #[error("underdetermined: kernel of dimension {kernel_dim} remains")]
    Underdetermined { kernel_dim: usize },
    #[error("insufficient data: {rows} conditions for {needed} required")]
    InsufficientData { rows: usize, needed: usize },
    #[error("inhomogeneous: {0}")]
    Inhomogeneous(String),
    #[error("not in ring: {0}")]
    NotInRing(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// The six free generators, in exponent-vector order.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Theta = 0,
    A = 1,
    G2 = 2,
    P = 3,
    Pprime = 4,
    G4 = 5,
}

impl Generator {
    pub const ALL: [Generator; 6] = [
        Generator::Theta,
        Generator::A,
        Generator::G2,
        Generator::P,
        Generator::Pprime,
        Generator::G4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Generator::Theta => "Theta",
            Generator::A => "A",
            Generator::G2 => "G2",
            Generator::P => "P",
            Generator::Pprime => "Pp",
            Generator::G4 => "G4",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Some(match name {
            "Theta" | "Θ" => Generator::Theta,
            "A" => Generator::A,
            "G2" => Generator::G2,
            "P" | "℘" => Generator::P,
            "Pp" | "Pprime" | "℘'" | "℘′" => Generator::Pprime,
            "G4" => Generator::G4,
            _ => return None,
        })
    }

    pub fn weight(self) -> i64 {
        [-1, 1, 2, 2, 3, 4][self as usize]
    }

    /// Twice the index; only `Θ` carries index (1/2).
    pub fn index2(self) -> i64 {
        i64::from(self == Generator::Theta)
    }
}

/// `(weight, index)`, with the index stored doubled so it stays integral.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Grading {
    pub weight: i64,
    pub index2: i64,
}

impl Grading {
    pub fn new(weight: i64, index: &BigRational) -> Result<Self, QJacError> {
        let twice = index * BigRational::from_integer(2.into());
        if !twice.is_integer() {
            return Err(QJacError::Inhomogeneous(format!("index {index} is not a half-integer")));
        }
        let index2 = i64::try_from(twice.to_integer()).map_err(|e| QJacError::Parse(e.to_string()))?;
        Ok(Grading { weight, index2 })
    }

    pub fn of_exponent(e: &Exponent) -> Self {
        let mut g = Grading { weight: 0, index2: 0 };
        for gen in Generator::ALL {
            let k = e[gen as usize] as i64;
            g.weight += k * gen.weight();
            g.index2 += k * gen.index2();
        }
        g
    }

    pub fn index(&self) -> BigRational {
        BigRational::new(self.index2.into(), 2.into())
    }
}

impl fmt::Display for Grading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(weight {}, index {})", self.weight, self.index())
    }
}
