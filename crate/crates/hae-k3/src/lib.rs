//! Reduced anomaly equations for the `K3 x C` series `A_k`, `B_k`, `C_{kl}`:
//! right-hand sides, boundary data, the graded solver, residue formulas and
//! the stationary partition function.

pub mod equations;
pub mod residue;
pub mod solve;
pub mod stationary;
pub mod table;

use qjac_ring::QJacError;
use series_core::SeriesError;

pub use equations::{boundary, leading_a, leading_brute, rhs_d_a, rhs_d_g2};
pub use residue::{a_jet, residue_eval};
pub use solve::{solve_series, weight};
pub use stationary::{kkv, stationary_mero, stationary_z, Insertion};
pub use table::SeriesTable;

/// Which of the three families a series belongs to.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    C,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum K3Error {
    #[error("table entry {0} has not been solved")]
    MissingEntry(String),
    #[error("underdetermined: kernel of dimension {kernel_dim}; supply extra coefficients")]
    Underdetermined { kernel_dim: usize },
    #[error("inconsistent: no polynomial satisfies the equations")]
    Inconsistent,
    #[error("insufficient truncation: need order {need}, have {have}")]
    InsufficientTruncation { need: i64, have: i64 },
    #[error("invalid request: {0}")]
    Invalid(String),
    #[error(transparent)]
    Ring(#[from] QJacError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}
