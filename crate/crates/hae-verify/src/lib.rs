//! A correlator database with the reduction rules of stable pairs theory,
//! and both holomorphic anomaly equations built instance by instance and
//! checked against tabulated values.

pub mod check;
pub mod db;
pub mod expr;
pub mod instance;
pub mod insertion;
pub mod k3;
pub mod p2xe;
pub mod reduce;
pub mod theory;

use cohomology::CohError;
use hae_k3::K3Error;
use qjac_ring::QJacError;

pub use check::{check_system, evaluate, Report};
pub use db::{CorrelatorDB, Entry};
pub use expr::{Atom, Expr, Key, Symbol};
pub use instance::{hae_instance, Instance, Op};
pub use insertion::{Insertion, Kind};
pub use reduce::reduce;
pub use theory::Theory;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum VerifyError {
    #[error("class is not a weight eigenvector: {0}")]
    NotEigenvector(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("table error: {0}")]
    Table(String),
    #[error(transparent)]
    Coh(#[from] CohError),
    #[error(transparent)]
    Ring(#[from] QJacError),
    #[error(transparent)]
    K3(#[from] K3Error),
}
