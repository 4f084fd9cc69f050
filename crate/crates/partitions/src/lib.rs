//! Sums over integer partitions: Bloch-Okounkov `n`-point functions,
//! Pixton's `d/dG2` identity and the descendent series of `C^2 x E`.

pub mod bloch_okounkov;
pub mod c2e;
pub mod eisenstein;
pub mod laurent;
pub mod partition;
pub mod pixton;

pub use bloch_okounkov::{bloch_okounkov, bloch_okounkov_cutoff, euler_product};
pub use c2e::{c2e_pipt_closed_form, c2e_pt_stationary, localization_sum, pipt_sum, C2eReport, PiptReport, TJet};
pub use eisenstein::g_twisted;
pub use laurent::Laurent;
pub use partition::{partitions, partitions_up_to, Partition};
pub use pixton::{fit_coefficients, pixton_check, PixtonReport, PIXTON_MARGIN};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum PartitionError {
    #[error("coefficient {monomial:?} is not recognized: {source}")]
    Fit {
        monomial: Vec<i64>,
        #[source]
        source: qjac_ring::QJacError,
    },
    #[error("coefficient {0:?} is not quasimodular")]
    NotQuasimodular(Vec<i64>),
}
