//! Numeric invariants of an elliptic fibration and the normalization product.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use series_core::{product_builder, FourierSeries};

use crate::CohError;

/// `e(B)`, `c_1(N)·c_1(T_B)` and `c_1(N)^2`, all integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumericPack {
    #[serde(rename = "eB")]
    pub e_b: i64,
    #[serde(rename = "c1N_c1TB")]
    pub c1n_c1tb: i64,
    #[serde(rename = "c1N_sq")]
    pub c1n_sq: i64,
}

impl NumericPack {
    pub fn p2xe() -> Self {
        NumericPack { e_b: 3, c1n_c1tb: 0, c1n_sq: 0 }
    }

    pub fn from_json(s: &str) -> Result<Self, CohError> {
        serde_json::from_str(s).map_err(|e| CohError::Pack(e.to_string()))
    }

    /// `∫ c_3(T_X ⊗ ω_X) = -60 ∫_B c_1(N)^2`.
    pub fn c3(&self) -> i64 {
        -60 * self.c1n_sq
    }

    /// Exponent of each `(1 - q^m)^{-1}` factor.
    pub fn q_exponent(&self) -> i64 {
        self.e_b + self.c1n_c1tb + self.c1n_sq
    }

    /// Coefficient of `G_2` in the `ch̃_2(W)` rule.
    pub fn g2_coefficient(&self) -> BigRational {
        BigRational::from_integer(BigInt::from(self.e_b + self.c1n_c1tb))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// Includes the `(1 - p^l q^m)^{-l c_3}` factors.
    Pt,
    /// Drops the `p`-dependent factors.
    PiPt,
}

/// `∏_m (1-q^m)^{-e} ∏_{l ≤ porder, m} (1-p^l q^m)^{-l c_3}` up to `q^qorder`.
pub fn normalization_product(pack: &NumericPack, qorder: i64, porder: u32, variant: Variant) -> FourierSeries {
    let e = pack.q_exponent();
    let c3 = pack.c3();
    let max_l = match variant {
        Variant::Pt if c3 != 0 => porder,
        _ => 0,
    };
    product_builder(move |l, _m| if l == 0 { -e } else { -(l as i64) * c3 }, max_l, qorder)
}
