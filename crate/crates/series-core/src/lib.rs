//! Exact series arithmetic: rational functions in `s = p^(1/2)`, truncated
//! `q`-series with rational-function coefficients, infinite products and
//! Laurent jets in `z` (with `p = e^z`).

pub mod arith;
pub mod jet;
pub mod poly;
pub mod product;
pub mod qseries;
pub mod ratfun;
pub mod tojet;
pub mod tpoly;

use num_rational::BigRational;

pub use jet::JetSeries;
pub use product::{product_builder, theta_series};
pub use qseries::{FourierSeries, QSeries};
pub use ratfun::RationalFunction;
pub use tojet::{ratfun_to_laurent, to_jet};
pub use tpoly::TPoly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("leading coefficient is not invertible")]
    NonInvertibleLeading,
    #[error("series truncated at {have}, need {need}")]
    InsufficientTruncation { need: i64, have: i64 },
    #[error("parse error: {0}")]
    Parse(String),
}

/// Scalar rings that can sit under a `q`-series.
pub trait Coeff: Clone + PartialEq + std::fmt::Debug {
    fn zero_coeff() -> Self;
    fn one_coeff() -> Self;
    fn is_zero_coeff(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale_by(&self, c: &BigRational) -> Self;
    fn from_rational(c: BigRational) -> Self;
    fn try_inv(&self) -> Option<Self>;
}

impl Coeff for RationalFunction {
    fn zero_coeff() -> Self {
        RationalFunction::zero()
    }
    fn one_coeff() -> Self {
        RationalFunction::one()
    }
    fn is_zero_coeff(&self) -> bool {
        RationalFunction::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        RationalFunction::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        RationalFunction::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        RationalFunction::mul(self, other)
    }
    fn neg(&self) -> Self {
        RationalFunction::neg(self)
    }
    fn scale_by(&self, c: &BigRational) -> Self {
        RationalFunction::scale_by(self, c)
    }
    fn from_rational(c: BigRational) -> Self {
        RationalFunction::constant(c)
    }
    fn try_inv(&self) -> Option<Self> {
        self.inv().ok()
    }
}

impl Coeff for BigRational {
    fn zero_coeff() -> Self {
        <BigRational as num_traits::Zero>::zero()
    }
    fn one_coeff() -> Self {
        <BigRational as num_traits::One>::one()
    }
    fn is_zero_coeff(&self) -> bool {
        <BigRational as num_traits::Zero>::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale_by(&self, c: &BigRational) -> Self {
        self * c
    }
    fn from_rational(c: BigRational) -> Self {
        c
    }
    fn try_inv(&self) -> Option<Self> {
        (!self.is_zero_coeff()).then(|| self.recip())
    }
}
