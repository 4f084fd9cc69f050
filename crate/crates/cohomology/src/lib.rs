//! Finite cohomology models of elliptic fibrations `π: X -> B`: cup
//! products with Koszul signs, `π_*`/`π^*`, Künneth diagonals, the weight
//! operator, the correspondence `ℰ`, and the normalization product.

pub mod algebra;
pub mod geometry;
pub mod normalization;
mod parse;
pub mod presets;
pub mod tensor;

pub use algebra::{Algebra, CohClass};
pub use geometry::Geometry;
pub use normalization::{normalization_product, NumericPack, Variant};
pub use presets::build_p2xe;
pub use tensor::Tensor;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CohError {
    #[error("class is not a weight eigenvector")]
    NotEigenvector,
    #[error("pairing is degenerate")]
    Degenerate,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid numeric pack: {0}")]
    Pack(String),
}
