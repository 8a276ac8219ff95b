//! Exact scalar tower: integer polynomials in `q`, rational functions in `q`,
//! multivariate polynomials over that field, and exact rank/nullspace.

pub mod matrix;
pub mod poly;
pub mod qrat;
pub mod upoly;

pub use matrix::{rank_certified, rational_rank, QMat};
pub use poly::ZPoly;
pub use qrat::{qint, QRat};
pub use upoly::UPoly;
