//! Numerical substrate shared by every other module.

pub mod eig;
pub mod matrix;
pub mod poly;
pub mod quad;

pub use eig::{eig_dense, eig_values, EigenResult};
pub use matrix::{inner, norm, normalize, ComplexMatrix};
pub use poly::{poly_roots, poly_roots_with, RootOptions, Roots};
pub use quad::{integrate_1d, QuadValue};
