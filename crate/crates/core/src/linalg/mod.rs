//! Exact rational linear algebra: matrices, determinants, ranks, kernels and
//! subspace arithmetic. No floating point anywhere.

mod mat;
mod rational;
mod subspace;

pub use mat::Mat;
pub use rational::{dot, format_rational, is_zero_vec, parse_rational, rat, rint, sign_normalize, Rational};
pub use subspace::Subspace;
