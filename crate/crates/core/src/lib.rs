//! Exact-arithmetic toolkit for discriminantal arrangements.
//!
//! Starting from a central generic arrangement of n hyperplanes in `Q^k`
//! (every k normals independent), this crate builds the induced arrangement
//! in the n-dimensional space of parallel translates: one hyperplane `D_L`
//! per (k+1)-subset `L`, consisting of the translates where the hyperplanes
//! of `L` share a point. On top of that it computes exact ranks of
//! intersections of the `D_L`, compares them against the transversal ranks
//! predicted for very generic arrangements, and searches for certified
//! defects: simple intersections of deficient rank and the dependency
//! certificates that explain them.
//!
//! Everything is computed over the rationals with arbitrary precision;
//! there is no floating point and no tolerance anywhere. All values are
//! immutable after construction and all operations are pure functions, so
//! everything can be shared freely across threads.
//!
//! Hyperplane indices in this API are 0-based; the JSON wire formats in
//! [`json`] are 1-based.

pub mod arrangement;
pub mod catalog;
pub mod discriminantal;
pub mod error;
pub mod json;
pub mod lattice;
pub mod linalg;
pub mod nvg;

pub use arrangement::{CentralArrangement, Translate};
pub use discriminantal::{Census, DiscNormal, Flat};
pub use error::{Error, Result};
pub use lattice::SetFamily;
pub use linalg::{Mat, Rational, Subspace};
pub use nvg::{DependencyCertificate, KtConfiguration, NvgFinding, TSet};
