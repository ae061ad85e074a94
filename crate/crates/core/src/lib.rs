//! Exact engine for power-sum generating functions.
//!
//! The crate builds the machinery around sums `1^p + 2^p + ... + n^p`: the
//! polynomial families that encode them (exponential, geometric, and their
//! generalizations), closed forms for the exponential and ordinary generating
//! functions of those sums, coefficient-by-coefficient verification of each
//! closed form against brute-force summation, and floating-point evaluation of
//! the related entire and analytic series.
//!
//! Everything symbolic runs over arbitrary-precision rationals; floats appear
//! only in [`numeric`], at the boundary where series are actually summed.

pub mod error;
pub mod exact;
pub mod identities;
pub mod numeric;
pub mod ratfn;
pub mod special;

pub use error::{Error, Result};
