//! Exact counting of monotone lattice paths below a boundary, the planar
//! upper triangular rook monoid `IC_n`, and dimensions of submodules of its
//! subset module.

// Summation indices follow the formulas, so index loops are kept.
#![allow(clippy::needless_range_loop)]

pub mod cli;
pub mod error;
pub mod exact_math;
pub mod icn_modules;
pub mod lattice_paths;
pub mod rook_monoid;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
