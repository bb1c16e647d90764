//! Skew constacyclic codes with derivation over `R = Z4 + wZ4`, their Gray
//! images over `Z4`, reversibility checks and DNA code constructions.
//!
//! The crate is `no_std` and only needs `alloc`. IO, parallel drivers and the
//! command-line tool live in the `skewdna` crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod code;
pub mod distance;
pub mod dna;
pub mod error;
pub mod linalg;
pub mod poly;
pub mod ring;
pub mod search;

pub use code::{ConstaCodeSpec, NMatrix, RGeneratorMatrix, RowMode};
pub use distance::{min_lee_distance, CodeParams, Distance, DistanceScan};
pub use dna::{
    check_sufficient, construction2, is_r_code, is_rc_code, reverse_complement_r, reverse_r,
    Condition, MembershipPoly, ReversibilityReport,
};
pub use error::Error;
pub use linalg::{Z4Code, Z4Matrix};
pub use poly::{OmegaParts, SkewPoly};
pub use ring::{Derivation, GrayVariant, RElement, Z4};
pub use search::{divisor_search, SearchConfig};

/// Default enumeration budget for distance computations (codewords).
pub const DEFAULT_DISTANCE_BUDGET: u64 = 1 << 30;
/// Default exhaustive budget for divisor search (candidates).
pub const DEFAULT_SEARCH_BUDGET: u64 = 1 << 24;
