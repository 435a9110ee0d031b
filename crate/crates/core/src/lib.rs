//! Heffter arrays: construction, verification and small exhaustive oracles.
//!
//! A Heffter array `H(m, n)` is an `m x n` array with entries in
//! `[-mn, mn] \ {0}` whose absolute values are exactly `{1, .., mn}` and
//! whose every row and column sums to `0 (mod 2mn + 1)`. It is *integer* when
//! the sums are exactly zero and *shiftable* when, in addition, every line has
//! as many positive as negative entries.
//!
//! ```
//! use heffter::{construct, verify};
//!
//! let res = construct(7, 9).unwrap();
//! let report = verify(res.array.matrix());
//! assert!(report.is_modular_heffter);
//! assert!(report.is_integer_heffter); // 63 ≡ 3 (mod 4)
//! ```

pub mod affine;
pub mod array;
pub mod dispatch;
pub mod error;
pub mod even;
pub mod l_construction;
pub mod low_rows;
pub mod odd_even;
pub mod oracle;
mod tables;
pub mod template;
pub mod verify;

pub use affine::{Affine, Bindings};
pub use array::{
    Axis, Construction, HeffterCandidate, LineSums, Matrix, Support, Tile, TileProvenance,
};
pub use dispatch::{construct, ConstructionResult, Placement, Provenance};
pub use error::{HeffterError, Result};
pub use even::{build_even, BaseTileSet};
pub use verify::{
    assert_necessity, verify, ClassFlags, HeffterKind, Necessity, VerificationReport,
};

/// The printed fixed arrays used as base cases.
pub mod fixed {
    pub use crate::tables::{h33, h34, h44, h44_printed, h46, h54, h55, h56, h66};
}
