//! `m` odd, `n` even.
//!
//! For `n ≡ 0 (mod 4)` a `3`- or `5`-row array sits on top of a shifted even
//! block. For `n ≡ 2 (mod 4)` the top strip is a variable corner tile (entries
//! near `x = mn`) followed by a family of `4`-column tiles, again over a
//! shifted even block.

use crate::affine::Bindings;
use crate::array::Construction;
use crate::dispatch::{require, Assembly, ConstructionResult};
use crate::error::{HeffterError, Result};
use crate::even::{even_assembly, BaseTileSet};
use crate::low_rows::{build_3xn, build_5xn};
use crate::tables::{ODD_1MOD4_CORNER, ODD_1MOD4_FAMILY, ODD_3MOD4_CORNER, ODD_3MOD4_FAMILY};
use crate::template::{SumSpec, TileTemplate};
use crate::verify::HeffterKind;

/// `9 x 6` corner for `m ≡ 1 (mod 4)`; first row and column sum to `2x + 1`.
pub const CORNER_1MOD4: TileTemplate = TileTemplate {
    construction: Construction::OddVariableTile,
    name: "A",
    residue: Some(1),
    printed: ODD_1MOD4_CORNER,
    transposed: false,
    row_sums: SumSpec::Leading("2x + 1"),
    col_sums: SumSpec::Leading("2x + 1"),
};

pub const FAMILY_1MOD4: TileTemplate = TileTemplate {
    construction: Construction::OddVariableTile,
    name: "B_r",
    residue: Some(1),
    printed: ODD_1MOD4_FAMILY,
    transposed: false,
    row_sums: SumSpec::Zero,
    col_sums: SumSpec::Zero,
};

/// `7 x 6` corner for `m ≡ 3 (mod 4)`.
pub const CORNER_3MOD4: TileTemplate = TileTemplate {
    construction: Construction::OddVariableTile,
    name: "A",
    residue: Some(3),
    printed: ODD_3MOD4_CORNER,
    transposed: false,
    row_sums: SumSpec::Leading("2x + 1"),
    col_sums: SumSpec::Leading("2x + 1"),
};

pub const FAMILY_3MOD4: TileTemplate = TileTemplate {
    construction: Construction::OddVariableTile,
    name: "B_r",
    residue: Some(3),
    printed: ODD_3MOD4_FAMILY,
    transposed: false,
    row_sums: SumSpec::Zero,
    col_sums: SumSpec::Zero,
};

fn precondition(msg: String) -> HeffterError {
    HeffterError::Precondition(msg)
}

/// `m` odd, `n ≡ 0 (mod 4)`: a `3 x n` or `5 x n` array over `even(m - 3, n)`
/// or `even(m - 5, n)` shifted past it.
pub fn build_odd_0mod4(m: usize, n: usize) -> Result<ConstructionResult> {
    require(m, n, HeffterKind::Modular)?;
    if m.is_multiple_of(2) || !n.is_multiple_of(4) {
        return Err(precondition(format!(
            "need m odd and n ≡ 0 (mod 4), got {m} x {n}"
        )));
    }
    let (top, height) = if m % 4 == 1 {
        (build_5xn(n)?, m - 5)
    } else {
        (build_3xn(n)?, m - 3)
    };
    let top_cells = (top.m() * n) as i64;
    let mut parts = vec![top.into_assembly()];
    if height > 0 {
        parts.push(even_assembly(&BaseTileSet::standard(), height, n)?.shift(top_cells));
    }
    ConstructionResult::finish(
        Assembly::vcat(parts)?,
        Construction::OddStack,
        format!("m ≡ {} (mod 4), n ≡ 0 (mod 4)", m % 4),
        Bindings::new(),
    )
}

/// `m` odd with `m >= 7`, `n ≡ 2 (mod 4)` with `n >= 6`.
pub fn build_odd_2mod4(m: usize, n: usize) -> Result<ConstructionResult> {
    require(m, n, HeffterKind::Modular)?;
    if m.is_multiple_of(2) || n % 4 != 2 || m < 7 || n < 6 {
        return Err(precondition(format!(
            "need m odd >= 7 (>= 9 when m ≡ 1 mod 4) and n ≡ 2 (mod 4) >= 6, got {m} x {n}"
        )));
    }
    let k = (n - 2) / 4;
    let x = (m * n) as i64;
    let (corner, member, s, height, offset) = if m % 4 == 1 {
        let s = (m - 1) / 4;
        if s < 2 {
            return Err(precondition(format!("m ≡ 1 (mod 4) needs m >= 9, got {m}")));
        }
        (
            &CORNER_1MOD4,
            &FAMILY_1MOD4,
            s,
            4 * s - 8,
            36 * k as i64 - 30,
        )
    } else {
        let s = (m - 3) / 4;
        (
            &CORNER_3MOD4,
            &FAMILY_3MOD4,
            s,
            4 * s - 4,
            28 * k as i64 - 22,
        )
    };
    let mut top = vec![Assembly::tile(&corner.instantiate(&Bindings::new().x(x))?)];
    for r in 0..k as i64 - 1 {
        let b = Bindings::new().k(k as i64).r(r);
        top.push(Assembly::tile(&member.instantiate(&b)?));
    }
    let mut parts = vec![Assembly::hcat(top)?];
    if height > 0 {
        parts.push(even_assembly(&BaseTileSet::standard(), height, n)?.shift(offset));
    }
    ConstructionResult::finish(
        Assembly::vcat(parts)?,
        Construction::OddVariableTile,
        format!("m ≡ {} (mod 4), n ≡ 2 (mod 4)", m % 4),
        Bindings::new().k(k as i64).s(s as i64).x(x),
    )
}
