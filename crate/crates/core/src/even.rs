//! Shiftable arrays for even `m, n` by tiling shifted `4x4`, `4x6` and `6x6`
//! base blocks.
//!
//! A shiftable block of size `a x b` with support `{1..ab}` keeps zero line
//! sums under any shift, and shifting by `t` moves its support to
//! `{t+1..t+ab}`. Laying blocks out with cumulative shifts therefore covers
//! `{1..mn}` exactly once.

use crate::affine::Bindings;
use crate::array::{Construction, LineSums, Matrix, Tile, TileProvenance};
use crate::dispatch::{require, Assembly, ConstructionResult};
use crate::error::Result;
use crate::tables;
use crate::verify::HeffterKind;

/// The three shiftable base blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseTileSet {
    pub h44: Tile,
    pub h46: Tile,
    pub h66: Tile,
}

fn base(name: &str, matrix: Matrix) -> Tile {
    let declared = LineSums {
        row_sums: vec![0; matrix.rows()],
        col_sums: vec![0; matrix.cols()],
    };
    Tile::new(matrix, TileProvenance::new(Construction::Fixed, name)).with_declared(declared)
}

impl BaseTileSet {
    pub fn standard() -> Self {
        BaseTileSet {
            h44: base("h44", tables::h44()),
            h46: base("h46", tables::h46()),
            h66: base("h66", tables::h66()),
        }
    }
}

impl Default for BaseTileSet {
    fn default() -> Self {
        Self::standard()
    }
}

/// Lays blocks left to right, each shifted past the support of the ones before.
fn chain(blocks: Vec<Assembly>) -> Result<Assembly> {
    let mut offset = 0i64;
    let mut shifted = Vec::with_capacity(blocks.len());
    for b in blocks {
        let cells = b.matrix.len() as i64;
        shifted.push(b.shift(offset));
        offset += cells;
    }
    Assembly::hcat(shifted)
}

/// `4 x n` strip, `n` even and `n >= 4`.
fn strip4(set: &BaseTileSet, n: usize) -> Result<Assembly> {
    let mut blocks = Vec::new();
    let fours = if n.is_multiple_of(4) {
        n / 4
    } else {
        blocks.push(Assembly::tile(&set.h46));
        (n - 6) / 4
    };
    blocks.extend((0..fours).map(|_| Assembly::tile(&set.h44)));
    chain(blocks)
}

/// `6 x n` strip, `n ≡ 2 (mod 4)` and `n >= 6`.
fn strip6(set: &BaseTileSet, n: usize) -> Result<Assembly> {
    let mut blocks = vec![Assembly::tile(&set.h66)];
    blocks.extend((0..(n - 6) / 4).map(|_| Assembly::tile(&set.h46).transpose()));
    chain(blocks)
}

pub(crate) fn even_assembly(set: &BaseTileSet, m: usize, n: usize) -> Result<Assembly> {
    debug_assert!(m.is_multiple_of(2) && n.is_multiple_of(2) && m >= 4 && n >= 4);
    if m % 4 == 2 && n.is_multiple_of(4) {
        return Ok(even_assembly(set, n, m)?.transpose());
    }
    if m.is_multiple_of(4) {
        let strips = (0..m / 4)
            .map(|i| Ok(strip4(set, n)?.shift((4 * n * i) as i64)))
            .collect::<Result<Vec<_>>>()?;
        return Assembly::vcat(strips);
    }
    let mut parts = vec![strip6(set, n)?];
    if m > 6 {
        parts.push(even_assembly(set, m - 6, n)?.shift((6 * n) as i64));
    }
    Assembly::vcat(parts)
}

/// Shiftable `H(m, n)` for even `m, n >= 4`.
pub fn build_even(m: usize, n: usize) -> Result<ConstructionResult> {
    build_even_with(&BaseTileSet::standard(), m, n)
}

pub fn build_even_with(set: &BaseTileSet, m: usize, n: usize) -> Result<ConstructionResult> {
    require(m, n, HeffterKind::Shiftable)?;
    let assembly = even_assembly(set, m, n)?;
    let case = format!("(m, n) ≡ ({}, {}) (mod 4)", m % 4, n % 4);
    ConstructionResult::finish(assembly, Construction::EvenTiling, case, Bindings::new())
}
