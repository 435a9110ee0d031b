//! Both sides odd: a corner tile, a border of `4`-wide tiles along the top
//! and down the left side, and a shifted even block filling the interior.
//!
//! ```text
//! [ corner | top border   ]
//! [ left   | even + shift ]
//! ```
//!
//! Left-border tiles are the transposes of their templates.

use crate::affine::Bindings;
use crate::array::Construction;
use crate::dispatch::{require, Assembly, ConstructionResult};
use crate::error::{HeffterError, Result};
use crate::even::{even_assembly, BaseTileSet};
use crate::tables::{
    L11_BORDER, L11_CORNER, L13_CORNER, L13_LEFT, L13_TOP, L33_BORDER, L33_CORNER,
};
use crate::template::{SumSpec, TileTemplate};
use crate::verify::HeffterKind;

const fn border(
    construction: Construction,
    name: &'static str,
    printed: crate::tables::Printed,
) -> TileTemplate {
    TileTemplate {
        construction,
        name,
        residue: None,
        printed,
        transposed: false,
        row_sums: SumSpec::Zero,
        col_sums: SumSpec::Zero,
    }
}

/// `9 x 9`; row 1 and columns 1, 4 carry `2x + 1`, column 2 carries `-(2x + 1)`.
pub const L11_CORNER_TILE: TileTemplate = TileTemplate {
    construction: Construction::BorderOneOne,
    name: "A",
    residue: None,
    printed: L11_CORNER,
    transposed: false,
    row_sums: SumSpec::Explicit(&["0", "2x + 1", "0", "0", "0", "0", "0", "0", "0"]),
    col_sums: SumSpec::Explicit(&["0", "2x + 1", "-2x - 1", "0", "2x + 1", "0", "0", "0", "0"]),
};
/// `9 x 4`.
pub const L11_BORDER_TILE: TileTemplate = border(Construction::BorderOneOne, "B_r", L11_BORDER);

/// `7 x 7`; first row and column carry `2x + 1`.
pub const L33_CORNER_TILE: TileTemplate = TileTemplate {
    construction: Construction::BorderThreeThree,
    name: "A",
    residue: None,
    printed: L33_CORNER,
    transposed: false,
    row_sums: SumSpec::Leading("2x + 1"),
    col_sums: SumSpec::Leading("2x + 1"),
};
/// `7 x 4`.
pub const L33_BORDER_TILE: TileTemplate = border(Construction::BorderThreeThree, "B_r", L33_BORDER);

/// `9 x 7`, zero sums.
pub const L13_CORNER_TILE: TileTemplate = border(Construction::BorderOneThree, "A", L13_CORNER);
/// `9 x 4` top border.
pub const L13_TOP_TILE: TileTemplate = border(Construction::BorderOneThree, "B_r", L13_TOP);
/// `7 x 4`, placed transposed down the left side.
pub const L13_LEFT_TILE: TileTemplate = border(Construction::BorderOneThree, "C_r", L13_LEFT);

struct Layout {
    construction: Construction,
    corner: Assembly,
    top: Vec<Assembly>,
    left: Vec<Assembly>,
    interior: (usize, usize),
    offset: i64,
    params: Bindings,
}

fn assemble(m: usize, n: usize, layout: Layout) -> Result<ConstructionResult> {
    let Layout {
        construction,
        corner,
        top,
        left,
        interior: (ih, iw),
        offset,
        params,
    } = layout;
    let mut first = vec![corner];
    first.extend(top);
    let mut rows = vec![Assembly::hcat(first)?];
    if ih > 0 {
        let mut second = vec![Assembly::vcat(left)?];
        if iw > 0 {
            second.push(even_assembly(&BaseTileSet::standard(), ih, iw)?.shift(offset));
        }
        rows.push(Assembly::hcat(second)?);
    }
    ConstructionResult::finish(
        Assembly::vcat(rows)?,
        construction,
        format!("(m, n) ≡ ({}, {}) (mod 4)", m % 4, n % 4),
        params,
    )
}

fn check(m: usize, n: usize, residues: (usize, usize), min: (usize, usize)) -> Result<()> {
    require(m, n, HeffterKind::Modular)?;
    if (m % 4, n % 4) != residues || m < min.0 || n < min.1 {
        return Err(HeffterError::Precondition(format!(
            "need m ≡ {} (mod 4) >= {}, n ≡ {} (mod 4) >= {}, got {m} x {n}",
            residues.0, min.0, residues.1, min.1
        )));
    }
    Ok(())
}

fn border_tile(t: &TileTemplate, s: i64, k: i64, r: i64) -> Result<Assembly> {
    Ok(Assembly::tile(
        &t.instantiate(&Bindings::new().s(s).k(k).r(r))?,
    ))
}

/// `m ≡ n ≡ 1 (mod 4)`, `m, n >= 9`.
pub fn build_1mod4_1mod4(m: usize, n: usize) -> Result<ConstructionResult> {
    check(m, n, (1, 1), (9, 9))?;
    let (s, k) = (((m - 1) / 4) as i64, ((n - 1) / 4) as i64);
    let x = (m * n) as i64;
    let corner = Assembly::tile(&L11_CORNER_TILE.instantiate(&Bindings::new().x(x).y(s + k))?);
    let mut top = Vec::new();
    let mut left = Vec::new();
    for r in 0..s + k - 4 {
        let b = border_tile(&L11_BORDER_TILE, s, k, r)?;
        if r < k - 2 {
            top.push(b);
        } else {
            left.push(b.transpose());
        }
    }
    assemble(
        m,
        n,
        Layout {
            construction: Construction::BorderOneOne,
            corner,
            top,
            left,
            interior: ((4 * s - 8) as usize, (4 * k - 8) as usize),
            offset: 36 * s + 36 * k - 81,
            params: Bindings::new().s(s).k(k).x(x).y(s + k),
        },
    )
}

/// `m ≡ n ≡ 3 (mod 4)`, `m, n >= 7`.
pub fn build_3mod4_3mod4(m: usize, n: usize) -> Result<ConstructionResult> {
    check(m, n, (3, 3), (7, 7))?;
    let (s, k) = (((m - 3) / 4) as i64, ((n - 3) / 4) as i64);
    let x = (m * n) as i64;
    let corner = Assembly::tile(&L33_CORNER_TILE.instantiate(&Bindings::new().x(x).y(s + k))?);
    let mut top = Vec::new();
    let mut left = Vec::new();
    for r in 0..s + k - 2 {
        let b = border_tile(&L33_BORDER_TILE, s, k, r)?;
        if r < k - 1 {
            top.push(b);
        } else {
            left.push(b.transpose());
        }
    }
    assemble(
        m,
        n,
        Layout {
            construction: Construction::BorderThreeThree,
            corner,
            top,
            left,
            interior: ((4 * s - 4) as usize, (4 * k - 4) as usize),
            offset: 28 * s + 28 * k - 11,
            params: Bindings::new().s(s).k(k).x(x).y(s + k),
        },
    )
}

/// `m ≡ 1, n ≡ 3 (mod 4)`, `m >= 9`, `n >= 7`.
pub fn build_1mod4_3mod4(m: usize, n: usize) -> Result<ConstructionResult> {
    check(m, n, (1, 3), (9, 7))?;
    let (s, k) = (((m - 1) / 4) as i64, ((n - 3) / 4) as i64);
    let x = (m * n) as i64;
    let corner = Assembly::tile(&L13_CORNER_TILE.instantiate(&Bindings::new().x(x).y(s + k))?);
    let top = (0..k - 1)
        .map(|r| border_tile(&L13_TOP_TILE, s, k, r))
        .collect::<Result<Vec<_>>>()?;
    let left = (0..s - 2)
        .map(|r| Ok(border_tile(&L13_LEFT_TILE, s, k, r)?.transpose()))
        .collect::<Result<Vec<_>>>()?;
    assemble(
        m,
        n,
        Layout {
            construction: Construction::BorderOneThree,
            corner,
            top,
            left,
            interior: ((4 * s - 8) as usize, (4 * k - 4) as usize),
            offset: 28 * s + 36 * k - 37,
            params: Bindings::new().s(s).k(k).x(x).y(s + k),
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::verify;

    #[test]
    fn corners_sum_as_declared() {
        for t in [&L11_CORNER_TILE, &L33_CORNER_TILE, &L13_CORNER_TILE] {
            let tile = t.instantiate(&Bindings::new().x(117).y(5)).unwrap();
            assert_eq!(
                tile.line_sums(),
                tile.declared.clone().unwrap(),
                "{:?}",
                t.construction
            );
        }
    }

    #[test]
    fn smallest_cases() {
        type Build = fn(usize, usize) -> Result<ConstructionResult>;
        let cases: [(Build, usize, usize); 6] = [
            (build_1mod4_1mod4, 9, 9),
            (build_1mod4_1mod4, 13, 17),
            (build_3mod4_3mod4, 7, 7),
            (build_3mod4_3mod4, 11, 15),
            (build_1mod4_3mod4, 9, 7),
            (build_1mod4_3mod4, 17, 11),
        ];
        for (build, m, n) in cases {
            let res = build(m, n).unwrap();
            let rep = verify(res.array.matrix());
            assert!(rep.is_modular_heffter, "{m}x{n}: {rep}");
            assert_eq!(rep.is_integer_heffter, (m * n) % 4 == 3, "{m}x{n}");
        }
    }

    #[test]
    fn rejects_wrong_residues() {
        assert!(build_1mod4_1mod4(9, 7).is_err());
        assert!(build_3mod4_3mod4(7, 9).is_err());
        assert!(build_1mod4_3mod4(5, 7).is_err());
    }
}
