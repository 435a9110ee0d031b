//! `3 x n` and `5 x n` arrays.
//!
//! For each residue of `n` (mod 8) there is a sporadic tile `A` of width
//! `s` and a family `A_r` (`0 <= r < k`, `k = (n - s) / 8`) of `8`-column
//! tiles. Concatenating `A, A_0, .., A_{k-1}` gives the full array. Line sums
//! are not zero tile by tile; the declared sums on each template cancel once
//! the whole row is assembled.

use crate::affine::Bindings;
use crate::array::{Construction, LineSums, Matrix, Tile, TileProvenance};
use crate::dispatch::{require, Assembly, ConstructionResult};
use crate::error::{HeffterError, Result};
use crate::tables::{self, *};
use crate::template::{SumSpec, TileTemplate};
use crate::verify::HeffterKind;

const fn three(
    name: &'static str,
    residue: u8,
    printed: tables::Printed,
    row_sums: SumSpec,
    col_sums: SumSpec,
) -> TileTemplate {
    TileTemplate {
        construction: Construction::ThreeRows,
        name,
        residue: Some(residue),
        printed,
        transposed: true,
        row_sums,
        col_sums,
    }
}

const fn five(
    name: &'static str,
    residue: u8,
    printed: tables::Printed,
    row_sums: SumSpec,
    col_sums: SumSpec,
) -> TileTemplate {
    TileTemplate {
        construction: Construction::FiveRows,
        name,
        residue: Some(residue),
        printed,
        transposed: true,
        row_sums,
        col_sums,
    }
}

use SumSpec::{Explicit, Leading, Zero};

/// Sporadic `3 x s` tiles, indexed by `n mod 8`.
pub const THREE_ROW_A: [TileTemplate; 8] = [
    three("A", 0, THREE_0_A, Explicit(&["4k", "-2k", "-2k"]), Zero),
    three("A", 1, THREE_1_A, Explicit(&["4k", "-2k", "-2k"]), Zero),
    three(
        "A",
        2,
        THREE_2_A,
        Explicit(&["54k + 61", "42k + 61", "-48k - 61"]),
        Leading("48k + 61"),
    ),
    three(
        "A",
        3,
        THREE_3_A,
        Explicit(&["48k + 67", "0", "0"]),
        Leading("48k + 67"),
    ),
    three("A", 4, THREE_4_A, Zero, Zero),
    three("A", 5, THREE_5_A, Explicit(&["2k", "-4k", "2k"]), Zero),
    three(
        "A",
        6,
        THREE_6_A,
        Explicit(&["4k", "-50k - 37", "94k + 74"]),
        Leading("48k + 37"),
    ),
    three(
        "A",
        7,
        THREE_7_A,
        Explicit(&["0", "0", "48k + 43"]),
        Leading("48k + 43"),
    ),
];

/// `3 x 8` family tiles, indexed by `n mod 8`.
pub const THREE_ROW_AR: [TileTemplate; 8] = [
    three("A_r", 0, THREE_0_AR, Explicit(&["-4", "2", "2"]), Zero),
    three("A_r", 1, THREE_1_AR, Explicit(&["-4", "2", "2"]), Zero),
    three("A_r", 2, THREE_2_AR, Explicit(&["-6", "6", "0"]), Zero),
    three("A_r", 3, THREE_3_AR, Zero, Zero),
    three("A_r", 4, THREE_4_AR, Zero, Zero),
    three("A_r", 5, THREE_5_AR, Explicit(&["-2", "4", "-2"]), Zero),
    three("A_r", 6, THREE_6_AR, Explicit(&["-4", "2", "2"]), Zero),
    three("A_r", 7, THREE_7_AR, Zero, Zero),
];

/// Sporadic `5 x s` tiles, indexed by `n mod 8`.
pub const FIVE_ROW_A: [TileTemplate; 8] = [
    five("A", 0, FIVE_0_A, Zero, Zero),
    five(
        "A",
        1,
        FIVE_1_A,
        Explicit(&["0", "0", "-80k - 91", "0", "160k + 182"]),
        Leading("80k + 91"),
    ),
    five(
        "A",
        2,
        FIVE_2_A,
        Explicit(&["0", "0", "0", "0", "80k + 101"]),
        Leading("80k + 101"),
    ),
    five("A", 3, FIVE_3_A, Zero, Zero),
    five("A", 4, FIVE_4_A, Zero, Zero),
    five(
        "A",
        5,
        FIVE_5_A,
        Explicit(&["0", "-80k - 131", "0", "0", "160k + 262"]),
        Leading("80k + 131"),
    ),
    five(
        "A",
        6,
        FIVE_6_A,
        Explicit(&["-80k - 141", "-80k - 141", "80k + 141", "0", "160k + 282"]),
        Leading("80k + 141"),
    ),
    five("A", 7, FIVE_7_A, Zero, Zero),
];

/// `5 x 8` family tiles, indexed by `n mod 8`. All have zero line sums.
pub const FIVE_ROW_AR: [TileTemplate; 8] = [
    five("A_r", 0, FIVE_0_AR, Zero, Zero),
    five("A_r", 1, FIVE_1_AR, Zero, Zero),
    five("A_r", 2, FIVE_2_AR, Zero, Zero),
    five("A_r", 3, FIVE_3_AR, Zero, Zero),
    five("A_r", 4, FIVE_4_AR, Zero, Zero),
    five("A_r", 5, FIVE_5_AR, Zero, Zero),
    five("A_r", 6, FIVE_6_AR, Zero, Zero),
    five("A_r", 7, FIVE_7_AR, Zero, Zero),
];

/// Sporadic widths for `3 x n`, indexed by `n mod 8`.
pub const THREE_ROW_WIDTHS: [usize; 8] = [8, 9, 10, 11, 12, 5, 6, 7];
/// Sporadic widths for `5 x n`, indexed by `n mod 8`.
pub const FIVE_ROW_WIDTHS: [usize; 8] = [8, 9, 10, 11, 12, 13, 14, 7];

fn fixed(name: &str, matrix: Matrix) -> Result<Assembly> {
    let sums = matrix.line_sums();
    let tile =
        Tile::new(matrix, TileProvenance::new(Construction::Fixed, name)).with_declared(LineSums {
            row_sums: sums.row_sums,
            col_sums: sums.col_sums,
        });
    Ok(Assembly::tile(&tile))
}

/// `A(k), A_0(k), .., A_{k-1}(k)` side by side.
fn family(
    sporadic: &TileTemplate,
    member: &TileTemplate,
    width: usize,
    n: usize,
) -> Result<(Assembly, i64)> {
    let k = ((n - width) / 8) as i64;
    let mut parts = vec![Assembly::tile(
        &sporadic.instantiate(&Bindings::new().k(k))?,
    )];
    for r in 0..k {
        parts.push(Assembly::tile(
            &member.instantiate(&Bindings::new().k(k).r(r))?,
        ));
    }
    Ok((Assembly::hcat(parts)?, k))
}

/// `H(3, n)` for `n >= 3`; integer iff `n ≡ 0, 1 (mod 4)`.
pub fn build_3xn(n: usize) -> Result<ConstructionResult> {
    require(3, n, HeffterKind::Modular)?;
    match n {
        3 => ConstructionResult::finish(
            fixed("h33", tables::h33())?,
            Construction::Fixed,
            "3 x 3",
            Bindings::new(),
        ),
        4 => ConstructionResult::finish(
            fixed("h34", tables::h34())?,
            Construction::Fixed,
            "3 x 4",
            Bindings::new(),
        ),
        _ => {
            let r = n % 8;
            let (assembly, k) = family(&THREE_ROW_A[r], &THREE_ROW_AR[r], THREE_ROW_WIDTHS[r], n)?;
            ConstructionResult::finish(
                assembly,
                Construction::ThreeRows,
                format!("n ≡ {r} (mod 8)"),
                Bindings::new().k(k),
            )
        }
    }
}

/// `H(5, n)` for `n >= 3`; integer iff `n ≡ 0, 3 (mod 4)`.
pub fn build_5xn(n: usize) -> Result<ConstructionResult> {
    require(5, n, HeffterKind::Modular)?;
    let table = match n {
        3 => return Ok(build_3xn(5)?.transpose()),
        4 => Some(("h54", tables::h54())),
        5 => Some(("h55", tables::h55())),
        6 => Some(("h56", tables::h56())),
        _ => None,
    };
    if let Some((name, matrix)) = table {
        return ConstructionResult::finish(
            fixed(name, matrix)?,
            Construction::Fixed,
            format!("5 x {n}"),
            Bindings::new(),
        );
    }
    let r = n % 8;
    let (assembly, k) = family(&FIVE_ROW_A[r], &FIVE_ROW_AR[r], FIVE_ROW_WIDTHS[r], n)?;
    ConstructionResult::finish(
        assembly,
        Construction::FiveRows,
        format!("n ≡ {r} (mod 8)"),
        Bindings::new().k(k),
    )
}

/// Template pair `(A, A_r)` for `rows ∈ {3, 5}` and residue `n mod 8`.
pub fn templates(
    rows: usize,
    residue: usize,
) -> Result<(&'static TileTemplate, &'static TileTemplate)> {
    if residue >= 8 {
        return Err(HeffterError::Precondition(format!(
            "residue {residue} is not in 0..8"
        )));
    }
    match rows {
        3 => Ok((&THREE_ROW_A[residue], &THREE_ROW_AR[residue])),
        5 => Ok((&FIVE_ROW_A[residue], &FIVE_ROW_AR[residue])),
        _ => Err(HeffterError::Precondition(format!(
            "row families exist for 3 and 5 rows, not {rows}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::verify;

    #[test]
    fn widths_match_printed_tables() {
        for r in 0..8 {
            assert_eq!(
                THREE_ROW_A[r].shape(),
                (3, THREE_ROW_WIDTHS[r]),
                "3-row residue {r}"
            );
            assert_eq!(THREE_ROW_AR[r].shape(), (3, 8));
            assert_eq!(
                FIVE_ROW_A[r].shape(),
                (5, FIVE_ROW_WIDTHS[r]),
                "5-row residue {r}"
            );
            assert_eq!(FIVE_ROW_AR[r].shape(), (5, 8));
        }
    }

    #[test]
    fn declared_sums_hold() {
        for (a, ar) in THREE_ROW_A
            .iter()
            .zip(&THREE_ROW_AR)
            .chain(FIVE_ROW_A.iter().zip(&FIVE_ROW_AR))
        {
            for k in 0..5 {
                let t = a.instantiate(&Bindings::new().k(k)).unwrap();
                assert_eq!(
                    t.line_sums(),
                    t.declared.clone().unwrap(),
                    "{} {:?} k={k}",
                    t.provenance.name,
                    a.residue
                );
                for r in 0..k {
                    let t = ar.instantiate(&Bindings::new().k(k).r(r)).unwrap();
                    assert_eq!(t.line_sums(), t.declared.clone().unwrap());
                }
            }
        }
    }

    #[test]
    fn small_widths() {
        for n in 3..40 {
            let three = build_3xn(n).unwrap();
            let rep = verify(three.array.matrix());
            assert!(rep.is_modular_heffter, "3x{n}: {rep}");
            assert_eq!(rep.is_integer_heffter, n % 4 == 0 || n % 4 == 1, "3x{n}");
            let five = build_5xn(n).unwrap();
            let rep = verify(five.array.matrix());
            assert!(rep.is_modular_heffter, "5x{n}: {rep}");
            assert_eq!(rep.is_integer_heffter, n % 4 == 0 || n % 4 == 3, "5x{n}");
        }
    }
}
