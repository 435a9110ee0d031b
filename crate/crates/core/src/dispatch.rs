//! `construct(m, n)`: route every size to exactly one construction.

use serde::{Deserialize, Serialize};

use crate::affine::Bindings;
use crate::array::{Axis, Construction, HeffterCandidate, Matrix, Tile, MAX_CELLS};
use crate::error::{HeffterError, Result};
use crate::verify::{assert_necessity, ClassFlags, HeffterKind, Necessity};
use crate::{even, l_construction, low_rows, odd_even};

/// Where one tile ended up in an assembled array.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Placement {
    pub construction: Construction,
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub residue: Option<u8>,
    pub bindings: Bindings,
    pub row: usize,
    pub col: usize,
    pub rows: usize,
    pub cols: usize,
    /// Total shift applied to the tile after instantiation.
    pub shift: i64,
    /// Tile appears transposed relative to its template.
    pub transposed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub construction: Construction,
    /// Human-readable case, e.g. `"n ≡ 2 (mod 8)"`.
    pub case: String,
    pub parameters: Bindings,
    /// Built as the transpose of an `n x m` construction.
    pub transposed: bool,
    pub tiles: Vec<Placement>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionResult {
    pub array: HeffterCandidate,
    pub provenance: Provenance,
    pub claimed: ClassFlags,
}

impl ConstructionResult {
    pub(crate) fn finish(
        assembly: Assembly,
        construction: Construction,
        case: impl Into<String>,
        parameters: Bindings,
    ) -> Result<Self> {
        let Assembly { matrix, tiles } = assembly;
        let claimed = ClassFlags::predicted(matrix.rows(), matrix.cols());
        Ok(ConstructionResult {
            array: HeffterCandidate::new(matrix)?,
            provenance: Provenance {
                construction,
                case: case.into(),
                parameters,
                transposed: false,
                tiles,
            },
            claimed,
        })
    }

    pub fn m(&self) -> usize {
        self.array.m()
    }

    pub fn n(&self) -> usize {
        self.array.n()
    }

    /// The `n x m` result; class membership is unchanged by transposition.
    pub fn transpose(self) -> ConstructionResult {
        let ConstructionResult {
            array,
            provenance,
            claimed,
        } = self;
        let assembly = Assembly {
            matrix: array.into_matrix(),
            tiles: provenance.tiles,
        }
        .transpose();
        ConstructionResult {
            array: HeffterCandidate::new(assembly.matrix).expect("transpose keeps the entry range"),
            provenance: Provenance {
                transposed: !provenance.transposed,
                tiles: assembly.tiles,
                ..provenance
            },
            claimed,
        }
    }

    pub(crate) fn into_assembly(self) -> Assembly {
        Assembly {
            matrix: self.array.into_matrix(),
            tiles: self.provenance.tiles,
        }
    }
}

/// A matrix together with the placements of the tiles it was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Assembly {
    pub matrix: Matrix,
    pub tiles: Vec<Placement>,
}

impl Assembly {
    pub fn tile(tile: &Tile) -> Assembly {
        let p = &tile.provenance;
        Assembly {
            matrix: tile.matrix.clone(),
            tiles: vec![Placement {
                construction: p.construction,
                name: p.name.clone(),
                residue: p.residue,
                bindings: p.bindings,
                row: 0,
                col: 0,
                rows: tile.rows(),
                cols: tile.cols(),
                shift: 0,
                transposed: false,
            }],
        }
    }

    pub fn shift(mut self, k: i64) -> Assembly {
        self.matrix = self.matrix.shift(k);
        for p in &mut self.tiles {
            p.shift += k;
        }
        self
    }

    pub fn transpose(mut self) -> Assembly {
        self.matrix = self.matrix.transpose();
        for p in &mut self.tiles {
            std::mem::swap(&mut p.row, &mut p.col);
            std::mem::swap(&mut p.rows, &mut p.cols);
            p.transposed = !p.transposed;
        }
        self
    }

    pub fn concat(axis: Axis, parts: Vec<Assembly>) -> Result<Assembly> {
        let mats: Vec<&Matrix> = parts.iter().map(|a| &a.matrix).collect();
        let matrix = Matrix::concat(axis, &mats)?;
        let mut tiles = Vec::new();
        let mut offset = 0;
        for part in parts {
            let extent = match axis {
                Axis::Horizontal => part.matrix.cols(),
                Axis::Vertical => part.matrix.rows(),
            };
            for mut p in part.tiles {
                match axis {
                    Axis::Horizontal => p.col += offset,
                    Axis::Vertical => p.row += offset,
                }
                tiles.push(p);
            }
            offset += extent;
        }
        Ok(Assembly { matrix, tiles })
    }

    pub fn hcat(parts: Vec<Assembly>) -> Result<Assembly> {
        Assembly::concat(Axis::Horizontal, parts)
    }

    pub fn vcat(parts: Vec<Assembly>) -> Result<Assembly> {
        Assembly::concat(Axis::Vertical, parts)
    }
}

pub(crate) fn require(m: usize, n: usize, kind: HeffterKind) -> Result<()> {
    if m.checked_mul(n).is_none_or(|c| c > MAX_CELLS) {
        return Err(HeffterError::TooLarge { m, n });
    }
    match assert_necessity(m, n, kind) {
        Necessity::Allow => Ok(()),
        Necessity::Forbid(reason) => Err(HeffterError::Forbidden {
            m,
            n,
            kind: kind.name(),
            reason,
        }),
    }
}

/// Builds an `H(m, n)` for any `m, n >= 3`.
///
/// Routing, first match wins: both even; a side equal to 3; a side equal
/// to 5; exactly one side odd; both odd (border constructions). Sides are
/// swapped by transposition where a builder wants them the other way round.
/// The result is integer iff `mn ≡ 0,3 (mod 4)` and shiftable iff both sides
/// are even.
pub fn construct(m: usize, n: usize) -> Result<ConstructionResult> {
    require(m, n, HeffterKind::Modular)?;
    let (m_odd, n_odd) = (m % 2 == 1, n % 2 == 1);
    if !m_odd && !n_odd {
        return even::build_even(m, n);
    }
    if m == 3 {
        return low_rows::build_3xn(n);
    }
    if n == 3 {
        return Ok(low_rows::build_3xn(m)?.transpose());
    }
    if m == 5 {
        return low_rows::build_5xn(n);
    }
    if n == 5 {
        return Ok(low_rows::build_5xn(m)?.transpose());
    }
    match (m_odd, n_odd) {
        (true, false) => odd_by_even(m, n),
        (false, true) => Ok(odd_by_even(n, m)?.transpose()),
        _ => match (m % 4, n % 4) {
            (1, 1) => l_construction::build_1mod4_1mod4(m, n),
            (3, 3) => l_construction::build_3mod4_3mod4(m, n),
            (1, 3) => l_construction::build_1mod4_3mod4(m, n),
            _ => Ok(l_construction::build_1mod4_3mod4(n, m)?.transpose()),
        },
    }
}

fn odd_by_even(m: usize, n: usize) -> Result<ConstructionResult> {
    if n.is_multiple_of(4) {
        odd_even::build_odd_0mod4(m, n)
    } else {
        odd_even::build_odd_2mod4(m, n)
    }
}
