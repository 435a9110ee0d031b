//! Integer arrays, tiles and the operations the constructions are built from.

use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::affine::Bindings;
use crate::error::{HeffterError, Result};

/// Largest `m * n` accepted for a finished construction; keeps `2mn + 1` and
/// every line sum well inside `i64`.
pub const MAX_CELLS: usize = 1 << 30;

/// A dense row-major integer matrix. No invariants beyond its shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<i64>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<i64>) -> Result<Self> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(HeffterError::Shape {
                rows,
                cols,
                len: entries.len(),
            });
        }
        Ok(Matrix {
            rows,
            cols,
            entries,
        })
    }

    /// Builds from nested rows; panics on ragged input. Meant for literals.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        assert!(
            rows.iter().all(|r| r.as_ref().len() == cols),
            "ragged matrix literal"
        );
        let entries = rows
            .iter()
            .flat_map(|r| r.as_ref().iter().copied())
            .collect();
        Matrix::new(rows.len(), cols, entries).expect("non-empty matrix literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<i64> {
        self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.entries[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: i64) {
        self.entries[row * self.cols + col] = value;
    }

    pub fn row(&self, row: usize) -> &[i64] {
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    pub fn column(&self, col: usize) -> impl Iterator<Item = i64> + '_ {
        self.entries.iter().skip(col).step_by(self.cols).copied()
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.entries
            .chunks(self.cols)
            .map(<[i64]>::to_vec)
            .collect()
    }

    /// Positive entries move up by `k`, negative entries down by `k`.
    pub fn shift(&self, k: i64) -> Matrix {
        let entries = self
            .entries
            .iter()
            .map(|&e| match e.signum() {
                1 => e + k,
                -1 => e - k,
                _ => e,
            })
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            entries.extend(self.column(c));
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn negate(&self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }

    pub fn support(&self) -> Support {
        let mut values: Vec<u64> = self.entries.iter().map(|e| e.unsigned_abs()).collect();
        values.sort_unstable();
        Support(values)
    }

    pub fn line_sums(&self) -> LineSums {
        let row_sums = self
            .entries
            .chunks(self.cols)
            .map(|r| r.iter().map(|&e| i128::from(e)).sum())
            .collect();
        let col_sums = (0..self.cols)
            .map(|c| self.column(c).map(i128::from).sum())
            .collect();
        LineSums { row_sums, col_sums }
    }

    /// Number of positive minus number of negative entries, per row then per column.
    pub fn sign_balance(&self) -> (Vec<i64>, Vec<i64>) {
        let rows = self
            .entries
            .chunks(self.cols)
            .map(|r| r.iter().map(|e| e.signum()).sum())
            .collect();
        let cols = (0..self.cols)
            .map(|c| self.column(c).map(i64::signum).sum())
            .collect();
        (rows, cols)
    }

    pub fn concat(axis: Axis, blocks: &[&Matrix]) -> Result<Matrix> {
        let first = blocks.first().ok_or(HeffterError::EmptyConcat)?;
        match axis {
            Axis::Horizontal => {
                let rows = first.rows;
                for (index, b) in blocks.iter().enumerate() {
                    if b.rows != rows {
                        return Err(HeffterError::DimensionMismatch {
                            index,
                            axis_dim: "rows",
                            expected: rows,
                            found: b.rows,
                        });
                    }
                }
                let cols = blocks.iter().map(|b| b.cols).sum();
                let mut entries = Vec::with_capacity(rows * cols);
                for r in 0..rows {
                    for b in blocks {
                        entries.extend_from_slice(b.row(r));
                    }
                }
                Ok(Matrix {
                    rows,
                    cols,
                    entries,
                })
            }
            Axis::Vertical => {
                let cols = first.cols;
                for (index, b) in blocks.iter().enumerate() {
                    if b.cols != cols {
                        return Err(HeffterError::DimensionMismatch {
                            index,
                            axis_dim: "columns",
                            expected: cols,
                            found: b.cols,
                        });
                    }
                }
                let rows = blocks.iter().map(|b| b.rows).sum();
                let entries = blocks
                    .iter()
                    .flat_map(|b| b.entries.iter().copied())
                    .collect();
                Ok(Matrix {
                    rows,
                    cols,
                    entries,
                })
            }
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .entries
            .iter()
            .map(|e| e.to_string().len())
            .max()
            .unwrap_or(1);
        for r in 0..self.rows {
            for (c, e) in self.row(r).iter().enumerate() {
                if c > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{e:>width$}")?;
            }
            if r + 1 < self.rows {
                f.write_str("\n")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    Horizontal,
    Vertical,
}

/// Exact (unreduced) row and column sums.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct LineSums {
    pub row_sums: Vec<i128>,
    pub col_sums: Vec<i128>,
}

impl LineSums {
    pub fn all_zero(&self) -> bool {
        self.row_sums.iter().chain(&self.col_sums).all(|&s| s == 0)
    }

    pub fn all_divisible_by(&self, modulus: i128) -> bool {
        self.row_sums
            .iter()
            .chain(&self.col_sums)
            .all(|s| s.rem_euclid(modulus) == 0)
    }

    /// Combines the sums of blocks laid out along `axis`.
    pub fn concat(axis: Axis, parts: &[&LineSums]) -> LineSums {
        type Side = fn(&LineSums) -> &Vec<i128>;
        let (along, across): (Side, Side) = match axis {
            Axis::Horizontal => (|s| &s.row_sums, |s| &s.col_sums),
            Axis::Vertical => (|s| &s.col_sums, |s| &s.row_sums),
        };
        let len = parts.first().map_or(0, |p| along(p).len());
        let mut summed = vec![0i128; len];
        for p in parts {
            for (acc, v) in summed.iter_mut().zip(along(p)) {
                *acc += v;
            }
        }
        let joined: Vec<i128> = parts
            .iter()
            .flat_map(|p| across(p).iter().copied())
            .collect();
        match axis {
            Axis::Horizontal => LineSums {
                row_sums: summed,
                col_sums: joined,
            },
            Axis::Vertical => LineSums {
                row_sums: joined,
                col_sums: summed,
            },
        }
    }
}

/// Sorted multiset of absolute values.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Support(Vec<u64>);

impl Support {
    pub fn values(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True when the multiset is exactly `{lo, lo+1, ..., hi}`.
    pub fn is_interval(&self, lo: u64, hi: u64) -> bool {
        hi >= lo
            && self.0.len() as u64 == hi - lo + 1
            && self.0.iter().zip(lo..).all(|(&v, want)| v == want)
    }

    pub fn translate(&self, k: u64) -> Support {
        Support(self.0.iter().map(|v| v + k).collect())
    }

    pub fn min(&self) -> Option<u64> {
        self.0.first().copied()
    }

    pub fn max(&self) -> Option<u64> {
        self.0.last().copied()
    }
}

/// Which construction a tile or array came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Construction {
    /// Hard-coded small array.
    Fixed,
    /// Even x even tiling by shifted shiftable blocks.
    EvenTiling,
    /// Three-row sporadic tile plus family.
    ThreeRows,
    /// Five-row sporadic tile plus family.
    FiveRows,
    /// Odd rows stacked over a shifted even block, `n ≡ 0 (mod 4)`.
    OddStack,
    /// Variable tile strip over a shifted even block, `n ≡ 2 (mod 4)`.
    OddVariableTile,
    /// Border construction, `m ≡ n ≡ 1 (mod 4)`.
    BorderOneOne,
    /// Border construction, `m ≡ n ≡ 3 (mod 4)`.
    BorderThreeThree,
    /// Border construction, `m ≡ 1, n ≡ 3 (mod 4)`.
    BorderOneThree,
}

impl Construction {
    pub fn name(self) -> &'static str {
        match self {
            Construction::Fixed => "fixed",
            Construction::EvenTiling => "even-tiling",
            Construction::ThreeRows => "three-rows",
            Construction::FiveRows => "five-rows",
            Construction::OddStack => "odd-stack",
            Construction::OddVariableTile => "odd-variable-tile",
            Construction::BorderOneOne => "border-1-1",
            Construction::BorderThreeThree => "border-3-3",
            Construction::BorderOneThree => "border-1-3",
        }
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TileProvenance {
    pub construction: Construction,
    /// Short label, e.g. `"A"`, `"A_r"`, `"B_r"`, `"h44"`.
    pub name: String,
    /// Residue of `n` (mod 8) for the row families, where that selects the formulas.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub residue: Option<u8>,
    pub bindings: Bindings,
}

impl TileProvenance {
    pub fn new(construction: Construction, name: impl Into<String>) -> Self {
        TileProvenance {
            construction,
            name: name.into(),
            residue: None,
            bindings: Bindings::default(),
        }
    }

    pub fn with_residue(mut self, residue: u8) -> Self {
        self.residue = Some(residue);
        self
    }

    pub fn with_bindings(mut self, bindings: Bindings) -> Self {
        self.bindings = bindings;
        self
    }
}

/// A block with known provenance and, when the source states them, its
/// declared line sums.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tile {
    pub matrix: Matrix,
    pub provenance: TileProvenance,
    pub declared: Option<LineSums>,
}

impl Tile {
    pub fn new(matrix: Matrix, provenance: TileProvenance) -> Self {
        Tile {
            matrix,
            provenance,
            declared: None,
        }
    }

    pub fn with_declared(mut self, declared: LineSums) -> Self {
        self.declared = Some(declared);
        self
    }

    pub fn shift(&self, k: i64) -> Tile {
        Tile {
            matrix: self.matrix.shift(k),
            provenance: self.provenance.clone(),
            declared: self.declared.clone(),
        }
    }

    pub fn transpose(&self) -> Tile {
        Tile {
            matrix: self.matrix.transpose(),
            provenance: self.provenance.clone(),
            declared: self.declared.as_ref().map(|d| LineSums {
                row_sums: d.col_sums.clone(),
                col_sums: d.row_sums.clone(),
            }),
        }
    }

    pub fn line_sums(&self) -> LineSums {
        self.matrix.line_sums()
    }

    pub fn support(&self) -> Support {
        self.matrix.support()
    }

    /// Concatenates tiles; the result keeps the first block's provenance and
    /// carries declared sums only if every block declared them.
    pub fn concat(axis: Axis, blocks: &[Tile]) -> Result<Tile> {
        let first = blocks.first().ok_or(HeffterError::EmptyConcat)?;
        let mats: Vec<&Matrix> = blocks.iter().map(|t| &t.matrix).collect();
        let matrix = Matrix::concat(axis, &mats)?;
        let declared: Option<Vec<&LineSums>> = blocks.iter().map(|t| t.declared.as_ref()).collect();
        Ok(Tile {
            matrix,
            provenance: first.provenance.clone(),
            declared: declared.map(|d| LineSums::concat(axis, &d)),
        })
    }
}

impl Deref for Tile {
    type Target = Matrix;

    fn deref(&self) -> &Matrix {
        &self.matrix
    }
}

/// An `m x n` matrix whose entries are nonzero and lie in `[-mn, mn]`.
///
/// Whether it actually is a Heffter array is for [`crate::verify`] to say.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct HeffterCandidate(Matrix);

impl HeffterCandidate {
    pub fn new(matrix: Matrix) -> Result<Self> {
        let (m, n) = (matrix.rows(), matrix.cols());
        if m.checked_mul(n).is_none_or(|c| c > MAX_CELLS) {
            return Err(HeffterError::TooLarge { m, n });
        }
        let bound = (m * n) as i64;
        for (i, &e) in matrix.entries().iter().enumerate() {
            if e == 0 || e.abs() > bound {
                return Err(HeffterError::EntryOutOfRange {
                    row: i / n,
                    col: i % n,
                    value: e,
                    bound,
                });
            }
        }
        Ok(HeffterCandidate(matrix))
    }

    pub fn m(&self) -> usize {
        self.0.rows()
    }

    pub fn n(&self) -> usize {
        self.0.cols()
    }

    pub fn modulus(&self) -> i64 {
        2 * (self.m() * self.n()) as i64 + 1
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix {
        self.0
    }

    pub fn transpose(&self) -> HeffterCandidate {
        HeffterCandidate(self.0.transpose())
    }

    pub fn negate(&self) -> HeffterCandidate {
        HeffterCandidate(self.0.negate())
    }
}

impl Deref for HeffterCandidate {
    type Target = Matrix;

    fn deref(&self) -> &Matrix {
        &self.0
    }
}

impl TryFrom<Matrix> for HeffterCandidate {
    type Error = HeffterError;

    fn try_from(m: Matrix) -> Result<Self> {
        HeffterCandidate::new(m)
    }
}

impl fmt::Display for HeffterCandidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
