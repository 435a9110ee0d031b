//! Tile templates: a printed table of affine expressions plus the line sums
//! the construction claims for it.

use crate::affine::{Affine, Bindings};
use crate::array::{Construction, LineSums, Matrix, Tile, TileProvenance};
use crate::error::Result;
use crate::tables::Printed;

/// Declared sums along one axis.
#[derive(Debug, Clone, Copy)]
pub enum SumSpec {
    /// Every line sums to 0.
    Zero,
    /// First line carries the given sum, the rest are 0.
    Leading(&'static str),
    /// One expression per line.
    Explicit(&'static [&'static str]),
}

impl SumSpec {
    fn eval(&self, len: usize, b: &Bindings) -> Result<Vec<i128>> {
        match self {
            SumSpec::Zero => Ok(vec![0; len]),
            SumSpec::Leading(expr) => {
                let mut v = vec![0; len];
                v[0] = i128::from(Affine::parse(expr)?.eval(b)?);
                Ok(v)
            }
            SumSpec::Explicit(exprs) => {
                assert_eq!(exprs.len(), len, "declared sums do not match tile shape");
                exprs
                    .iter()
                    .map(|e| Ok(i128::from(Affine::parse(e)?.eval(b)?)))
                    .collect()
            }
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct TileTemplate {
    pub construction: Construction,
    pub name: &'static str,
    pub residue: Option<u8>,
    pub(crate) printed: Printed,
    /// Printed rows are tile columns.
    pub transposed: bool,
    pub row_sums: SumSpec,
    pub col_sums: SumSpec,
}

impl TileTemplate {
    /// `(rows, cols)` of the instantiated tile.
    pub fn shape(&self) -> (usize, usize) {
        let (pr, pc) = (self.printed.len(), self.printed[0].len());
        if self.transposed {
            (pc, pr)
        } else {
            (pr, pc)
        }
    }

    /// The printed cell at tile position `(row, col)`.
    pub fn expression(&self, row: usize, col: usize) -> &'static str {
        if self.transposed {
            self.printed[col][row]
        } else {
            self.printed[row][col]
        }
    }

    pub fn instantiate(&self, b: &Bindings) -> Result<Tile> {
        let (rows, cols) = self.shape();
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(Affine::parse(self.expression(r, c))?.eval(b)?);
            }
        }
        let matrix = Matrix::new(rows, cols, entries)?;
        let declared = LineSums {
            row_sums: self.row_sums.eval(rows, b)?,
            col_sums: self.col_sums.eval(cols, b)?,
        };
        let mut provenance = TileProvenance::new(self.construction, self.name).with_bindings(*b);
        provenance.residue = self.residue;
        Ok(Tile::new(matrix, provenance).with_declared(declared))
    }
}
