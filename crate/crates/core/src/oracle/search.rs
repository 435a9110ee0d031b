//! Exhaustive depth-first search for small Heffter arrays.

use crate::array::{HeffterCandidate, Matrix};
use crate::error::{HeffterError, Result};
use crate::verify::{verify, HeffterKind};

/// Largest `m * n` the search accepts.
pub const SEARCH_CAP: usize = 12;

struct Search {
    m: usize,
    n: usize,
    bound: i64,
    modulus: i64,
    exact: bool,
    kind: HeffterKind,
    limit: usize,
    cells: Vec<i64>,
    used: Vec<bool>,
    row_sums: Vec<i64>,
    col_sums: Vec<i64>,
    found: Vec<HeffterCandidate>,
}

impl Search {
    /// The entry that closes a line whose other entries sum to `partial`.
    fn closing(&self, partial: i64) -> Option<i64> {
        let v = if self.exact {
            -partial
        } else {
            // unique representative of -partial in [-mn, mn]
            let r = (-partial).rem_euclid(self.modulus);
            if r > self.bound {
                r - self.modulus
            } else {
                r
            }
        };
        (v != 0 && v.abs() <= self.bound).then_some(v)
    }

    fn line_closed(&self, sum: i64) -> bool {
        if self.exact {
            sum == 0
        } else {
            sum % self.modulus == 0
        }
    }

    fn admissible(&self, i: usize, j: usize, v: i64) -> bool {
        if self.used[v.unsigned_abs() as usize] {
            return false;
        }
        // canonical form: a00 > 0 and smallest in absolute value on row 0
        if i == 0 && j > 0 && v.abs() < self.cells[0] {
            return false;
        }
        true
    }

    fn place(&mut self, i: usize, j: usize, v: i64) {
        self.cells[i * self.n + j] = v;
        self.used[v.unsigned_abs() as usize] = true;
        self.row_sums[i] += v;
        self.col_sums[j] += v;
    }

    fn unplace(&mut self, i: usize, j: usize, v: i64) {
        self.cells[i * self.n + j] = 0;
        self.used[v.unsigned_abs() as usize] = false;
        self.row_sums[i] -= v;
        self.col_sums[j] -= v;
    }

    fn done(&self) -> bool {
        self.found.len() >= self.limit
    }

    fn descend(&mut self, idx: usize) {
        if self.done() {
            return;
        }
        if idx == self.m * self.n {
            self.accept();
            return;
        }
        let (i, j) = (idx / self.n, idx % self.n);
        let last_row = i + 1 == self.m;
        let last_col = j + 1 == self.n;
        if last_row || last_col {
            let forced = if last_row {
                self.closing(self.col_sums[j])
            } else {
                self.closing(self.row_sums[i])
            };
            let Some(v) = forced else { return };
            if !self.admissible(i, j, v) || (i == 0 && j == 0 && v < 0) {
                return;
            }
            if last_row && last_col && !self.line_closed(self.row_sums[i] + v) {
                return;
            }
            self.place(i, j, v);
            self.descend(idx + 1);
            self.unplace(i, j, v);
            return;
        }
        for mag in 1..=self.bound {
            for v in [mag, -mag] {
                if idx == 0 && v < 0 {
                    continue;
                }
                if !self.admissible(i, j, v) {
                    continue;
                }
                self.place(i, j, v);
                self.descend(idx + 1);
                self.unplace(i, j, v);
                if self.done() {
                    return;
                }
            }
        }
    }

    fn accept(&mut self) {
        let matrix = Matrix::new(self.m, self.n, self.cells.clone()).expect("search grid shape");
        if verify(&matrix).flags().satisfies(self.kind) {
            self.found
                .push(HeffterCandidate::new(matrix).expect("search stays in range"));
        }
    }
}

/// Up to `limit` arrays of class `kind`, in a fixed enumeration order.
///
/// Cells are filled row by row with values tried as `1, -1, 2, -2, ..`; the
/// last cell of each row and every cell of the last row are forced by the
/// line sums. Only representatives with `a[0][0] > 0` minimal in absolute
/// value on row 0 are produced, which keeps every existence answer intact
/// (negation and column permutation preserve each class). Requires
/// `m * n <= SEARCH_CAP`.
pub fn brute_force_search(
    m: usize,
    n: usize,
    kind: HeffterKind,
    limit: usize,
) -> Result<Vec<HeffterCandidate>> {
    let cells = m.saturating_mul(n);
    if cells > SEARCH_CAP {
        return Err(HeffterError::SearchCap {
            cells,
            cap: SEARCH_CAP,
        });
    }
    if cells == 0 {
        return Err(HeffterError::Precondition(format!("empty {m}x{n} grid")));
    }
    let bound = cells as i64;
    let mut search = Search {
        m,
        n,
        bound,
        modulus: 2 * bound + 1,
        exact: kind != HeffterKind::Modular,
        kind,
        limit,
        cells: vec![0; cells],
        used: vec![false; cells + 1],
        row_sums: vec![0; m],
        col_sums: vec![0; n],
        found: Vec::new(),
    };
    if limit > 0 {
        search.descend(0);
    }
    Ok(search.found)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            brute_force_search(4, 4, HeffterKind::Modular, 1),
            Err(HeffterError::SearchCap { cells: 16, .. })
        ));
    }

    #[test]
    fn results_are_canonical_and_valid() {
        for a in brute_force_search(3, 3, HeffterKind::Modular, 5).unwrap() {
            assert!(verify(a.matrix()).is_modular_heffter);
            let row0 = a.matrix().row(0);
            assert!(row0[0] > 0 && row0.iter().all(|v| v.abs() >= row0[0]));
        }
    }

    #[test]
    fn thin_grids_have_no_arrays() {
        assert!(brute_force_search(2, 4, HeffterKind::Modular, 1)
            .unwrap()
            .is_empty());
        assert!(brute_force_search(1, 3, HeffterKind::Modular, 1)
            .unwrap()
            .is_empty());
    }
}
