//! Partitions of `{1, .., 3n}` into triples with `a + b = c` or
//! `a + b + c = 6n + 1`, by exact cover.

use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{HeffterError, Result};

/// Largest `n` accepted by [`triples_exact_cover`].
pub const TRIPLES_CAP: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TripleMode {
    /// `a + b = c`.
    Sum,
    /// `a + b + c = 6n + 1`.
    Wrap,
}

/// `a < b < c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Triple {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub mode: TripleMode,
}

impl Triple {
    pub fn holds(&self, n: usize) -> bool {
        let (a, b, c) = (self.a as u64, self.b as u64, self.c as u64);
        match self.mode {
            TripleMode::Sum => a + b == c,
            TripleMode::Wrap => a + b + c == 6 * n as u64 + 1,
        }
    }

    fn mask(&self) -> u64 {
        (1 << (self.a - 1)) | (1 << (self.b - 1)) | (1 << (self.c - 1))
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = match self.mode {
            TripleMode::Sum => "sum",
            TripleMode::Wrap => "wrap",
        };
        write!(f, "{{{}, {}, {}}} {op}", self.a, self.b, self.c)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriplePartition {
    pub n: usize,
    pub triples: Vec<Triple>,
}

impl TriplePartition {
    /// Confirms the triples partition `{1, .., 3n}` and each satisfies its mode.
    pub fn check(&self) -> Result<()> {
        let err = |msg: String| Err(HeffterError::Precondition(msg));
        if self.triples.len() != self.n {
            return err(format!("{} triples for n = {}", self.triples.len(), self.n));
        }
        let mut seen = vec![false; 3 * self.n + 1];
        for t in &self.triples {
            if !(t.a < t.b && t.b < t.c) {
                return err(format!("{t} is not increasing"));
            }
            if !t.holds(self.n) {
                return err(format!("{t} does not satisfy its equation"));
            }
            for v in [t.a, t.b, t.c] {
                let v = v as usize;
                if v == 0 || v > 3 * self.n || seen[v] {
                    return err(format!("{v} is out of range or repeated"));
                }
                seen[v] = true;
            }
        }
        Ok(())
    }
}

fn candidates(n: usize, modular: bool) -> Vec<Triple> {
    let top = 3 * n as u32;
    let mut rows = Vec::new();
    for a in 1..=top {
        for b in a + 1..=top {
            if a + b <= top {
                rows.push(Triple {
                    a,
                    b,
                    c: a + b,
                    mode: TripleMode::Sum,
                });
            }
            if modular {
                let c = 6 * n as u32 + 1 - a - b;
                if c > b && c <= top {
                    rows.push(Triple {
                        a,
                        b,
                        c,
                        mode: TripleMode::Wrap,
                    });
                }
            }
        }
    }
    rows
}

struct Cover<'a> {
    rows: &'a [Triple],
    /// Rows containing each element, in row order.
    by_element: Vec<Vec<usize>>,
    full: u64,
    chosen: Vec<usize>,
}

impl Cover<'_> {
    fn solve(&mut self, covered: u64) -> bool {
        if covered == self.full {
            return true;
        }
        // element with the fewest rows still compatible with `covered`
        let mut best: Option<(usize, usize)> = None;
        for e in 0..self.by_element.len() {
            if covered & (1 << e) != 0 {
                continue;
            }
            let count = self.by_element[e]
                .iter()
                .filter(|&&r| self.rows[r].mask() & covered == 0)
                .count();
            if count == 0 {
                return false;
            }
            if best.is_none_or(|(_, c)| count < c) {
                best = Some((e, count));
            }
        }
        let (e, _) = best.expect("some element is uncovered");
        for i in 0..self.by_element[e].len() {
            let r = self.by_element[e][i];
            let mask = self.rows[r].mask();
            if mask & covered != 0 {
                continue;
            }
            self.chosen.push(r);
            if self.solve(covered | mask) {
                return true;
            }
            self.chosen.pop();
        }
        false
    }
}

/// One partition of `{1, .., 3n}`, or `None` if there is none.
///
/// Candidate rows are every triple with `a + b = c` and, when `modular`, every
/// triple with `a + b + c = 6n + 1`. The search branches on the element with
/// the fewest remaining rows, so a `None` is a proof of non-existence. With a
/// `seed` the row order is shuffled first; the result is still deterministic
/// for a given seed.
pub fn triples_exact_cover(
    n: usize,
    modular: bool,
    seed: Option<u64>,
) -> Result<Option<TriplePartition>> {
    if n > TRIPLES_CAP {
        return Err(HeffterError::SearchCap {
            cells: n,
            cap: TRIPLES_CAP,
        });
    }
    if n == 0 {
        return Ok(Some(TriplePartition {
            n,
            triples: Vec::new(),
        }));
    }
    // with sums only, 1 + .. + 3n = 2(c_1 + .. + c_n) must be even
    if !modular && (3 * n * (3 * n + 1) / 2) % 2 == 1 {
        return Ok(None);
    }
    let mut rows = candidates(n, modular);
    if let Some(seed) = seed {
        rows.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }
    let mut by_element = vec![Vec::new(); 3 * n];
    for (i, t) in rows.iter().enumerate() {
        for v in [t.a, t.b, t.c] {
            by_element[v as usize - 1].push(i);
        }
    }
    let mut cover = Cover {
        rows: &rows,
        by_element,
        full: (1u64 << (3 * n)) - 1,
        chosen: Vec::new(),
    };
    if !cover.solve(0) {
        return Ok(None);
    }
    let mut triples: Vec<Triple> = cover.chosen.iter().map(|&r| rows[r]).collect();
    triples.sort_unstable_by_key(|t| (t.a, t.b, t.c));
    Ok(Some(TriplePartition { n, triples }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n1_is_unique() {
        let p = triples_exact_cover(1, false, None).unwrap().unwrap();
        assert_eq!(
            p.triples,
            vec![Triple {
                a: 1,
                b: 2,
                c: 3,
                mode: TripleMode::Sum
            }]
        );
    }

    #[test]
    fn n3_column_supports_are_a_partition() {
        let p = TriplePartition {
            n: 3,
            triples: vec![
                Triple {
                    a: 1,
                    b: 7,
                    c: 8,
                    mode: TripleMode::Sum,
                },
                Triple {
                    a: 2,
                    b: 3,
                    c: 5,
                    mode: TripleMode::Sum,
                },
                Triple {
                    a: 4,
                    b: 6,
                    c: 9,
                    mode: TripleMode::Wrap,
                },
            ],
        };
        p.check().unwrap();
        triples_exact_cover(3, true, None)
            .unwrap()
            .unwrap()
            .check()
            .unwrap();
    }

    #[test]
    fn n2_without_wrap_has_none() {
        assert_eq!(triples_exact_cover(2, false, None).unwrap(), None);
    }

    #[test]
    fn seeded_runs_repeat() {
        let a = triples_exact_cover(8, true, Some(7)).unwrap();
        let b = triples_exact_cover(8, true, Some(7)).unwrap();
        assert_eq!(a, b);
        a.unwrap().check().unwrap();
    }

    #[test]
    fn cap() {
        assert!(triples_exact_cover(21, true, None).is_err());
    }
}
