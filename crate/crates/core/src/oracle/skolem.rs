//! Skolem and `K`-near Skolem sequences.
//!
//! A Skolem sequence of order `n` places each `j` in `1..=n` twice, at
//! positions `l(j) < r(j)` with `r(j) - l(j) = j`. A `K`-near sequence does
//! the same for every `j` not in `K` and omits `K` entirely, so it has length
//! `2(n - |K|)`. Positions are 1-based throughout.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{HeffterError, Result};
use crate::oracle::triples::{Triple, TripleMode, TriplePartition};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkolemSequence {
    pub order: usize,
    /// Excluded values; empty for a plain sequence.
    pub near: BTreeSet<usize>,
    pub values: Vec<usize>,
}

impl SkolemSequence {
    pub fn plain(values: Vec<usize>) -> Self {
        SkolemSequence {
            order: values.len() / 2,
            near: BTreeSet::new(),
            values,
        }
    }

    pub fn near(
        order: usize,
        excluded: impl IntoIterator<Item = usize>,
        values: Vec<usize>,
    ) -> Self {
        SkolemSequence {
            order,
            near: excluded.into_iter().collect(),
            values,
        }
    }

    pub fn is_plain(&self) -> bool {
        self.near.is_empty()
    }

    pub fn expected_len(&self) -> usize {
        2 * self.order.saturating_sub(self.near.len())
    }

    /// `(l(j), r(j))` for every `j` present, 1-based.
    pub fn positions(&self) -> Vec<(usize, usize, usize)> {
        let mut first = vec![None; self.order + 1];
        let mut out = Vec::new();
        for (p, &j) in self.values.iter().enumerate() {
            if j == 0 || j > self.order {
                continue;
            }
            match first[j] {
                None => first[j] = Some(p + 1),
                Some(l) => out.push((j, l, p + 1)),
            }
        }
        out.sort_unstable();
        out
    }
}

impl fmt::Display for SkolemSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SkolemViolation {
    Length {
        expected: usize,
        found: usize,
    },
    /// Value outside `1..=order`.
    OutOfRange {
        position: usize,
    },
    /// `j` is in `K` but occurs.
    Excluded,
    /// `j` occurs a number of times other than two.
    Count {
        found: usize,
    },
    /// The two occurrences are `gap` apart instead of `j`.
    Gap {
        left: usize,
        right: usize,
        gap: usize,
    },
}

/// First violated condition; `j` is 0 for whole-sequence problems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkolemFailure {
    pub j: usize,
    pub violation: SkolemViolation,
}

impl fmt::Display for SkolemFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.violation {
            SkolemViolation::Length { expected, found } => {
                write!(f, "length {found}, expected {expected}")
            }
            SkolemViolation::OutOfRange { position } => {
                write!(f, "value {} at position {position} is out of range", self.j)
            }
            SkolemViolation::Excluded => write!(f, "excluded value {} occurs", self.j),
            SkolemViolation::Count { found } => {
                write!(f, "value {} occurs {found} times, expected 2", self.j)
            }
            SkolemViolation::Gap { left, right, gap } => write!(
                f,
                "value {} at positions {left} and {right} is {gap} apart, expected {}",
                self.j, self.j
            ),
        }
    }
}

impl std::error::Error for SkolemFailure {}

pub fn verify_skolem(seq: &SkolemSequence) -> Result<(), SkolemFailure> {
    let expected = seq.expected_len();
    if seq.values.len() != expected {
        return Err(SkolemFailure {
            j: 0,
            violation: SkolemViolation::Length {
                expected,
                found: seq.values.len(),
            },
        });
    }
    let mut at: Vec<Vec<usize>> = vec![Vec::new(); seq.order + 1];
    for (p, &j) in seq.values.iter().enumerate() {
        if j == 0 || j > seq.order {
            return Err(SkolemFailure {
                j,
                violation: SkolemViolation::OutOfRange { position: p + 1 },
            });
        }
        at[j].push(p + 1);
    }
    for (j, pos) in at.iter().enumerate().skip(1) {
        if seq.near.contains(&j) {
            if !pos.is_empty() {
                return Err(SkolemFailure {
                    j,
                    violation: SkolemViolation::Excluded,
                });
            }
            continue;
        }
        if pos.len() != 2 {
            return Err(SkolemFailure {
                j,
                violation: SkolemViolation::Count { found: pos.len() },
            });
        }
        let gap = pos[1] - pos[0];
        if gap != j {
            return Err(SkolemFailure {
                j,
                violation: SkolemViolation::Gap {
                    left: pos[0],
                    right: pos[1],
                    gap,
                },
            });
        }
    }
    Ok(())
}

fn fill(slots: &mut [usize], remaining: &mut Vec<usize>) -> bool {
    let Some(p) = slots.iter().position(|&v| v == 0) else {
        return remaining.is_empty();
    };
    for idx in 0..remaining.len() {
        let j = remaining[idx];
        let q = p + j;
        if q >= slots.len() || slots[q] != 0 {
            continue;
        }
        slots[p] = j;
        slots[q] = j;
        remaining.remove(idx);
        if fill(slots, remaining) {
            return true;
        }
        remaining.insert(idx, j);
        slots[p] = 0;
        slots[q] = 0;
    }
    false
}

/// First sequence in lexicographic order of its values, or `None` when none
/// exists. The search always fills the leftmost empty slot, so exhausting it
/// proves non-existence.
pub fn find_skolem(order: usize, near: &[usize]) -> Option<SkolemSequence> {
    let excluded: BTreeSet<usize> = near
        .iter()
        .copied()
        .filter(|&j| (1..=order).contains(&j))
        .collect();
    let mut remaining: Vec<usize> = (1..=order).filter(|j| !excluded.contains(j)).collect();
    let mut slots = vec![0; 2 * remaining.len()];
    fill(&mut slots, &mut remaining).then_some(SkolemSequence {
        order,
        near: excluded,
        values: slots,
    })
}

/// `{j, l(j) + n, r(j) + n}` for each `j`; every triple has `a + b = c` and
/// together they partition `{1, .., 3n}`.
pub fn skolem_to_triples(seq: &SkolemSequence) -> Result<TriplePartition> {
    if !seq.is_plain() {
        return Err(HeffterError::InvalidSkolem(
            "only plain sequences map to a triple partition".into(),
        ));
    }
    verify_skolem(seq).map_err(|f| HeffterError::InvalidSkolem(f.to_string()))?;
    let n = seq.order as u32;
    let triples = seq
        .positions()
        .into_iter()
        .map(|(j, l, r)| Triple {
            a: j as u32,
            b: l as u32 + n,
            c: r as u32 + n,
            mode: TripleMode::Sum,
        })
        .collect();
    Ok(TriplePartition {
        n: seq.order,
        triples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_examples() {
        let s5 = SkolemSequence::plain(vec![1, 1, 3, 4, 5, 3, 2, 4, 2, 5]);
        assert_eq!(verify_skolem(&s5), Ok(()));
        let s7 = SkolemSequence::near(7, [4], vec![1, 1, 6, 3, 7, 5, 3, 2, 6, 2, 5, 7]);
        assert_eq!(verify_skolem(&s7), Ok(()));
    }

    #[test]
    fn gap_violation_names_value() {
        let bad = SkolemSequence::plain(vec![1, 2, 1, 2]);
        let f = verify_skolem(&bad).unwrap_err();
        assert_eq!(f.j, 1);
        assert!(matches!(f.violation, SkolemViolation::Gap { gap: 2, .. }));
    }

    #[test]
    fn excluded_value_present() {
        let s = SkolemSequence::near(3, [2], vec![1, 1, 2, 2]);
        let f = verify_skolem(&s).unwrap_err();
        assert_eq!((f.j, f.violation), (2, SkolemViolation::Excluded));
    }

    #[test]
    fn order_one() {
        let s = find_skolem(1, &[]).unwrap();
        assert_eq!(s.values, vec![1, 1]);
        let t = skolem_to_triples(&s).unwrap();
        assert_eq!(
            t.triples,
            vec![Triple {
                a: 1,
                b: 2,
                c: 3,
                mode: TripleMode::Sum
            }]
        );
    }

    #[test]
    fn s5_triples() {
        let s5 = SkolemSequence::plain(vec![1, 1, 3, 4, 5, 3, 2, 4, 2, 5]);
        let t = skolem_to_triples(&s5).unwrap();
        assert!(t.triples.contains(&Triple {
            a: 1,
            b: 6,
            c: 7,
            mode: TripleMode::Sum
        }));
        t.check().unwrap();
    }

    #[test]
    fn near_search() {
        let s = find_skolem(7, &[4]).unwrap();
        assert_eq!(s.values.len(), 12);
        assert_eq!(verify_skolem(&s), Ok(()));
    }
}
