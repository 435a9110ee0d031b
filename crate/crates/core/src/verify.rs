//! Heffter-array checker and the necessary conditions on `(m, n)`.
//!
//! [`verify`] never short-circuits: every property is computed and every
//! defect is listed, so range scans can aggregate statistics.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::array::Matrix;

/// The three nested classes of Heffter array.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HeffterKind {
    /// Line sums vanish modulo `2mn + 1`.
    Modular,
    /// Line sums vanish over the integers.
    Integer,
    /// Integer, with every line holding as many positive as negative entries.
    Shiftable,
}

impl HeffterKind {
    pub fn name(self) -> &'static str {
        match self {
            HeffterKind::Modular => "modular",
            HeffterKind::Integer => "integer",
            HeffterKind::Shiftable => "shiftable",
        }
    }
}

impl fmt::Display for HeffterKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct ClassFlags {
    pub modular: bool,
    pub integer: bool,
    pub shiftable: bool,
}

impl ClassFlags {
    /// The class every construction is expected to reach for an `m x n` array (`m, n >= 3`).
    pub fn predicted(m: usize, n: usize) -> ClassFlags {
        let ok = m >= 3 && n >= 3;
        ClassFlags {
            modular: ok,
            integer: ok && matches!((m * n) % 4, 0 | 3),
            shiftable: ok && m.is_multiple_of(2) && n.is_multiple_of(2),
        }
    }

    pub fn satisfies(&self, kind: HeffterKind) -> bool {
        match kind {
            HeffterKind::Modular => self.modular,
            HeffterKind::Integer => self.integer,
            HeffterKind::Shiftable => self.shiftable,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    Dimensions,
    ZeroEntry,
    OutOfRange,
    DuplicateValue,
    MissingValue,
    ModularRowSum,
    ModularColumnSum,
    IntegerRowSum,
    IntegerColumnSum,
    UnbalancedRow,
    UnbalancedColumn,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Location {
    Shape,
    Row(usize),
    Column(usize),
    Cell(usize, usize),
    Value(u64),
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Shape => f.write_str("shape"),
            Location::Row(r) => write!(f, "row {r}"),
            Location::Column(c) => write!(f, "column {c}"),
            Location::Cell(r, c) => write!(f, "cell ({r}, {c})"),
            Location::Value(v) => write!(f, "value {v}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub property: Property,
    pub location: Location,
    pub detail: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:?} at {}: {}",
            self.property, self.location, self.detail
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub m: usize,
    pub n: usize,
    pub modulus: i128,
    /// `m, n >= 3`.
    pub dimensions_ok: bool,
    /// Absolute values are exactly `{1, ..., mn}`.
    pub support_ok: bool,
    pub modular_sums_ok: bool,
    pub integer_sums_ok: bool,
    /// Every line has as many positive as negative entries.
    pub sign_balanced: bool,
    pub is_modular_heffter: bool,
    pub is_integer_heffter: bool,
    pub is_shiftable: bool,
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    pub fn flags(&self) -> ClassFlags {
        ClassFlags {
            modular: self.is_modular_heffter,
            integer: self.is_integer_heffter,
            shiftable: self.is_shiftable,
        }
    }

    pub fn first_failure(&self, property: Property) -> Option<&Failure> {
        self.failures.iter().find(|f| f.property == property)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = |b: bool| if b { "yes" } else { "no" };
        writeln!(f, "H({},{}) modulus {}", self.m, self.n, self.modulus)?;
        writeln!(f, "support:   {}", mark(self.support_ok))?;
        writeln!(f, "modular:   {}", mark(self.is_modular_heffter))?;
        writeln!(f, "integer:   {}", mark(self.is_integer_heffter))?;
        write!(f, "shiftable: {}", mark(self.is_shiftable))?;
        for failure in &self.failures {
            write!(f, "\n  {failure}")?;
        }
        Ok(())
    }
}

pub fn verify(a: &Matrix) -> VerificationReport {
    let (m, n) = (a.rows(), a.cols());
    let cells = m * n;
    let modulus = 2 * cells as i128 + 1;
    let mut failures = Vec::new();

    let dimensions_ok = m >= 3 && n >= 3;
    if !dimensions_ok {
        failures.push(Failure {
            property: Property::Dimensions,
            location: Location::Shape,
            detail: format!("{m}x{n}: a Heffter array needs m, n >= 3"),
        });
    }

    // presence bitmap over 1..=mn
    let mut seen = vec![false; cells + 1];
    let mut support_ok = true;
    for r in 0..m {
        for c in 0..n {
            let e = a.get(r, c);
            let v = e.unsigned_abs();
            if e == 0 {
                support_ok = false;
                failures.push(Failure {
                    property: Property::ZeroEntry,
                    location: Location::Cell(r, c),
                    detail: "zero entry".into(),
                });
            } else if v > cells as u64 {
                support_ok = false;
                failures.push(Failure {
                    property: Property::OutOfRange,
                    location: Location::Cell(r, c),
                    detail: format!("|{e}| > mn = {cells}"),
                });
            } else if std::mem::replace(&mut seen[v as usize], true) {
                support_ok = false;
                failures.push(Failure {
                    property: Property::DuplicateValue,
                    location: Location::Value(v),
                    detail: format!("{v} appears again at cell ({r}, {c})"),
                });
            }
        }
    }
    for (v, hit) in seen.iter().enumerate().skip(1) {
        if !hit {
            support_ok = false;
            failures.push(Failure {
                property: Property::MissingValue,
                location: Location::Value(v as u64),
                detail: format!("neither {v} nor -{v} appears"),
            });
        }
    }

    let sums = a.line_sums();
    let mut modular_sums_ok = true;
    let mut integer_sums_ok = true;
    let lines = sums
        .row_sums
        .iter()
        .enumerate()
        .map(|(i, &s)| {
            (
                Location::Row(i),
                s,
                Property::ModularRowSum,
                Property::IntegerRowSum,
            )
        })
        .chain(sums.col_sums.iter().enumerate().map(|(i, &s)| {
            (
                Location::Column(i),
                s,
                Property::ModularColumnSum,
                Property::IntegerColumnSum,
            )
        }));
    for (location, s, modular, integer) in lines {
        if s.rem_euclid(modulus) != 0 {
            modular_sums_ok = false;
            failures.push(Failure {
                property: modular,
                location,
                detail: format!("sum {s} is {} mod {modulus}", s.rem_euclid(modulus)),
            });
        }
        if s != 0 {
            integer_sums_ok = false;
            failures.push(Failure {
                property: integer,
                location,
                detail: format!("sum {s} is nonzero"),
            });
        }
    }

    let (row_balance, col_balance) = a.sign_balance();
    let mut sign_balanced = true;
    for (i, &b) in row_balance.iter().enumerate() {
        if b != 0 {
            sign_balanced = false;
            failures.push(Failure {
                property: Property::UnbalancedRow,
                location: Location::Row(i),
                detail: format!("{b:+} more positive than negative entries"),
            });
        }
    }
    for (i, &b) in col_balance.iter().enumerate() {
        if b != 0 {
            sign_balanced = false;
            failures.push(Failure {
                property: Property::UnbalancedColumn,
                location: Location::Column(i),
                detail: format!("{b:+} more positive than negative entries"),
            });
        }
    }

    let is_modular_heffter = dimensions_ok && support_ok && modular_sums_ok;
    let is_integer_heffter = is_modular_heffter && integer_sums_ok;
    let is_shiftable = is_integer_heffter && sign_balanced;

    VerificationReport {
        m,
        n,
        modulus,
        dimensions_ok,
        support_ok,
        modular_sums_ok,
        integer_sums_ok,
        sign_balanced,
        is_modular_heffter,
        is_integer_heffter,
        is_shiftable,
        failures,
    }
}

/// Why a requested `(m, n, kind)` cannot exist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Forbidden {
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Necessity {
    Allow,
    Forbid(Forbidden),
}

impl Necessity {
    pub fn is_allowed(&self) -> bool {
        matches!(self, Necessity::Allow)
    }
}

/// Necessary conditions: `m, n >= 3`; integer needs `mn ≡ 0,3 (mod 4)`;
/// shiftable needs `m, n` even.
pub fn assert_necessity(m: usize, n: usize, kind: HeffterKind) -> Necessity {
    let forbid = |reason: String| Necessity::Forbid(Forbidden { reason });
    if m < 3 {
        return forbid(format!("m < 3 (m = {m})"));
    }
    if n < 3 {
        return forbid(format!("n < 3 (n = {n})"));
    }
    let mn = m * n;
    if matches!(kind, HeffterKind::Integer | HeffterKind::Shiftable) && matches!(mn % 4, 1 | 2) {
        return forbid(format!(
            "integer arrays need mn ≡ 0,3 (mod 4), but mn ≡ {} (mod 4) (mn = {mn})",
            mn % 4
        ));
    }
    if kind == HeffterKind::Shiftable && (m % 2 == 1 || n % 2 == 1) {
        return forbid(format!(
            "shiftable arrays need m and n even (m = {m}, n = {n})"
        ));
    }
    Necessity::Allow
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tables;

    #[test]
    fn h33_is_modular_only() {
        let r = verify(&tables::h33());
        assert!(r.is_modular_heffter && r.support_ok);
        assert!(!r.is_integer_heffter && !r.is_shiftable);
        let f = r.first_failure(Property::IntegerRowSum).unwrap();
        assert_eq!(f.location, Location::Row(0));
        assert!(f.detail.contains("-19"));
    }

    #[test]
    fn h46_is_shiftable() {
        let r = verify(&tables::h46());
        assert!(r.is_modular_heffter && r.is_integer_heffter && r.is_shiftable);
        assert!(r.failures.is_empty());
    }

    #[test]
    fn swapping_one_and_two_breaks_sums_not_support() {
        let mut a = tables::h34();
        assert_eq!((a.get(0, 0), a.get(0, 1)), (1, 2));
        // move 1 and 2 into each other's columns
        a.set(0, 0, 2);
        a.set(0, 1, 1);
        let r = verify(&a);
        assert!(r.support_ok);
        assert!(!r.is_modular_heffter);
        // row 0 still sums to 0; columns 0 and 1 are off by one each way
        let f = r.first_failure(Property::ModularColumnSum).unwrap();
        assert_eq!(f.location, Location::Column(0));
        assert!(
            r.failures
                .iter()
                .any(|f| f.location == Location::Column(1)
                    && f.property == Property::ModularColumnSum)
        );
    }

    #[test]
    fn support_failure_kinds_are_distinct() {
        let a = Matrix::from_rows(&[[1, 1, 0], [2, 30, 3], [4, 5, 6]]);
        let r = verify(&a);
        let kinds: Vec<Property> = r.failures.iter().map(|f| f.property).collect();
        assert!(kinds.contains(&Property::DuplicateValue));
        assert!(kinds.contains(&Property::OutOfRange));
        assert!(kinds.contains(&Property::ZeroEntry));
        assert!(kinds.contains(&Property::MissingValue));
    }

    #[test]
    fn small_dimensions_are_not_heffter() {
        let r = verify(&Matrix::from_rows(&[[1, -1]]));
        assert!(!r.dimensions_ok && !r.is_modular_heffter);
    }

    #[test]
    fn necessity_examples() {
        assert!(matches!(
            assert_necessity(2, 5, HeffterKind::Modular),
            Necessity::Forbid(Forbidden { reason }) if reason.starts_with("m < 3")
        ));
        assert!(matches!(
            assert_necessity(3, 3, HeffterKind::Integer),
            Necessity::Forbid(Forbidden { reason }) if reason.contains("mn ≡ 1 (mod 4)")
        ));
        assert!(assert_necessity(4, 6, HeffterKind::Shiftable).is_allowed());
        assert!(!assert_necessity(4, 5, HeffterKind::Shiftable).is_allowed());
        assert!(!assert_necessity(3, 5, HeffterKind::Shiftable).is_allowed());
        assert!(assert_necessity(3, 5, HeffterKind::Integer).is_allowed());
        assert!(!assert_necessity(5, 3, HeffterKind::Shiftable).is_allowed());
        assert!(!assert_necessity(3, 2, HeffterKind::Modular).is_allowed());
    }

    #[test]
    fn necessity_agrees_with_prediction() {
        for m in 1..20 {
            for n in 1..20 {
                let p = ClassFlags::predicted(m, n);
                for kind in [
                    HeffterKind::Modular,
                    HeffterKind::Integer,
                    HeffterKind::Shiftable,
                ] {
                    assert_eq!(
                        assert_necessity(m, n, kind).is_allowed(),
                        p.satisfies(kind),
                        "{m} {n} {kind}"
                    );
                }
            }
        }
    }
}
