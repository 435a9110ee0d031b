//! Affine integer expressions in the tile parameters `k, r, s, x, y`.
//!
//! Tile tables are stored as the literal expressions they are printed with
//! (`"-12k - 13"`, `"x - 47"`, `"12s + 12k + 24r + 16"`) and evaluated at
//! concrete parameter values when a tile is instantiated.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{HeffterError, Result};

const VARS: [char; 5] = ['k', 'r', 's', 'x', 'y'];

/// Concrete values for the tile parameters. Unset variables make evaluation fail.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bindings {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub r: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub s: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub x: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub y: Option<i64>,
}

impl Bindings {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn k(mut self, v: i64) -> Self {
        self.k = Some(v);
        self
    }

    pub fn r(mut self, v: i64) -> Self {
        self.r = Some(v);
        self
    }

    pub fn s(mut self, v: i64) -> Self {
        self.s = Some(v);
        self
    }

    pub fn x(mut self, v: i64) -> Self {
        self.x = Some(v);
        self
    }

    pub fn y(mut self, v: i64) -> Self {
        self.y = Some(v);
        self
    }

    pub fn get(&self, var: char) -> Option<i64> {
        match var {
            'k' => self.k,
            'r' => self.r,
            's' => self.s,
            'x' => self.x,
            'y' => self.y,
            _ => None,
        }
    }

    /// Bound variables in `k, r, s, x, y` order.
    pub fn iter(&self) -> impl Iterator<Item = (char, i64)> + '_ {
        VARS.iter().filter_map(|&v| self.get(v).map(|val| (v, val)))
    }
}

impl fmt::Display for Bindings {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (var, val) in self.iter() {
            if !first {
                f.write_str(", ")?;
            }
            write!(f, "{var}={val}")?;
            first = false;
        }
        Ok(())
    }
}

/// `constant + sum(coeff[i] * VARS[i])`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Affine {
    constant: i64,
    coeffs: [i64; 5],
}

impl Affine {
    pub fn constant(c: i64) -> Self {
        Affine {
            constant: c,
            coeffs: [0; 5],
        }
    }

    pub fn coefficient(&self, var: char) -> i64 {
        VARS.iter()
            .position(|&v| v == var)
            .map_or(0, |i| self.coeffs[i])
    }

    pub fn constant_term(&self) -> i64 {
        self.constant
    }

    pub fn eval(&self, b: &Bindings) -> Result<i64> {
        let mut acc = self.constant;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                let v = b.get(VARS[i]).ok_or(HeffterError::Unbound(VARS[i]))?;
                acc += c * v;
            }
        }
        Ok(acc)
    }

    pub fn parse(src: &str) -> Result<Self> {
        let err = |message: &str| HeffterError::Expression {
            expr: src.to_string(),
            message: message.to_string(),
        };
        let mut out = Affine::default();
        let mut chars = src.chars().filter(|c| !c.is_whitespace()).peekable();
        if chars.peek().is_none() {
            return Err(err("empty"));
        }
        let mut first = true;
        while chars.peek().is_some() {
            let mut sign = 1;
            match chars.peek() {
                Some('+') => {
                    chars.next();
                }
                Some('-') => {
                    sign = -1;
                    chars.next();
                }
                _ if !first => return Err(err("expected + or - between terms")),
                _ => {}
            }
            first = false;
            let mut digits = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_digit() {
                    digits.push(c);
                    chars.next();
                } else {
                    break;
                }
            }
            let var = match chars.peek() {
                Some(&c) if c.is_ascii_alphabetic() => {
                    chars.next();
                    Some(c)
                }
                _ => None,
            };
            let coeff: i64 = if digits.is_empty() {
                if var.is_none() {
                    return Err(err("dangling sign"));
                }
                1
            } else {
                digits.parse().map_err(|_| err("coefficient overflow"))?
            };
            match var {
                None => out.constant += sign * coeff,
                Some(v) => {
                    let i = VARS
                        .iter()
                        .position(|&w| w == v)
                        .ok_or_else(|| err("unknown variable"))?;
                    out.coeffs[i] += sign * coeff;
                }
            }
        }
        Ok(out)
    }
}

impl FromStr for Affine {
    type Err = HeffterError;

    fn from_str(s: &str) -> Result<Self> {
        Affine::parse(s)
    }
}

impl fmt::Display for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            match (wrote, c < 0) {
                (false, true) => f.write_str("-")?,
                (true, true) => f.write_str(" - ")?,
                (true, false) => f.write_str(" + ")?,
                (false, false) => {}
            }
            if mag != 1 {
                write!(f, "{mag}")?;
            }
            write!(f, "{}", VARS[i])?;
            wrote = true;
        }
        if !wrote {
            return write!(f, "{}", self.constant);
        }
        if self.constant != 0 {
            let sep = if self.constant < 0 { " - " } else { " + " };
            write!(f, "{sep}{}", self.constant.unsigned_abs())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_printed_forms() {
        let b = Bindings::new().k(2).r(1).s(3).x(100).y(5);
        assert_eq!(Affine::parse("-12k - 13").unwrap().eval(&b).unwrap(), -37);
        assert_eq!(Affine::parse("x - 47").unwrap().eval(&b).unwrap(), 53);
        assert_eq!(Affine::parse("-x").unwrap().eval(&b).unwrap(), -100);
        assert_eq!(Affine::parse("4k - 4r").unwrap().eval(&b).unwrap(), 4);
        assert_eq!(Affine::parse("5").unwrap().eval(&b).unwrap(), 5);
        assert_eq!(Affine::parse("-2").unwrap().eval(&b).unwrap(), -2);
        assert_eq!(
            Affine::parse("-12s - 12k - 24r - 17")
                .unwrap()
                .eval(&b)
                .unwrap(),
            -36 - 24 - 24 - 17
        );
        assert_eq!(Affine::parse("10y - 14").unwrap().eval(&b).unwrap(), 36);
    }

    #[test]
    fn rejects_garbage() {
        assert!(Affine::parse("").is_err());
        assert!(Affine::parse("3k 4").is_err());
        assert!(Affine::parse("-").is_err());
        assert!(Affine::parse("2z").is_err());
    }

    #[test]
    fn unbound_variable_is_reported() {
        let e = Affine::parse("4k + 1").unwrap();
        assert_eq!(e.eval(&Bindings::new()), Err(HeffterError::Unbound('k')));
        // zero coefficients do not need a binding
        assert_eq!(
            Affine::parse("k - k + 3").unwrap().eval(&Bindings::new()),
            Ok(3)
        );
    }

    #[test]
    fn display_round_trips() {
        for src in [
            "-12k - 13",
            "x - 47",
            "-x + 9",
            "7",
            "-12s - 12k - 24r - 17",
            "4k - 4r",
        ] {
            let e = Affine::parse(src).unwrap();
            assert_eq!(Affine::parse(&e.to_string()).unwrap(), e, "{src}");
        }
        assert_eq!(Affine::parse("-12k - 13").unwrap().to_string(), "-12k - 13");
    }
}
