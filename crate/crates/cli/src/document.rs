//! On-disk array formats.
//!
//! - text: `heffter m n modulus` then `m` lines of `n` signed integers
//! - json: an [`ArrayDocument`]
//! - csv: entries only, one row per line; metadata goes to a `.meta.json`
//!   sidecar next to the file

use std::path::{Path, PathBuf};

use heffter::{ClassFlags, Matrix, Provenance};
use serde::{Deserialize, Serialize};

use crate::CliError;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl Format {
    /// Guess from a file extension; anything unknown is text.
    pub fn from_path(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some("json") => Format::Json,
            Some("csv") => Format::Csv,
            _ => Format::Text,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrayDocument {
    pub format_version: u32,
    pub m: usize,
    pub n: usize,
    pub modulus: u64,
    /// Row-major.
    pub entries: Vec<i64>,
    pub flags: ClassFlags,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub provenance: Option<Provenance>,
}

/// Everything but the entries; the CSV sidecar.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    pub format_version: u32,
    pub m: usize,
    pub n: usize,
    pub modulus: u64,
    pub flags: ClassFlags,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub provenance: Option<Provenance>,
}

fn parse_err(line: usize, message: impl Into<String>) -> CliError {
    CliError::Parse {
        line,
        message: message.into(),
    }
}

impl ArrayDocument {
    pub fn new(matrix: &Matrix, flags: ClassFlags, provenance: Option<Provenance>) -> Self {
        let (m, n) = (matrix.rows(), matrix.cols());
        ArrayDocument {
            format_version: FORMAT_VERSION,
            m,
            n,
            modulus: 2 * (m * n) as u64 + 1,
            entries: matrix.entries().to_vec(),
            flags,
            provenance,
        }
    }

    pub fn matrix(&self) -> Result<Matrix, CliError> {
        Ok(Matrix::new(self.m, self.n, self.entries.clone())?)
    }

    pub fn metadata(&self) -> Metadata {
        Metadata {
            format_version: self.format_version,
            m: self.m,
            n: self.n,
            modulus: self.modulus,
            flags: self.flags,
            provenance: self.provenance.clone(),
        }
    }

    fn rows(&self) -> impl Iterator<Item = &[i64]> {
        self.entries.chunks(self.n.max(1))
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("heffter {} {} {}\n", self.m, self.n, self.modulus);
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(i64::to_string).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(i64::to_string).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
            Format::Text => self.to_text(),
        }
    }

    /// Parses the text format. Flags are left empty; run the verifier for them.
    pub fn from_text(src: &str) -> Result<ArrayDocument, CliError> {
        let mut lines = src
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty());
        let (_, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
        let head: Vec<&str> = header.split_whitespace().collect();
        let [tag, m, n, modulus] = head[..] else {
            return Err(parse_err(1, "expected `heffter m n modulus`"));
        };
        if tag != "heffter" {
            return Err(parse_err(1, format!("expected `heffter`, found {tag:?}")));
        }
        let num = |s: &str, what: &str| -> Result<usize, CliError> {
            s.parse()
                .map_err(|_| parse_err(1, format!("bad {what} {s:?}")))
        };
        let (m, n, modulus) = (num(m, "m")?, num(n, "n")?, num(modulus, "modulus")? as u64);
        let mut entries = Vec::with_capacity(m * n);
        let mut row_count = 0;
        for (i, line) in lines {
            let row = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<i64>()
                        .map_err(|_| parse_err(i + 1, format!("bad entry {t:?}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            if row.len() != n {
                return Err(parse_err(
                    i + 1,
                    format!("{} entries, expected {n}", row.len()),
                ));
            }
            entries.extend(row);
            row_count += 1;
        }
        if row_count != m {
            return Err(parse_err(0, format!("{row_count} rows, expected {m}")));
        }
        Ok(ArrayDocument {
            format_version: FORMAT_VERSION,
            m,
            n,
            modulus,
            entries,
            flags: ClassFlags::default(),
            provenance: None,
        })
    }

    pub fn from_json(src: &str) -> Result<ArrayDocument, CliError> {
        let doc: ArrayDocument = serde_json::from_str(src)?;
        if doc.format_version != FORMAT_VERSION {
            return Err(parse_err(
                0,
                format!("unsupported format_version {}", doc.format_version),
            ));
        }
        if doc.entries.len() != doc.m * doc.n {
            return Err(parse_err(
                0,
                format!(
                    "{} entries for a {}x{} array",
                    doc.entries.len(),
                    doc.m,
                    doc.n
                ),
            ));
        }
        Ok(doc)
    }

    /// Parses CSV entries, taking shape and flags from `meta` when given.
    pub fn from_csv(src: &str, meta: Option<Metadata>) -> Result<ArrayDocument, CliError> {
        let mut rows = Vec::new();
        for (i, line) in src
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
        {
            let row = line
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<i64>()
                        .map_err(|_| parse_err(i + 1, format!("bad entry {t:?}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            rows.push(row);
        }
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|r| r.len() != n) {
            return Err(parse_err(
                bad + 1,
                format!("{} entries, expected {n}", rows[bad].len()),
            ));
        }
        let entries = rows.concat();
        match meta {
            Some(meta) => {
                if (meta.m, meta.n) != (m, n) {
                    return Err(parse_err(
                        0,
                        format!("sidecar says {}x{}, data is {m}x{n}", meta.m, meta.n),
                    ));
                }
                Ok(ArrayDocument {
                    format_version: meta.format_version,
                    m,
                    n,
                    modulus: meta.modulus,
                    entries,
                    flags: meta.flags,
                    provenance: meta.provenance,
                })
            }
            None => Ok(ArrayDocument {
                format_version: FORMAT_VERSION,
                m,
                n,
                modulus: 2 * (m * n) as u64 + 1,
                entries,
                flags: ClassFlags::default(),
                provenance: None,
            }),
        }
    }

    pub fn parse(
        src: &str,
        format: Format,
        meta: Option<Metadata>,
    ) -> Result<ArrayDocument, CliError> {
        match format {
            Format::Json => Self::from_json(src),
            Format::Csv => Self::from_csv(src, meta),
            Format::Text => Self::from_text(src),
        }
    }
}

/// `grid.csv` -> `grid.csv.meta.json`.
pub fn sidecar_path(csv: &Path) -> PathBuf {
    let mut name = csv.as_os_str().to_owned();
    name.push(".meta.json");
    PathBuf::from(name)
}
