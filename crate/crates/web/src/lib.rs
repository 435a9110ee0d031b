//! Browser bindings. Each exported function returns a JSON string; the plain
//! Rust versions (`*_json`) are what the tests exercise.

use heffter::oracle::triples_exact_cover;
use heffter::{construct, verify, Matrix};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Cap on `m * n` for the demo grid, to keep the DOM small.
pub const MAX_DEMO_CELLS: usize = 4096;
const MAX_LISTED_FAILURES: usize = 20;

#[derive(Serialize)]
struct TileView {
    name: String,
    construction: String,
    row: usize,
    col: usize,
    rows: usize,
    cols: usize,
    shift: i64,
    transposed: bool,
}

#[derive(Serialize)]
struct ArrayView {
    m: usize,
    n: usize,
    modulus: u64,
    rows: Vec<Vec<i64>>,
    construction: String,
    case: String,
    transposed: bool,
    modular: bool,
    integer: bool,
    shiftable: bool,
    tiles: Vec<TileView>,
}

#[derive(Serialize)]
struct ReportView {
    m: usize,
    n: usize,
    modulus: u64,
    modular: bool,
    integer: bool,
    shiftable: bool,
    row_sums: Vec<String>,
    col_sums: Vec<String>,
    failures: Vec<String>,
    more_failures: usize,
}

#[derive(Serialize)]
struct TripleView {
    a: u32,
    b: u32,
    c: u32,
    mode: &'static str,
}

pub fn construct_json(m: usize, n: usize) -> Result<String, String> {
    if m.saturating_mul(n) > MAX_DEMO_CELLS {
        return Err(format!("the demo draws at most {MAX_DEMO_CELLS} cells"));
    }
    let res = construct(m, n).map_err(|e| e.to_string())?;
    let rep = verify(res.array.matrix());
    let view = ArrayView {
        m,
        n,
        modulus: res.array.modulus() as u64,
        rows: res.array.matrix().to_rows(),
        construction: res.provenance.construction.name().to_string(),
        case: res.provenance.case.clone(),
        transposed: res.provenance.transposed,
        modular: rep.is_modular_heffter,
        integer: rep.is_integer_heffter,
        shiftable: rep.is_shiftable,
        tiles: res
            .provenance
            .tiles
            .iter()
            .map(|p| TileView {
                name: p.name.clone(),
                construction: p.construction.name().to_string(),
                row: p.row,
                col: p.col,
                rows: p.rows,
                cols: p.cols,
                shift: p.shift,
                transposed: p.transposed,
            })
            .collect(),
    };
    serde_json::to_string(&view).map_err(|e| e.to_string())
}

/// Accepts rows of whitespace- or comma-separated integers, with an optional
/// `heffter m n modulus` header line.
pub fn parse_grid(src: &str) -> Result<Matrix, String> {
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for (i, line) in src.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || (rows.is_empty() && line.starts_with("heffter")) {
            continue;
        }
        let row = line
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<i64>()
                    .map_err(|_| format!("line {}: bad entry {t:?}", i + 1))
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    let width = rows.first().map(Vec::len).ok_or("no rows")?;
    if let Some(bad) = rows.iter().position(|r| r.len() != width) {
        return Err(format!(
            "row {} has {} entries, expected {width}",
            bad + 1,
            rows[bad].len()
        ));
    }
    Matrix::new(rows.len(), width, rows.concat()).map_err(|e| e.to_string())
}

pub fn verify_json(src: &str) -> Result<String, String> {
    let a = parse_grid(src)?;
    let rep = verify(&a);
    let sums = a.line_sums();
    let view = ReportView {
        m: rep.m,
        n: rep.n,
        modulus: rep.modulus as u64,
        modular: rep.is_modular_heffter,
        integer: rep.is_integer_heffter,
        shiftable: rep.is_shiftable,
        row_sums: sums.row_sums.iter().map(i128::to_string).collect(),
        col_sums: sums.col_sums.iter().map(i128::to_string).collect(),
        failures: rep
            .failures
            .iter()
            .take(MAX_LISTED_FAILURES)
            .map(|f| f.to_string())
            .collect(),
        more_failures: rep.failures.len().saturating_sub(MAX_LISTED_FAILURES),
    };
    serde_json::to_string(&view).map_err(|e| e.to_string())
}

pub fn triples_json(n: usize, modular: bool) -> Result<String, String> {
    let part = triples_exact_cover(n, modular, None).map_err(|e| e.to_string())?;
    let view: Option<Vec<TripleView>> = part.map(|p| {
        p.triples
            .iter()
            .map(|t| TripleView {
                a: t.a,
                b: t.b,
                c: t.c,
                mode: match t.mode {
                    heffter::oracle::TripleMode::Sum => "sum",
                    heffter::oracle::TripleMode::Wrap => "wrap",
                },
            })
            .collect()
    });
    serde_json::to_string(&view).map_err(|e| e.to_string())
}

#[wasm_bindgen(js_name = constructArray)]
pub fn construct_array(m: usize, n: usize) -> Result<String, JsValue> {
    construct_json(m, n).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = verifyArray)]
pub fn verify_array(src: &str) -> Result<String, JsValue> {
    verify_json(src).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = tripleCover)]
pub fn triple_cover(n: usize, modular: bool) -> Result<String, JsValue> {
    triples_json(n, modular).map_err(|e| JsValue::from_str(&e))
}
