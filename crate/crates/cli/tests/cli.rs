use std::fs;
use std::path::Path;

use heffter_cli::document::{sidecar_path, ArrayDocument, Format};
use heffter_cli::run;
use proptest::prelude::*;

fn heffter(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("heffter").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn generate_3x3_text() {
    let (code, out, _) = heffter(&["generate", "3", "3", "--format", "text"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("heffter 3 3 19"));
    assert_eq!(lines.count(), 3);
}

#[test]
fn generate_infeasible_integer() {
    let (code, out, err) = heffter(&["generate", "3", "3", "--require", "integer"]);
    assert_eq!(code, 1);
    assert!(out.is_empty());
    assert!(err.contains("mn ≡ 1 (mod 4)"), "{err}");
    let (code, _, err) = heffter(&["generate", "4", "5", "--require", "shiftable"]);
    assert_eq!(code, 1);
    assert!(err.contains("even"), "{err}");
    let (code, _, _) = heffter(&["generate", "4", "6", "--require", "shiftable"]);
    assert_eq!(code, 0);
}

#[test]
fn generate_rejects_small_sides() {
    let (code, _, err) = heffter(&["generate", "2", "5"]);
    assert_eq!(code, 1);
    assert!(err.contains("m < 3"), "{err}");
}

#[test]
fn scan_to_40() {
    let (code, out, _) = heffter(&["scan", "--max", "40"]);
    assert_eq!(code, 0);
    let integer = (3..=40usize)
        .flat_map(|m| (3..=40usize).map(move |n| m * n))
        .filter(|mn| matches!(mn % 4, 0 | 3))
        .count();
    let want = format!("1444 sizes, 1444 pass, integer: {integer}, 0 failures");
    assert_eq!(out.lines().last(), Some(want.as_str()));
}

#[test]
fn scan_is_deterministic_across_job_counts() {
    let (_, one, _) = heffter(&["scan", "--min", "3", "--max", "24", "--jobs", "1"]);
    let (_, four, _) = heffter(&["scan", "--min", "3", "--max", "24", "--jobs", "4"]);
    let (_, again, _) = heffter(&["scan", "--min", "3", "--max", "24", "--jobs", "4"]);
    assert_eq!(one, four);
    assert_eq!(four, again);
}

#[test]
fn skolem_commands() {
    let (code, out, _) = heffter(&["skolem", "verify", "1,1,3,4,5,3,2,4,2,5"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("pass"));
    let (code, _, _) = heffter(&["skolem", "verify", "1,1,6,3,7,5,3,2,6,2,5,7", "--near", "4"]);
    assert_eq!(code, 0);
    let (code, out, _) = heffter(&["skolem", "verify", "1,2,1,2"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("fail: value 1"), "{out}");
    let (code, _, _) = heffter(&["skolem", "find", "6"]);
    assert_eq!(code, 1);
    let (code, out, _) = heffter(&["skolem", "find", "5", "--triples"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 6);
}

#[test]
fn triples_command() {
    let (code, out, _) = heffter(&["triples", "3", "--modular"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 3);
    let (code, _, _) = heffter(&["triples", "2"]);
    assert_eq!(code, 1);
    let (code, _, err) = heffter(&["triples", "21", "--modular"]);
    assert_eq!(code, 1);
    assert!(err.contains("cap"), "{err}");
}

#[test]
fn search_command() {
    let (code, out, _) = heffter(&["search", "3", "3", "--class", "integer"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("0 integer"), "{out}");
    let (code, out, _) = heffter(&["search", "3", "4", "--class", "integer"]);
    assert_eq!(code, 0);
    assert!(out.contains("1 integer array(s)"), "{out}");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["generate", "x", "3"][..],
        &["generate", "3", "3", "--format", "yaml"],
        &["frobnicate"],
        &["scan"],
        &[],
    ] {
        let (code, out, err) = heffter(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(out.is_empty());
        assert!(err.contains("Usage"), "{args:?}: {err}");
    }
    let (code, out, _) = heffter(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("generate"));
}

fn generate_to(dir: &Path, m: usize, n: usize, format: Format) -> std::path::PathBuf {
    let (ext, flag) = match format {
        Format::Json => ("json", "json"),
        Format::Csv => ("csv", "csv"),
        Format::Text => ("txt", "text"),
    };
    let path = dir.join(format!("h{m}x{n}.{ext}"));
    let (code, _, err) = heffter(&[
        "generate",
        &m.to_string(),
        &n.to_string(),
        "--format",
        flag,
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{err}");
    path
}

#[test]
fn verify_files_in_every_format() {
    let dir = tempfile::tempdir().unwrap();
    for format in [Format::Json, Format::Csv, Format::Text] {
        let path = generate_to(dir.path(), 7, 10, format);
        let (code, out, _) = heffter(&["verify", path.to_str().unwrap()]);
        assert_eq!(code, 0, "{format:?}: {out}");
        assert!(out.contains("modular:   yes"));
    }
    assert!(sidecar_path(&dir.path().join("h7x10.csv")).exists());
}

#[test]
fn verify_catches_tampering() {
    let dir = tempfile::tempdir().unwrap();
    let path = generate_to(dir.path(), 5, 5, Format::Text);
    let text = fs::read_to_string(&path).unwrap();
    // flip the sign of the first entry of the first row
    let mut lines: Vec<String> = text.lines().map(str::to_string).collect();
    let mut row: Vec<i64> = lines[1]
        .split_whitespace()
        .map(|t| t.parse().unwrap())
        .collect();
    row[0] = -row[0];
    lines[1] = row.iter().map(i64::to_string).collect::<Vec<_>>().join(" ");
    fs::write(&path, lines.join("\n") + "\n").unwrap();
    let (code, out, _) = heffter(&["verify", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.contains("modular:   no"), "{out}");

    fs::write(&path, "heffter 2 2 9\n1 2\n").unwrap();
    let (code, _, err) = heffter(&["verify", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("rows"), "{err}");

    let (code, _, err) = heffter(&["verify", "/nonexistent/h.txt"]);
    assert_eq!(code, 1);
    assert!(err.contains("/nonexistent/h.txt"));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn files_round_trip_bit_exactly(m in 3usize..30, n in 3usize..30) {
        let dir = tempfile::tempdir().unwrap();
        let res = heffter::construct(m, n).unwrap();
        let expected = res.array.matrix().clone();
        for format in [Format::Json, Format::Csv, Format::Text] {
            let path = generate_to(dir.path(), m, n, format);
            let src = fs::read_to_string(&path).unwrap();
            let meta = match format {
                Format::Csv => Some(serde_json::from_str(&fs::read_to_string(sidecar_path(&path)).unwrap()).unwrap()),
                _ => None,
            };
            let doc = ArrayDocument::parse(&src, format, meta).unwrap();
            prop_assert_eq!(doc.matrix().unwrap(), expected.clone());
            prop_assert_eq!(doc.modulus, 2 * (m * n) as u64 + 1);
            // re-serializing gives the same bytes
            prop_assert_eq!(doc.render(format), src);
        }
    }
}
