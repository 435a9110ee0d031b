//! Acceptance suite. Each test prints one `criterion N: PASS|FAIL` line.
//!
//! Run with `cargo test -p heffter --test acceptance -- --nocapture --test-threads 1`
//! to see the lines in order.

use std::time::{Duration, Instant};

use heffter::affine::{Affine, Bindings};
use heffter::l_construction::{
    L11_BORDER_TILE, L11_CORNER_TILE, L13_CORNER_TILE, L13_LEFT_TILE, L13_TOP_TILE,
    L33_BORDER_TILE, L33_CORNER_TILE,
};
use heffter::low_rows::{FIVE_ROW_A, FIVE_ROW_AR, THREE_ROW_A, THREE_ROW_AR};
use heffter::odd_even::{CORNER_1MOD4, CORNER_3MOD4, FAMILY_1MOD4, FAMILY_3MOD4};
use heffter::oracle::{
    brute_force_search, find_skolem, skolem_to_triples, triples_exact_cover, verify_skolem,
    SkolemSequence,
};
use heffter::template::TileTemplate;
use heffter::{construct, verify, HeffterKind, Matrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SCAN_MAX: usize = 60;
const SCAN_BUDGET: Duration = Duration::from_secs(60);
const ORACLE_BUDGET: Duration = Duration::from_secs(10);
const SKOLEM_BUDGET: Duration = Duration::from_secs(10);
const TRIPLES_BUDGET: Duration = Duration::from_secs(30);
const TRIPLES_MAX: usize = 12;
const FUZZ_ARRAYS: usize = 50;
const FUZZ_MUTATIONS: usize = 1000;
const SUM_SAMPLES: usize = 24;
const K_MAX: i64 = 6;
const TWO_X: &str = "2x + 1";

fn report(id: u32, title: &str, ok: bool, detail: &str) {
    println!(
        "criterion {id}: {} {title} ({detail})",
        if ok { "PASS" } else { "FAIL" }
    );
}

struct Scan {
    failures: Vec<String>,
    integer_mismatch: Vec<(usize, usize)>,
    shiftable_mismatch: Vec<(usize, usize)>,
    elapsed: Duration,
}

fn scan() -> Scan {
    let start = Instant::now();
    let mut out = Scan {
        failures: Vec::new(),
        integer_mismatch: Vec::new(),
        shiftable_mismatch: Vec::new(),
        elapsed: Duration::ZERO,
    };
    for m in 3..=SCAN_MAX {
        for n in 3..=SCAN_MAX {
            let res = match construct(m, n) {
                Ok(r) => r,
                Err(e) => {
                    out.failures.push(format!("{m}x{n}: {e}"));
                    continue;
                }
            };
            let rep = verify(res.array.matrix());
            if (rep.m, rep.n) != (m, n) || !rep.is_modular_heffter {
                out.failures.push(format!("{m}x{n}: {rep}"));
            }
            if rep.is_integer_heffter != matches!((m * n) % 4, 0 | 3) {
                out.integer_mismatch.push((m, n));
            }
            if rep.is_shiftable != (m % 2 == 0 && n % 2 == 0) {
                out.shiftable_mismatch.push((m, n));
            }
        }
    }
    out.elapsed = start.elapsed();
    out
}

#[test]
fn criterion_1_every_size_is_heffter() {
    let s = scan();
    let sizes = (SCAN_MAX - 2) * (SCAN_MAX - 2);
    let ok = s.failures.is_empty() && s.elapsed < SCAN_BUDGET;
    report(
        1,
        "construct(m, n) verifies for 3 <= m, n <= 60",
        ok,
        &format!(
            "{sizes} sizes, {} failures, {:.2?}",
            s.failures.len(),
            s.elapsed
        ),
    );
    assert!(
        s.failures.is_empty(),
        "{:?}",
        &s.failures[..s.failures.len().min(10)]
    );
    assert!(s.elapsed < SCAN_BUDGET, "{:?}", s.elapsed);
}

#[test]
fn criterion_2_integer_iff_mn_0_or_3_mod_4() {
    let s = scan();
    let ok = s.integer_mismatch.is_empty();
    report(
        2,
        "integer flag iff mn ≡ 0,3 (mod 4)",
        ok,
        &format!("{} exceptions", s.integer_mismatch.len()),
    );
    assert!(ok, "{:?}", s.integer_mismatch);
}

#[test]
fn criterion_3_shiftable_iff_both_even() {
    let s = scan();
    let ok = s.shiftable_mismatch.is_empty();
    report(
        3,
        "shiftable flag iff m, n even",
        ok,
        &format!("{} exceptions", s.shiftable_mismatch.len()),
    );
    assert!(ok, "{:?}", s.shiftable_mismatch);
}

fn printed_fixtures() -> Vec<((usize, usize), Matrix)> {
    vec![
        (
            (3, 3),
            Matrix::from_rows(&[[-8, -2, -9], [7, -3, -4], [1, 5, -6]]),
        ),
        (
            (3, 4),
            Matrix::from_rows(&[[1, 2, 3, -6], [8, -12, -7, 11], [-9, 10, 4, -5]]),
        ),
        (
            (4, 4),
            Matrix::from_rows(&[
                [1, -2, -3, 4],
                [-5, 6, 7, -8],
                [9, -10, -11, 12],
                [-13, 14, 15, -16],
            ]),
        ),
        (
            (4, 6),
            Matrix::from_rows(&[
                [1, -2, 3, -4, 11, -9],
                [-7, 8, -12, 10, -5, 6],
                [-13, 14, -15, 16, -23, 21],
                [19, -20, 24, -22, 17, -18],
            ]),
        ),
        (
            (6, 6),
            Matrix::from_rows(&[
                [-1, 5, 2, -7, -9, 10],
                [3, -4, -6, 8, 11, -12],
                [-21, 22, -13, 17, 14, -19],
                [23, -24, 15, -16, -18, 20],
                [26, -31, -33, 34, -25, 29],
                [-30, 32, 35, -36, 27, -28],
            ]),
        ),
        (
            (5, 4),
            Matrix::from_rows(&[
                [7, -16, -10, 19],
                [-12, 15, 17, -20],
                [-2, 9, -18, 11],
                [6, 5, 3, -14],
                [1, -13, 8, 4],
            ]),
        ),
        (
            (5, 5),
            Matrix::from_rows(&[
                [1, 5, 6, 7, -19],
                [2, 8, 12, 15, 14],
                [3, 9, -21, 22, -13],
                [4, 11, -25, -24, -17],
                [-10, 18, -23, -20, -16],
            ]),
        ),
        (
            (5, 6),
            Matrix::from_rows(&[
                [1, -8, -7, 15, 26, -27],
                [-2, 20, -11, 24, -25, -6],
                [29, -19, 17, -4, -10, -13],
                [30, -9, -21, -23, -5, 28],
                [3, 16, 22, -12, 14, 18],
            ]),
        ),
    ]
}

#[test]
fn criterion_4_golden_fixtures() {
    let mut mismatches = Vec::new();
    let mut notes = Vec::new();
    for ((m, n), printed) in printed_fixtures() {
        let built = construct(m, n).unwrap();
        if built.array.matrix() != &printed {
            let sums = printed.line_sums();
            let valid = verify(&printed).is_modular_heffter;
            notes.push(format!(
                "{m}x{n}: printed array is{} a Heffter array (col sums {:?})",
                if valid { "" } else { " not" },
                sums.col_sums
            ));
            mismatches.push((m, n));
        }
    }
    let ok = mismatches.is_empty();
    let detail = if ok {
        "8/8 fixtures match".to_string()
    } else {
        format!("{}/8 match; {}", 8 - mismatches.len(), notes.join("; "))
    };
    report(
        4,
        "small constructions equal the printed arrays",
        ok,
        &detail,
    );
    assert!(ok, "{detail}");
}

fn eval_all(exprs: &[&str], b: &Bindings) -> Vec<i128> {
    exprs
        .iter()
        .map(|e| i128::from(Affine::parse(e).unwrap().eval(b).unwrap()))
        .collect()
}

fn leading(expr: &str, len: usize, b: &Bindings) -> Vec<i128> {
    let mut v = vec![0; len];
    v[0] = i128::from(Affine::parse(expr).unwrap().eval(b).unwrap());
    v
}

/// Quoted sums for one tile: `(rows, cols)`; `None` means all zero.
type Quoted = (Option<&'static [&'static str]>, Option<&'static str>);

// (A rows, A leading col), A_r rows; all A_r columns are zero.
const THREE_QUOTED: [(Quoted, Option<&[&str]>); 8] = [
    ((Some(&["4k", "-2k", "-2k"]), None), Some(&["-4", "2", "2"])),
    ((Some(&["4k", "-2k", "-2k"]), None), Some(&["-4", "2", "2"])),
    (
        (
            Some(&["54k + 61", "42k + 61", "-48k - 61"]),
            Some("48k + 61"),
        ),
        Some(&["-6", "6", "0"]),
    ),
    ((Some(&["48k + 67", "0", "0"]), Some("48k + 67")), None),
    ((None, None), None),
    ((Some(&["2k", "-4k", "2k"]), None), Some(&["-2", "4", "-2"])),
    (
        (Some(&["4k", "-50k - 37", "94k + 74"]), Some("48k + 37")),
        Some(&["-4", "2", "2"]),
    ),
    ((Some(&["0", "0", "48k + 43"]), Some("48k + 43")), None),
];

const FIVE_QUOTED: [Quoted; 8] = [
    (None, None),
    (
        Some(&["0", "0", "-80k - 91", "0", "160k + 182"]),
        Some("80k + 91"),
    ),
    (Some(&["0", "0", "0", "0", "80k + 101"]), Some("80k + 101")),
    (None, None),
    (None, None),
    (
        Some(&["0", "-80k - 131", "0", "0", "160k + 262"]),
        Some("80k + 131"),
    ),
    (
        Some(&["-80k - 141", "-80k - 141", "80k + 141", "0", "160k + 282"]),
        Some("80k + 141"),
    ),
    (None, None),
];

fn expect(q: Quoted, shape: (usize, usize), b: &Bindings) -> (Vec<i128>, Vec<i128>) {
    let rows = q.0.map_or(vec![0; shape.0], |r| eval_all(r, b));
    let cols = q.1.map_or(vec![0; shape.1], |c| leading(c, shape.1, b));
    (rows, cols)
}

fn check_tile(
    t: &TileTemplate,
    b: &Bindings,
    want: (Vec<i128>, Vec<i128>),
    bad: &mut Vec<String>,
) -> usize {
    let tile = t.instantiate(b).unwrap();
    let got = tile.line_sums();
    if (got.row_sums.clone(), got.col_sums.clone()) != want {
        bad.push(format!(
            "{:?} {} {b}: rows {:?} cols {:?}",
            t.construction, t.name, got.row_sums, got.col_sums
        ));
    }
    1
}

#[test]
fn criterion_5_tile_line_sums() {
    let mut bad = Vec::new();
    let mut checked = 0;
    for residue in 0..8 {
        for k in 0..=K_MAX {
            let b = Bindings::new().k(k);
            let (a_q, ar_rows) = THREE_QUOTED[residue];
            let a = &THREE_ROW_A[residue];
            checked += check_tile(a, &b, expect(a_q, a.shape(), &b), &mut bad);
            let a = &FIVE_ROW_A[residue];
            checked += check_tile(a, &b, expect(FIVE_QUOTED[residue], a.shape(), &b), &mut bad);
            for r in 0..k {
                let b = Bindings::new().k(k).r(r);
                let ar = &THREE_ROW_AR[residue];
                checked += check_tile(ar, &b, expect((ar_rows, None), ar.shape(), &b), &mut bad);
                let ar = &FIVE_ROW_AR[residue];
                checked += check_tile(ar, &b, expect((None, None), ar.shape(), &b), &mut bad);
            }
        }
    }
    let family_checks = checked;

    // variable and corner tiles at sampled (x, y), border families at sampled (s, k, r)
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..SUM_SAMPLES {
        let x = rng.gen_range(40..100_000);
        let y = rng.gen_range(2..500);
        let b = Bindings::new().x(x).y(y);
        checked += check_tile(
            &CORNER_1MOD4,
            &b,
            expect(
                (
                    Some(&[TWO_X, "0", "0", "0", "0", "0", "0", "0", "0"]),
                    Some(TWO_X),
                ),
                (9, 6),
                &b,
            ),
            &mut bad,
        );
        checked += check_tile(
            &CORNER_3MOD4,
            &b,
            expect(
                (Some(&[TWO_X, "0", "0", "0", "0", "0", "0"]), Some(TWO_X)),
                (7, 6),
                &b,
            ),
            &mut bad,
        );
        checked += check_tile(
            &L33_CORNER_TILE,
            &b,
            expect(
                (Some(&[TWO_X, "0", "0", "0", "0", "0", "0"]), Some(TWO_X)),
                (7, 7),
                &b,
            ),
            &mut bad,
        );
        checked += check_tile(
            &L13_CORNER_TILE,
            &b,
            expect((None, None), (9, 7), &b),
            &mut bad,
        );
        let l11 = L11_CORNER_TILE.instantiate(&b).unwrap().line_sums();
        let want_rows = eval_all(&["0", TWO_X, "0", "0", "0", "0", "0", "0", "0"], &b);
        let want_cols = eval_all(&["0", TWO_X, "-2x - 1", "0", TWO_X, "0", "0", "0", "0"], &b);
        if l11.row_sums != want_rows || l11.col_sums != want_cols {
            bad.push(format!("L11 corner {b}: {l11:?}"));
        }
        checked += 1;

        let s = rng.gen_range(2..40);
        let k = rng.gen_range(2..40);
        let r = rng.gen_range(0..k);
        let b = Bindings::new().s(s).k(k).r(r);
        for t in [
            &FAMILY_1MOD4,
            &FAMILY_3MOD4,
            &L11_BORDER_TILE,
            &L33_BORDER_TILE,
            &L13_TOP_TILE,
            &L13_LEFT_TILE,
        ] {
            checked += check_tile(t, &b, expect((None, None), t.shape(), &b), &mut bad);
        }
    }
    let ok = bad.is_empty();
    report(
        5,
        "tile line sums equal the quoted formulas",
        ok,
        &format!(
            "{family_checks} family tiles, {} variable tiles, {} mismatches",
            checked - family_checks,
            bad.len()
        ),
    );
    assert!(ok, "{bad:#?}");
}

#[test]
fn criterion_6_oracle_agreement() {
    let timed = |m, n, kind| {
        let start = Instant::now();
        let found = brute_force_search(m, n, kind, 1).unwrap();
        (found, start.elapsed())
    };
    let (mod33, t1) = timed(3, 3, HeffterKind::Modular);
    let (int33, t2) = timed(3, 3, HeffterKind::Integer);
    let (int34, t3) = timed(3, 4, HeffterKind::Integer);
    let ex33 = Matrix::from_rows(&[[-8, -2, -9], [7, -3, -4], [1, 5, -6]]);
    let ex34 = Matrix::from_rows(&[[1, 2, 3, -6], [8, -12, -7, 11], [-9, 10, 4, -5]]);
    let found_valid = mod33
        .iter()
        .chain(&int34)
        .all(|a| verify(a.matrix()).is_modular_heffter);
    let ok = !mod33.is_empty()
        && verify(&ex33).is_modular_heffter
        && int33.is_empty()
        && !int34.is_empty()
        && verify(&ex34).is_integer_heffter
        && found_valid
        && [t1, t2, t3].iter().all(|t| *t < ORACLE_BUDGET);
    report(
        6,
        "brute-force search agrees with the verifier",
        ok,
        &format!(
            "3x3 modular: {} found in {t1:.2?}; 3x3 integer: {} in {t2:.2?}; 3x4 integer: {} in {t3:.2?}",
            mod33.len(),
            int33.len(),
            int34.len()
        ),
    );
    assert!(ok);
}

#[test]
fn criterion_7_mutation_fuzz() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut false_passes = 0;
    let mut total = 0;
    for _ in 0..FUZZ_ARRAYS {
        let (m, n) = (rng.gen_range(3..=16), rng.gen_range(3..=16));
        let base = construct(m, n).unwrap().array.into_matrix();
        assert!(verify(&base).is_modular_heffter);
        for _ in 0..FUZZ_MUTATIONS {
            let mut a = base.clone();
            let (i, j) = (rng.gen_range(0..m), rng.gen_range(0..n));
            if rng.gen_bool(0.5) {
                a.set(i, j, -a.get(i, j));
            } else {
                // copy another cell's value (or its negation) into (i, j)
                let (p, q) = loop {
                    let c = (rng.gen_range(0..m), rng.gen_range(0..n));
                    if c != (i, j) {
                        break c;
                    }
                };
                let v = a.get(p, q);
                a.set(i, j, if rng.gen_bool(0.5) { v } else { -v });
            }
            total += 1;
            if verify(&a).is_modular_heffter {
                false_passes += 1;
            }
        }
    }
    let ok = false_passes == 0;
    report(
        7,
        "verifier rejects every mutation",
        ok,
        &format!("{total} mutations, {false_passes} false passes"),
    );
    assert!(ok);
}

#[test]
fn criterion_8_skolem_suite() {
    let start = Instant::now();
    let s5 = SkolemSequence::plain(vec![1, 1, 3, 4, 5, 3, 2, 4, 2, 5]);
    let s7 = SkolemSequence::near(7, [4], vec![1, 1, 6, 3, 7, 5, 3, 2, 6, 2, 5, 7]);
    let printed_ok = verify_skolem(&s5).is_ok() && verify_skolem(&s7).is_ok();
    let mut pattern_ok = true;
    let mut triples_ok = true;
    let mut exists = Vec::new();
    for order in 1..=9 {
        let found = find_skolem(order, &[]);
        exists.push(found.is_some());
        pattern_ok &= found.is_some() == matches!(order % 4, 0 | 1);
        if let Some(seq) = found {
            pattern_ok &= verify_skolem(&seq).is_ok();
            let n = order as u32;
            let t = skolem_to_triples(&seq).unwrap();
            triples_ok &= t.check().is_ok()
                && t.triples
                    .iter()
                    .all(|t| t.a + t.b == t.c && t.a <= n && t.b > n && t.c > n && t.c <= 3 * n);
        }
    }
    let elapsed = start.elapsed();
    let ok = printed_ok && pattern_ok && triples_ok && elapsed < SKOLEM_BUDGET;
    let orders: Vec<String> = (1..=9)
        .zip(&exists)
        .filter(|(_, e)| **e)
        .map(|(o, _)| o.to_string())
        .collect();
    report(
        8,
        "Skolem checks, existence pattern and triple map",
        ok,
        &format!("orders with sequences: {}; {elapsed:.2?}", orders.join(",")),
    );
    assert!(ok);
}

#[test]
fn criterion_9_exact_cover_triples() {
    let start = Instant::now();
    let mut missing = Vec::new();
    for n in 1..=TRIPLES_MAX {
        match triples_exact_cover(n, true, None).unwrap() {
            Some(p) if p.check().is_ok() => {}
            _ => missing.push(n),
        }
    }
    let elapsed = start.elapsed();
    let ok = missing.is_empty() && elapsed < TRIPLES_BUDGET;
    report(
        9,
        "triple partitions for n = 1..12",
        ok,
        &format!(
            "{} solved, missing {missing:?}, {elapsed:.2?}",
            TRIPLES_MAX - missing.len()
        ),
    );
    assert!(ok);
}
