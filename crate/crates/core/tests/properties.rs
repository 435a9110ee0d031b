use heffter::affine::{Affine, Bindings};
use heffter::oracle::{find_skolem, skolem_to_triples, triples_exact_cover};
use heffter::{build_even, construct, verify, Axis, ClassFlags, Matrix};
use proptest::prelude::*;

fn nonzero_matrix(max_side: usize, bound: i64) -> impl Strategy<Value = Matrix> {
    (1..=max_side, 1..=max_side).prop_flat_map(move |(r, c)| {
        prop::collection::vec((1..=bound, any::<bool>()), r * c).prop_map(move |cells| {
            let entries = cells
                .into_iter()
                .map(|(v, neg)| if neg { -v } else { v })
                .collect();
            Matrix::new(r, c, entries).unwrap()
        })
    })
}

fn side() -> impl Strategy<Value = usize> {
    3usize..=48
}

fn even_side() -> impl Strategy<Value = usize> {
    (2usize..=20).prop_map(|h| 2 * h)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn construct_matches_prediction(m in side(), n in side()) {
        let res = construct(m, n).unwrap();
        prop_assert_eq!((res.m(), res.n()), (m, n));
        let rep = verify(res.array.matrix());
        prop_assert_eq!(rep.flags(), ClassFlags::predicted(m, n));
        prop_assert_eq!(res.claimed, ClassFlags::predicted(m, n));
    }

    #[test]
    fn placements_tile_the_array(m in side(), n in side()) {
        let res = construct(m, n).unwrap();
        let mut hits = vec![0u8; m * n];
        for p in &res.provenance.tiles {
            for i in p.row..p.row + p.rows {
                for j in p.col..p.col + p.cols {
                    hits[i * n + j] += 1;
                }
            }
        }
        prop_assert!(hits.iter().all(|&h| h == 1), "{:?}", res.provenance.tiles);
    }

    #[test]
    fn even_blocks_occupy_their_shifted_interval(m in even_side(), n in even_side()) {
        let res = build_even(m, n).unwrap();
        let a = res.array.matrix();
        for p in &res.provenance.tiles {
            let mut mags: Vec<u64> = (p.row..p.row + p.rows)
                .flat_map(|i| (p.col..p.col + p.cols).map(move |j| (i, j)))
                .map(|(i, j)| a.get(i, j).unsigned_abs())
                .collect();
            mags.sort_unstable();
            let lo = p.shift as u64 + 1;
            let want: Vec<u64> = (lo..lo + (p.rows * p.cols) as u64).collect();
            prop_assert_eq!(mags, want);
        }
    }

    #[test]
    fn shift_keeps_shiftable_sums(m in even_side(), n in even_side(), k in 0i64..10_000) {
        let a = build_even(m, n).unwrap().array.into_matrix();
        let shifted = a.shift(k);
        prop_assert!(shifted.line_sums().all_zero());
        prop_assert_eq!(shifted.support(), a.support().translate(k as u64));
    }

    #[test]
    fn shift_translates_support(a in nonzero_matrix(6, 40), k in 0i64..1000) {
        prop_assert_eq!(a.shift(k).support(), a.support().translate(k as u64));
        let (pos, neg) = a.sign_balance();
        prop_assert_eq!(a.shift(k).sign_balance(), (pos, neg));
    }

    #[test]
    fn verdict_survives_symmetries(m in side(), n in side(), seed in any::<u64>()) {
        let a = construct(m, n).unwrap().array.into_matrix();
        let base = verify(&a).flags();
        prop_assert_eq!(verify(&a.transpose()).flags(), base);
        prop_assert_eq!(verify(&a.negate()).flags(), base);
        // rotate rows and columns by seed-derived offsets
        let (dr, dc) = ((seed as usize) % m, (seed as usize >> 16) % n);
        let rows: Vec<Vec<i64>> = (0..m)
            .map(|i| (0..n).map(|j| a.get((i + dr) % m, (j + dc) % n)).collect())
            .collect();
        prop_assert_eq!(verify(&Matrix::from_rows(&rows)).flags(), base);
    }

    #[test]
    fn random_matrices_keep_verdict_under_transpose(a in nonzero_matrix(5, 30)) {
        prop_assert_eq!(verify(&a).flags(), verify(&a.transpose()).flags());
    }

    #[test]
    fn sign_flip_is_always_caught(m in side(), n in side(), i in any::<usize>(), j in any::<usize>()) {
        let mut a = construct(m, n).unwrap().array.into_matrix();
        let (i, j) = (i % m, j % n);
        a.set(i, j, -a.get(i, j));
        prop_assert!(!verify(&a).is_modular_heffter);
    }

    #[test]
    fn concat_is_associative(
        r in 1usize..5,
        widths in prop::collection::vec(1usize..5, 3),
        seed in any::<i64>(),
    ) {
        let block = |w: usize, salt: i64| {
            let entries = (0..r * w).map(|e| seed.wrapping_add(salt * 31 + e as i64) % 97).collect();
            Matrix::new(r, w, entries).unwrap()
        };
        let (a, b, c) = (block(widths[0], 1), block(widths[1], 2), block(widths[2], 3));
        let left = Matrix::concat(Axis::Horizontal, &[&Matrix::concat(Axis::Horizontal, &[&a, &b]).unwrap(), &c]).unwrap();
        let right = Matrix::concat(Axis::Horizontal, &[&a, &Matrix::concat(Axis::Horizontal, &[&b, &c]).unwrap()]).unwrap();
        prop_assert_eq!(&left, &right);
        let (at, bt, ct) = (a.transpose(), b.transpose(), c.transpose());
        let down = Matrix::concat(Axis::Vertical, &[&at, &bt, &ct]).unwrap();
        prop_assert_eq!(down, left.transpose());
    }

    #[test]
    fn affine_display_round_trips(c in -1000i64..1000, coeffs in prop::collection::vec(-50i64..50, 5)) {
        let src = format!("{}k + {}r + {}s + {}x + {}y + {c}", coeffs[0], coeffs[1], coeffs[2], coeffs[3], coeffs[4])
            .replace("+ -", "- ");
        let e = Affine::parse(&src).unwrap();
        prop_assert_eq!(Affine::parse(&e.to_string()).unwrap(), e);
        let b = Bindings::new().k(2).r(3).s(5).x(7).y(11);
        let want = coeffs[0] * 2 + coeffs[1] * 3 + coeffs[2] * 5 + coeffs[3] * 7 + coeffs[4] * 11 + c;
        prop_assert_eq!(e.eval(&b).unwrap(), want);
    }

    #[test]
    fn seeded_triples_are_partitions(n in 1usize..=10, seed in any::<u64>()) {
        let p = triples_exact_cover(n, true, Some(seed)).unwrap().unwrap();
        prop_assert!(p.check().is_ok());
    }

    #[test]
    fn json_round_trip(m in side(), n in side()) {
        let a = construct(m, n).unwrap().array.into_matrix();
        let text = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<Matrix>(&text).unwrap(), a);
    }
}

#[test]
fn skolem_triples_for_every_existing_order() {
    for order in (1..=12).filter(|o| matches!(o % 4, 0 | 1)) {
        let seq = find_skolem(order, &[]).unwrap();
        let t = skolem_to_triples(&seq).unwrap();
        t.check().unwrap();
        let n = order as u32;
        assert!(t
            .triples
            .iter()
            .all(|t| t.a <= n && t.b > n && t.c <= 3 * n));
    }
}
