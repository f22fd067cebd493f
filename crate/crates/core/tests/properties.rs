use holekit::classify::{
    classify_all_edges, separable_degree_bounds_hold, triangle_blocking_holds, verify_counting_lemmas, EdgeColor,
};
use holekit::decide::witness::is_valid_witness;
use holekit::decide::{decide_balanced_convex_4hole, decide_with_witness};
use holekit::holes::{
    canonical_cycle, count_balanced_4holes, enumerate_balanced_4holes, find_balanced_2khole, is_empty_polygon,
    is_simple, signed_area2,
};
use holekit::{oracle, BicoloredSet, Point};
use proptest::prelude::*;

/// Sets with `lo..=hi` points per color on a modest grid; rejected draws
/// (duplicates, collinear triples) are filtered out.
fn sets(lo: usize, hi: usize, balanced: bool) -> impl Strategy<Value = BicoloredSet> {
    let coord = || (-500i64..500, -500i64..500);
    (lo..=hi, lo..=hi)
        .prop_flat_map(move |(r, b)| {
            let b = if balanced { r } else { b };
            (prop::collection::vec(coord(), r), prop::collection::vec(coord(), b))
        })
        .prop_filter_map("general position", |(reds, blues)| {
            let pts = reds.iter().map(|&(x, y)| Point::red(x, y)).chain(blues.iter().map(|&(x, y)| Point::blue(x, y)));
            BicoloredSet::new(pts.collect()).ok()
        })
}

fn ccw_canonical(s: &BicoloredSet, cycle: &[usize]) -> Vec<usize> {
    let pts: Vec<Point> = cycle.iter().map(|&i| s.point(i)).collect();
    let mut c = cycle.to_vec();
    if signed_area2(&pts) < 0 {
        c.reverse();
    }
    canonical_cycle(&c)
}

fn translated(s: &BicoloredSet, dx: i64, dy: i64) -> BicoloredSet {
    let pts = s.points().iter().map(|p| Point::new(p.x + dx, p.y + dy, p.color)).collect();
    BicoloredSet::new(pts).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn enumeration_matches_oracle(s in sets(2, 7, false)) {
        let mut fast: Vec<Vec<usize>> =
            enumerate_balanced_4holes(&s).iter().map(|h| ccw_canonical(&s, &h.indices)).collect();
        fast.sort();
        prop_assert_eq!(&fast, &oracle::balanced_4holes(&s).unwrap());
        prop_assert_eq!(count_balanced_4holes(&s), fast.len() as u64);
    }

    #[test]
    fn decision_matches_oracle_with_valid_witness(s in sets(2, 9, false)) {
        let d = decide_with_witness(&s).unwrap();
        prop_assert_eq!(d.has_hole, oracle::has_balanced_convex_4hole(&s));
        if let Some(w) = &d.witness {
            prop_assert!(is_valid_witness(&s, w));
        }
        prop_assert_eq!(d.has_hole, d.witness.is_some());
    }

    #[test]
    fn classification_is_consistent(s in sets(2, 7, true)) {
        let c = classify_all_edges(&s).unwrap();
        let report = verify_counting_lemmas(&s).unwrap();
        prop_assert!(report.all_hold(), "{:?}", report);
        prop_assert!(triangle_blocking_holds(&s, &c));
        prop_assert_ne!(separable_degree_bounds_hold(&s, &c), Some(false));
        prop_assert!(4 * count_balanced_4holes(&s) >= c.summary.green_count as u64);
        let n = s.red_count();
        let cap = (n - 1) / 3;
        prop_assert!(c.summary.red_degrees.iter().all(|&d| d <= cap));
        prop_assert!(c.summary.blue_degrees.iter().all(|&d| d <= cap));
        prop_assert_eq!(c.edges.len(), n * n);
    }

    #[test]
    fn balanced_2k_holes_are_valid(s in sets(1, 8, true), pick in 0usize..8) {
        let k = 1 + pick % s.red_count();
        let h = find_balanced_2khole(&s, k).unwrap();
        prop_assert_eq!((h.red_vertex_count, h.blue_vertex_count), (k, k));
        if k == 1 {
            prop_assert!(h.is_segment);
        } else {
            prop_assert!(is_simple(&h.vertices));
            prop_assert!(is_empty_polygon(&s, &h.vertices).unwrap());
        }
    }

    #[test]
    fn color_swap_preserves_results(s in sets(2, 7, false)) {
        let t = s.swapped();
        prop_assert_eq!(count_balanced_4holes(&s), count_balanced_4holes(&t));
        prop_assert_eq!(decide_balanced_convex_4hole(&s).has_hole, decide_balanced_convex_4hole(&t).has_hole);
        let (a, b) = (classify_all_edges(&s).unwrap().summary, classify_all_edges(&t).unwrap().summary);
        prop_assert_eq!((a.green_count, a.black_count), (b.green_count, b.black_count));
        prop_assert_eq!((a.red_count, a.blue_count), (b.blue_count, b.red_count));
    }

    #[test]
    fn translation_preserves_results(s in sets(2, 7, false), dx in -10_000i64..10_000, dy in -10_000i64..10_000) {
        let t = translated(&s, dx, dy);
        prop_assert_eq!(count_balanced_4holes(&s), count_balanced_4holes(&t));
        let (a, b) = (decide_balanced_convex_4hole(&s), decide_balanced_convex_4hole(&t));
        prop_assert_eq!(a.has_hole, b.has_hole);
        prop_assert_eq!(a.condition, b.condition);
        let colors = |s: &BicoloredSet| -> Vec<EdgeColor> {
            classify_all_edges(s).unwrap().edges.iter().map(|e| e.color).collect()
        };
        prop_assert_eq!(colors(&s), colors(&t));
    }
}
