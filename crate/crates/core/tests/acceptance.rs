//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

use std::time::{Duration, Instant};

use holekit::classify::{classify_all_edges, verify_counting_lemmas, EdgeColor};
use holekit::decide::witness::is_valid_witness;
use holekit::decide::{decide_balanced_convex_4hole, decide_with_witness, find_convex_4hole_balanced_or_mono};
use holekit::generators::{double_chain, random_general, regular_gon_black_scheduled};
use holekit::holes::{
    count_balanced_4holes, count_balanced_4holes_detailed, enumerate_balanced_4holes, find_balanced_2khole,
    is_empty_polygon, is_simple, quadratic_lower_bound, separable_lower_bound,
};
use holekit::{oracle, BicoloredSet, Point, Validation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Check<'a> = Box<dyn Fn() -> Outcome + 'a>;

/// Random sets with the given per-color range; half of them separable, and
/// about half with |R| = |B| so the balanced-only criteria see enough cases.
fn corpus(seed: u64, count: usize, lo: usize, hi: usize) -> Vec<BicoloredSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let r = rng.gen_range(lo..=hi);
            let b = if rng.gen_bool(0.5) { r } else { rng.gen_range(lo..=hi) };
            random_general(r, b, seed * 100_000 + i as u64, i % 2 == 0)
        })
        .collect()
}

struct Corpora {
    counting: Vec<BicoloredSet>,
    deciding: Vec<BicoloredSet>,
}

impl Corpora {
    fn all(&self) -> impl Iterator<Item = &BicoloredSet> {
        self.counting.iter().chain(&self.deciding)
    }
}

fn criterion_1(c: &Corpora) -> Outcome {
    let start = Instant::now();
    for (i, s) in c.counting.iter().enumerate() {
        let fast = count_balanced_4holes(s);
        let slow = oracle::count_balanced_4holes(s).map_err(|e| e.to_string())?;
        if fast != slow {
            return Err(format!("set {i}: count {fast}, oracle {slow}"));
        }
    }
    let t = start.elapsed();
    if t > Duration::from_secs(60) {
        return Err(format!("took {t:?}"));
    }
    Ok(format!("{} sets agree, {t:.2?}", c.counting.len()))
}

fn criterion_2(c: &Corpora) -> Outcome {
    let (mut positive, mut separable) = (0, 0);
    for (i, s) in c.deciding.iter().enumerate() {
        let d = decide_with_witness(s).map_err(|e| format!("set {i}: {e}"))?;
        if d.has_hole != oracle::has_balanced_convex_4hole(s) {
            return Err(format!("set {i}: decision {} ({}) disagrees with the oracle", d.has_hole, d.condition));
        }
        if d.has_hole {
            positive += 1;
            match &d.witness {
                Some(w) if is_valid_witness(s, w) => {}
                _ => return Err(format!("set {i}: missing or invalid witness")),
            }
        }
        separable += s.linearly_separable() as usize;
    }
    Ok(format!("{} sets agree ({positive} positive, {separable} separable), witnesses valid", c.deciding.len()))
}

fn criterion_3() -> Outcome {
    for n in 2..=10 {
        let s = double_chain(n).map_err(|e| e.to_string())?;
        let holes = enumerate_balanced_4holes(&s);
        if holes.len() != (n - 1) * (n - 1) || count_balanced_4holes(&s) as usize != holes.len() {
            return Err(format!("n = {n}: {} holes", holes.len()));
        }
        if !holes.iter().all(|h| h.is_convex) {
            return Err(format!("n = {n}: a non-convex hole"));
        }
    }
    Ok("n = 2..10 give (n-1)^2 convex holes".into())
}

fn criterion_4(c: &Corpora) -> Outcome {
    let mut checked = 0;
    for s in c.all().filter(|s| s.red_count() == s.blue_count()) {
        let n = s.red_count() as i64;
        let count = count_balanced_4holes(s) as i64;
        if count < quadratic_lower_bound(n) {
            return Err(format!("n = {n}: {count} < quadratic bound\n{}", s.to_text()));
        }
        if s.linearly_separable() && count < separable_lower_bound(n) {
            return Err(format!("n = {n}: {count} < separable bound\n{}", s.to_text()));
        }
        checked += 1;
    }
    Ok(format!("{checked} balanced instances, no violation"))
}

fn criterion_5(c: &Corpora) -> Outcome {
    let mut checked = 0;
    for s in c.all() {
        let cls = classify_all_edges(s).map_err(|e| format!("{e}\n{}", s.to_text()))?;
        if s.red_count() != s.blue_count() {
            continue;
        }
        let report = verify_counting_lemmas(s).map_err(|e| e.to_string())?;
        if !report.all_hold() {
            return Err(format!("{report:?}\n{}", s.to_text()));
        }
        debug_assert_eq!(report.summary, cls.summary);
        checked += 1;
    }
    Ok(format!("{checked} balanced instances within bounds, no invariant violation"))
}

fn criterion_6() -> Outcome {
    let mut used = Vec::new();
    for k in 2..=4 {
        let (s, eps) = regular_gon_black_scheduled(k).map_err(|e| format!("k = {k}: {e}"))?;
        let c = classify_all_edges(&s).map_err(|e| e.to_string())?;
        let black = c.edges.iter().filter(|e| e.color == EdgeColor::Black).count();
        if black != 2 * k {
            return Err(format!("k = {k}: {black} black edges"));
        }
        used.push(format!("k={k}: eps={eps}"));
    }
    Ok(format!("2k black edges ({})", used.join(", ")))
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut polygons = 0;
    for i in 0..200 {
        let n = rng.gen_range(1..=10);
        let s = random_general(n, n, 70_000 + i, rng.gen_bool(0.3));
        for k in 1..=n {
            let h = find_balanced_2khole(&s, k).map_err(|e| format!("set {i}, k = {k}: {e}"))?;
            let balanced = h.red_vertex_count == k && h.blue_vertex_count == k;
            let ok = if k == 1 {
                h.is_segment && balanced
            } else {
                is_simple(&h.vertices) && is_empty_polygon(&s, &h.vertices).unwrap_or(false) && balanced
            };
            if !ok {
                return Err(format!("set {i}, k = {k}: invalid polygon\n{}", s.to_text()));
            }
            polygons += 1;
        }
    }
    Ok(format!("{polygons} polygons simple, empty and balanced"))
}

fn criterion_8(c: &Corpora) -> Outcome {
    let bad = c.all().filter(|s| s.red_count() >= 2 && s.blue_count() >= 2 && count_balanced_4holes(s) == 0).count();
    if bad > 0 {
        return Err(format!("{bad} sets without a balanced 4-hole"));
    }
    Ok(format!("{} sets each have a balanced 4-hole", c.all().count()))
}

/// Best of five runs.
fn time<T>(mut f: impl FnMut() -> T) -> Duration {
    (0..5)
        .map(|_| {
            let t = Instant::now();
            std::hint::black_box(f());
            t.elapsed()
        })
        .min()
        .unwrap()
}

/// Hulls plus decision, from raw points (validation limited to duplicates).
fn build_and_decide(points: &[Point]) -> bool {
    let s = BicoloredSet::with_validation(points.to_vec(), Validation::Sampled { triples: 0, seed: 0 })
        .expect("generated points are valid");
    decide_balanced_convex_4hole(&s).has_hole
}

fn criterion_9() -> Outcome {
    let sizes = [25_000, 50_000, 100_000, 200_000];
    let mut lines = Vec::new();
    for (label, make) in [
        ("random separable", (|n: usize| random_general(n, n, n as u64, true)) as fn(usize) -> BicoloredSet),
        ("double chain", |n: usize| double_chain(n).expect("double chain")),
    ] {
        let times: Vec<Duration> = sizes
            .iter()
            .map(|&n| {
                let pts = make(n).points().to_vec();
                time(|| build_and_decide(&pts))
            })
            .collect();
        let at_1e5 = times[2];
        if at_1e5 > Duration::from_secs(2) {
            return Err(format!("{label}: n = 1e5 took {at_1e5:?}"));
        }
        for w in times.windows(2) {
            let ratio = w[1].as_secs_f64() / w[0].as_secs_f64().max(1e-9);
            if ratio >= 2.6 {
                return Err(format!("{label}: doubling ratio {ratio:.2} ({times:?})"));
            }
        }
        lines.push(format!("{label} n=1e5 {at_1e5:.2?}"));
    }
    // counting work follows empty triangles and balanced pairs, not n^4
    let mut per_unit = Vec::new();
    let mut count_times = Vec::new();
    for n in [50, 100, 200] {
        let s = random_general(n, n, 9_000 + n as u64, false);
        let detail = count_balanced_4holes_detailed(&s);
        let t = time(|| count_balanced_4holes(&s));
        count_times.push(t.as_secs_f64());
        per_unit.push(t.as_secs_f64() / (detail.empty_triangles + detail.pairs) as f64);
    }
    let spread = per_unit.iter().cloned().fold(0.0, f64::max) / per_unit.iter().cloned().fold(f64::MAX, f64::min);
    let growth = count_times[2] / count_times[0];
    // n^4 would grow 256x from n = 50 to n = 200
    if spread > 4.0 || growth > 64.0 {
        return Err(format!("count time per unit spread {spread:.2}, growth {growth:.1}"));
    }
    lines.push(format!("count time per (triangle + pair) within x{spread:.2}, growth x{growth:.1} for 4x n"));
    Ok(lines.join("; "))
}

fn criterion_10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let (mut balanced, mut mono) = (0, 0);
    for i in 0..500 {
        let (r, b) = (rng.gen_range(4..=10), rng.gen_range(4..=10));
        let s = random_general(r, b, 100_000 + i, rng.gen_bool(0.5));
        let h = find_convex_4hole_balanced_or_mono(&s).map_err(|e| format!("set {i}: {e}"))?;
        let empty = is_empty_polygon(&s, &h.vertices).unwrap_or(false);
        if h.vertices.len() != 4 || !h.is_convex || !empty {
            return Err(format!("set {i}: not a convex 4-hole\n{}", s.to_text()));
        }
        match (h.red_vertex_count, h.blue_vertex_count) {
            (2, 2) => balanced += 1,
            (4, 0) | (0, 4) => mono += 1,
            _ => return Err(format!("set {i}: neither balanced nor monochromatic")),
        }
    }
    Ok(format!("500 valid quads ({balanced} balanced, {mono} monochromatic)"))
}

fn main() {
    let corpora = Corpora { counting: corpus(1, 1000, 2, 8), deciding: corpus(2, 1000, 2, 10) };
    let criteria: Vec<(&str, Check)> = vec![
        ("counting matches the oracle", Box::new(|| criterion_1(&corpora))),
        ("decision matches the oracle", Box::new(|| criterion_2(&corpora))),
        ("double chain", Box::new(criterion_3)),
        ("lower bounds", Box::new(|| criterion_4(&corpora))),
        ("edge-count bounds", Box::new(|| criterion_5(&corpora))),
        ("black-edge construction", Box::new(criterion_6)),
        ("balanced 2k-holes", Box::new(criterion_7)),
        ("a balanced 4-hole always exists", Box::new(|| criterion_8(&corpora))),
        ("performance scaling", Box::new(criterion_9)),
        ("balanced or monochromatic convex 4-hole", Box::new(criterion_10)),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
