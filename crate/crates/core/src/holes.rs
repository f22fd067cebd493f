//! Empty triangles, balanced 4-holes, emptiness checks and balanced 2k-holes.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::geometry::{det, segments_cross, Color, Point};
use crate::pointset::BicoloredSet;

/// Empty triangle as CCW point indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EmptyTriangle {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HolePolygon {
    /// Point indices in CCW order.
    pub indices: Vec<usize>,
    pub vertices: Vec<Point>,
    pub is_convex: bool,
    pub red_vertex_count: usize,
    pub blue_vertex_count: usize,
    /// Two-vertex marker returned for k = 1.
    pub is_segment: bool,
}

impl HolePolygon {
    /// Builds the polygon from indices, reorienting to CCW.
    pub fn from_indices(s: &BicoloredSet, indices: &[usize]) -> HolePolygon {
        let mut indices = indices.to_vec();
        let pts: Vec<Point> = indices.iter().map(|&i| s.point(i)).collect();
        if indices.len() >= 3 && signed_area2(&pts) < 0 {
            indices.reverse();
        }
        let vertices: Vec<Point> = indices.iter().map(|&i| s.point(i)).collect();
        let red = vertices.iter().filter(|p| p.color == Color::Red).count();
        HolePolygon {
            is_convex: is_convex(&vertices),
            red_vertex_count: red,
            blue_vertex_count: vertices.len() - red,
            is_segment: vertices.len() == 2,
            indices,
            vertices,
        }
    }

    pub fn is_balanced(&self) -> bool {
        self.red_vertex_count == self.blue_vertex_count
    }

    pub fn is_balanced_4hole(&self) -> bool {
        self.vertices.len() == 4 && self.red_vertex_count == 2 && self.blue_vertex_count == 2
    }

    /// Index cycle rotated so that the smallest index comes first.
    pub fn canonical(&self) -> Vec<usize> {
        canonical_cycle(&self.indices)
    }
}

pub fn canonical_cycle(cycle: &[usize]) -> Vec<usize> {
    let Some(pos) = (0..cycle.len()).min_by_key(|&i| cycle[i]) else {
        return Vec::new();
    };
    cycle[pos..].iter().chain(&cycle[..pos]).copied().collect()
}

pub fn signed_area2(pts: &[Point]) -> i128 {
    let n = pts.len();
    (0..n)
        .map(|i| {
            let (a, b) = (&pts[i], &pts[(i + 1) % n]);
            a.x as i128 * b.y as i128 - a.y as i128 * b.x as i128
        })
        .sum()
}

/// All turns have the same sign. Polygons with fewer than three vertices count as convex.
pub fn is_convex(pts: &[Point]) -> bool {
    let n = pts.len();
    if n < 3 {
        return true;
    }
    let signs: Vec<i128> = (0..n).map(|i| det(&pts[i], &pts[(i + 1) % n], &pts[(i + 2) % n]).signum()).collect();
    signs.iter().all(|&s| s == signs[0] && s != 0)
}

/// No two non-adjacent edges meet.
pub fn is_simple(pts: &[Point]) -> bool {
    let n = pts.len();
    if n < 3 {
        return n == 2 || n == 1;
    }
    for i in 0..n {
        for j in i + 1..n {
            if j == i + 1 || (i == 0 && j == n - 1) {
                continue;
            }
            let (a, b) = (pts[i], pts[(i + 1) % n]);
            let (c, d) = (pts[j], pts[(j + 1) % n]);
            if segments_cross(a, b, c, d) {
                return false;
            }
        }
    }
    true
}

/// Strict interior test by ray casting. Points on the boundary are reported outside.
pub fn point_in_polygon(t: &Point, poly: &[Point]) -> bool {
    let n = poly.len();
    let mut inside = false;
    for i in 0..n {
        let (a, b) = (&poly[i], &poly[(i + 1) % n]);
        if det(a, b, t) == 0 && between(a, b, t) {
            return false;
        }
        if (a.y > t.y) != (b.y > t.y) {
            let d = det(a, b, t);
            let crosses = if b.y > a.y { d > 0 } else { d < 0 };
            if crosses {
                inside = !inside;
            }
        }
    }
    inside
}

fn between(a: &Point, b: &Point, t: &Point) -> bool {
    t.x >= a.x.min(b.x) && t.x <= a.x.max(b.x) && t.y >= a.y.min(b.y) && t.y <= a.y.max(b.y)
}

pub fn is_empty_polygon(s: &BicoloredSet, vertices: &[Point]) -> Result<bool> {
    if !is_simple(vertices) {
        return Err(Error::NotSimple);
    }
    if vertices.len() < 3 {
        return Ok(true);
    }
    Ok(!s
        .points()
        .iter()
        .any(|p| !vertices.iter().any(|v| v.same_place(p)) && point_in_polygon(p, vertices)))
}

/// Empty triangles by the visibility-graph sweep around each point, each
/// reported once from its lexicographically smallest vertex.
pub fn enumerate_empty_triangles(s: &BicoloredSet) -> Vec<EmptyTriangle> {
    let mut out = Vec::new();
    for_each_empty_triangle(s.points(), |a, b, c| out.push(EmptyTriangle { a, b, c }));
    out
}

pub fn count_empty_triangles(s: &BicoloredSet) -> usize {
    let mut n = 0usize;
    for_each_empty_triangle(s.points(), |_, _, _| n += 1);
    n
}

pub fn for_each_empty_triangle(pts: &[Point], mut emit: impl FnMut(usize, usize, usize)) {
    let mut order: Vec<usize> = (0..pts.len()).collect();
    order.sort_by_key(|&i| (pts[i].x, pts[i].y));
    let mut queues: Vec<VecDeque<usize>> = Vec::new();
    for (rank, &p) in order.iter().enumerate() {
        let mut q: Vec<usize> = order[rank + 1..].to_vec();
        if q.len() < 2 {
            continue;
        }
        let pp = pts[p];
        q.sort_by(|&a, &b| 0.cmp(&det(&pp, &pts[a], &pts[b])));
        queues.clear();
        queues.resize_with(q.len(), VecDeque::new);
        let mut sweep = Sweep { pts, q: &q, queues: &mut queues };
        for i in 0..q.len() - 1 {
            sweep.proceed(i, i + 1, &mut |i, j| emit(p, q[i], q[j]));
        }
    }
}

struct Sweep<'a> {
    pts: &'a [Point],
    q: &'a [usize],
    queues: &'a mut Vec<VecDeque<usize>>,
}

impl Sweep<'_> {
    fn proceed(&mut self, i: usize, j: usize, emit: &mut impl FnMut(usize, usize)) {
        while let Some(&k) = self.queues[i].front() {
            let (pk, pi, pj) = (&self.pts[self.q[k]], &self.pts[self.q[i]], &self.pts[self.q[j]]);
            if det(pk, pi, pj) <= 0 {
                break;
            }
            self.proceed(k, j, emit);
            self.queues[i].pop_front();
        }
        emit(i, j);
        self.queues[j].push_back(i);
    }
}

/// Apexes of the empty triangles on one segment, split by side and color.
#[derive(Default)]
struct EdgeFan {
    left: [Vec<u32>; 2],
    right: [Vec<u32>; 2],
}

fn slot(c: Color) -> usize {
    match c {
        Color::Red => 0,
        Color::Blue => 1,
    }
}

fn edge_fans(s: &BicoloredSet) -> (HashMap<(u32, u32), EdgeFan>, usize) {
    let pts = s.points();
    let mut fans: HashMap<(u32, u32), EdgeFan> = HashMap::new();
    let mut tau = 0usize;
    for_each_empty_triangle(pts, |a, b, c| {
        tau += 1;
        for (u, v, w) in [(a, b, c), (b, c, a), (c, a, b)] {
            let (u, v, on_left) = if u < v { (u, v, true) } else { (v, u, false) };
            let fan = fans.entry((u as u32, v as u32)).or_default();
            let side = if on_left { &mut fan.left } else { &mut fan.right };
            side[slot(pts[w].color)].push(w as u32);
        }
    });
    (fans, tau)
}

/// Balanced pairs (w on the left of u->v, x on the right) sharing segment uv.
fn balanced_pairs(pts: &[Point], u: usize, v: usize, fan: &EdgeFan, mut visit: impl FnMut(usize, usize)) {
    let (cu, cv) = (pts[u].color, pts[v].color);
    let combos: &[(usize, usize)] = if cu == cv {
        if cu == Color::Red {
            &[(1, 1)]
        } else {
            &[(0, 0)]
        }
    } else {
        &[(0, 1), (1, 0)]
    };
    for &(lc, rc) in combos {
        for &w in &fan.left[lc] {
            for &x in &fan.right[rc] {
                visit(w as usize, x as usize);
            }
        }
    }
}

fn quad_is_convex(pts: &[Point], u: usize, v: usize, w: usize, x: usize) -> bool {
    let (pu, pv, pw, px) = (&pts[u], &pts[v], &pts[w], &pts[x]);
    (det(pw, px, pu) > 0) != (det(pw, px, pv) > 0)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct HoleCount {
    pub total: u64,
    pub convex: u64,
    pub empty_triangles: u64,
    /// Balanced empty-triangle pairs sharing an edge; the work done by the count.
    pub pairs: u64,
}

/// Counts balanced 4-holes from pairs of empty triangles sharing an edge. A
/// convex hole arises from both of its diagonals, a non-convex one from its
/// single interior diagonal.
pub fn count_balanced_4holes_detailed(s: &BicoloredSet) -> HoleCount {
    let pts = s.points();
    let (fans, tau) = edge_fans(s);
    let mut convex_pairs = 0u64;
    let mut nonconvex = 0u64;
    for (&(u, v), fan) in &fans {
        let (u, v) = (u as usize, v as usize);
        balanced_pairs(pts, u, v, fan, |w, x| {
            if quad_is_convex(pts, u, v, w, x) {
                convex_pairs += 1;
            } else {
                nonconvex += 1;
            }
        });
    }
    debug_assert!(convex_pairs.is_multiple_of(2));
    HoleCount {
        total: nonconvex + convex_pairs / 2,
        convex: convex_pairs / 2,
        empty_triangles: tau as u64,
        pairs: convex_pairs + nonconvex,
    }
}

pub fn count_balanced_4holes(s: &BicoloredSet) -> u64 {
    count_balanced_4holes_detailed(s).total
}

pub fn enumerate_balanced_4holes(s: &BicoloredSet) -> Vec<HolePolygon> {
    let pts = s.points();
    let (fans, _) = edge_fans(s);
    let mut keys: Vec<&(u32, u32)> = fans.keys().collect();
    keys.sort();
    let mut out = Vec::new();
    #[cfg(debug_assertions)]
    let mut seen: HashMap<Vec<usize>, (bool, usize)> = HashMap::new();
    for key in keys {
        let (u, v) = (key.0 as usize, key.1 as usize);
        balanced_pairs(pts, u, v, &fans[key], |w, x| {
            let convex = quad_is_convex(pts, u, v, w, x);
            let cycle = [u, x, v, w];
            #[cfg(debug_assertions)]
            {
                seen.entry(canonical_cycle(&cycle)).or_insert((convex, 0)).1 += 1;
            }
            if !convex || u.min(v) < w.min(x) {
                out.push(HolePolygon::from_indices(s, &cycle));
            }
        });
    }
    #[cfg(debug_assertions)]
    for (cycle, (convex, times)) in &seen {
        debug_assert_eq!(*times, if *convex { 2 } else { 1 }, "hole {cycle:?} generated {times} times");
    }
    out.sort_by_key(|h| h.canonical());
    out
}

/// Balanced polygon with k red and k blue vertices, for |R| = |B| = n and 1 <= k <= n.
pub fn find_balanced_2khole(s: &BicoloredSet, k: usize) -> Result<HolePolygon> {
    let n = s.red_count();
    if n != s.blue_count() || k < 1 || k > n {
        return Err(Error::Precondition(format!(
            "need |R| = |B| >= k >= 1, got |R| = {}, |B| = {}, k = {k}",
            s.red_count(),
            s.blue_count()
        )));
    }
    let pts = s.points();
    if k == 1 {
        let mut best: Option<(i128, usize, usize)> = None;
        for &r in s.indices(Color::Red) {
            for &b in s.indices(Color::Blue) {
                let dx = (pts[r].x - pts[b].x) as i128;
                let dy = (pts[r].y - pts[b].y) as i128;
                let d = dx * dx + dy * dy;
                if best.is_none_or(|(bd, _, _)| d < bd) {
                    best = Some((d, r, b));
                }
            }
        }
        let (_, r, b) = best.expect("n >= 1");
        return Ok(HolePolygon::from_indices(s, &[r, b]));
    }
    let hull = s.hull();
    if hull.len() == pts.len() {
        let m = hull.len();
        let w: Vec<i64> = hull.iter().map(|&i| pts[i].color.weight()).collect();
        let mut sum: i64 = (0..2 * k).map(|j| w[j % m]).sum();
        for start in 0..m {
            if sum == 0 {
                let cycle: Vec<usize> = (0..2 * k).map(|j| hull[(start + j) % m]).collect();
                return Ok(HolePolygon::from_indices(s, &cycle));
            }
            sum += w[(start + 2 * k) % m] - w[start];
        }
        unreachable!("a zero-sum window exists for balanced convex position");
    }
    let on_hull: std::collections::HashSet<usize> = hull.iter().copied().collect();
    let interior = |c: Color| (0..pts.len()).find(|i| !on_hull.contains(i) && pts[*i].color == c);
    let (u, target) = match interior(Color::Blue) {
        Some(u) => (u, 1),
        None => (interior(Color::Red).expect("some point is interior"), -1),
    };
    let pu = pts[u];
    let mut around: Vec<usize> = (0..pts.len()).filter(|&i| i != u).collect();
    // clockwise from the positive x direction
    let lower = |p: &Point| p.y < pu.y || (p.y == pu.y && p.x > pu.x);
    around.sort_by(|&a, &b| {
        let (pa, pb) = (&pts[a], &pts[b]);
        lower(pb).cmp(&lower(pa)).then_with(|| 0.cmp(&det(&pu, pb, pa)))
    });
    let m = around.len();
    let width = 2 * k - 1;
    let w: Vec<i64> = around.iter().map(|&i| pts[i].color.weight()).collect();
    let mut sum: i64 = (0..width).map(|j| w[j % m]).sum();
    for start in 0..m {
        if sum == target {
            let mut cycle = vec![u];
            cycle.extend((0..width).map(|j| around[(start + j) % m]));
            return Ok(HolePolygon::from_indices(s, &cycle));
        }
        sum += w[(start + width) % m] - w[start];
    }
    unreachable!("a window with the required sum exists")
}

/// r·b − r·min(⌊(r−1)/3⌋, b) − b·min(⌊(b−1)/3⌋, r) − (r+b), as printed; may be negative.
pub fn general_lower_bound(r: i64, b: i64) -> i64 {
    let third = |x: i64| (x - 1).div_euclid(3);
    r * b - r * third(r).min(b) - b * third(b).min(r) - (r + b)
}

/// ⌈(n² − 4n)/12⌉, the bound for every balanced set of n red and n blue points.
pub fn quadratic_lower_bound(n: i64) -> i64 {
    ceil_div(n * n - 4 * n, 12)
}

/// ⌈(2n² + 3n − 8)/12⌉, the bound when the two colors are linearly separable.
pub fn separable_lower_bound(n: i64) -> i64 {
    ceil_div(2 * n * n + 3 * n - 8, 12)
}

fn ceil_div(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::oracle;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn set(text: &str) -> BicoloredSet {
        BicoloredSet::parse(text).unwrap()
    }

    pub(crate) fn random_set(rng: &mut ChaCha8Rng, r: usize, b: usize, range: i64) -> BicoloredSet {
        loop {
            let mut pts = Vec::new();
            for i in 0..r + b {
                let c = if i < r { Color::Red } else { Color::Blue };
                pts.push(Point::new(rng.gen_range(-range..=range), rng.gen_range(-range..=range), c));
            }
            if let Ok(s) = BicoloredSet::new(pts) {
                return s;
            }
        }
    }

    #[test]
    fn empty_triangles_match_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let n = rng.gen_range(3..10);
            let s = random_set(&mut rng, n / 2, n - n / 2, 20);
            let mut fast: Vec<[usize; 3]> = enumerate_empty_triangles(&s)
                .iter()
                .map(|t| {
                    assert!(det(&s.point(t.a), &s.point(t.b), &s.point(t.c)) > 0);
                    let mut v = [t.a, t.b, t.c];
                    v.sort();
                    v
                })
                .collect();
            fast.sort();
            let slow = oracle::empty_triangles(&s);
            assert_eq!(fast, slow);
        }
    }

    #[test]
    fn empty_triangle_examples() {
        assert_eq!(count_empty_triangles(&set("0 0 R\n1 0 B\n0 1 R\n")), 1);
        assert_eq!(count_empty_triangles(&set("0 0 R\n4 0 B\n4 4 R\n0 4 B\n")), 4);
    }

    #[test]
    fn four_point_examples() {
        let convex = set("0 0 R\n4 0 B\n4 4 R\n0 4 B\n");
        assert_eq!(count_balanced_4holes(&convex), 1);
        let holes = enumerate_balanced_4holes(&convex);
        assert_eq!(holes.len(), 1);
        assert!(holes[0].is_convex);
        let inner = set("0 0 R\n8 0 R\n0 8 B\n2 2 B\n");
        assert_eq!(count_balanced_4holes(&inner), 3);
        assert!(enumerate_balanced_4holes(&inner).iter().all(|h| !h.is_convex));
    }

    #[test]
    fn enumeration_matches_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let r = rng.gen_range(2..7);
            let b = rng.gen_range(2..7);
            let s = random_set(&mut rng, r, b, 30);
            let fast: Vec<Vec<usize>> = enumerate_balanced_4holes(&s).iter().map(|h| h.canonical()).collect();
            let slow = oracle::balanced_4holes(&s).unwrap();
            assert_eq!(fast, slow);
            assert_eq!(count_balanced_4holes(&s) as usize, slow.len());
        }
    }

    #[test]
    fn emptiness_examples() {
        let s = set("0 0 R\n4 0 B\n4 4 R\n0 4 B\n2 1 R\n");
        let quad: Vec<Point> = (0..4).map(|i| s.point(i)).collect();
        assert_eq!(is_empty_polygon(&s, &quad), Ok(false));
        let s4 = set("0 0 R\n4 0 B\n4 4 R\n0 4 B\n");
        assert_eq!(is_empty_polygon(&s4, &quad), Ok(true));
        let bow = [s.point(0), s.point(2), s.point(1), s.point(3)];
        assert_eq!(is_empty_polygon(&s, &bow), Err(Error::NotSimple));
    }

    #[test]
    fn two_k_hole_examples() {
        let s = set("0 0 R\n4 0 B\n4 4 R\n0 4 B\n");
        let seg = find_balanced_2khole(&s, 1).unwrap();
        assert!(seg.is_segment);
        assert_eq!(seg.red_vertex_count, 1);
        let h = find_balanced_2khole(&s, 2).unwrap();
        assert!(h.is_balanced_4hole());
        assert_eq!(is_empty_polygon(&s, &h.vertices), Ok(true));
    }

    #[test]
    fn two_k_hole_alternating_convex_is_hull() {
        let s = set("10 0 R\n7 7 B\n0 10 R\n-7 7 B\n-10 0 R\n-7 -7 B\n0 -10 R\n7 -7 B\n");
        let h = find_balanced_2khole(&s, 4).unwrap();
        assert_eq!(h.vertices.len(), 8);
        assert!(h.is_convex);
    }

    #[test]
    fn two_k_holes_valid_on_random_sets() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let n = rng.gen_range(1..8);
            let s = random_set(&mut rng, n, n, 25);
            for k in 1..=n {
                let h = find_balanced_2khole(&s, k).unwrap();
                assert_eq!(h.red_vertex_count, k);
                assert_eq!(h.blue_vertex_count, k);
                assert_eq!(is_empty_polygon(&s, &h.vertices), Ok(true));
            }
        }
    }

    #[test]
    fn lower_bound_formula() {
        assert_eq!(general_lower_bound(10, 10), 20);
        assert_eq!(general_lower_bound(4, 4), 0);
        // b·min(⌊(b−1)/3⌋, r) vanishes for b = 2
        assert_eq!(general_lower_bound(10, 2), -12);
        assert_eq!(quadratic_lower_bound(4), 0);
        assert_eq!(quadratic_lower_bound(5), 1);
        assert_eq!(separable_lower_bound(2), 1);
    }
}
