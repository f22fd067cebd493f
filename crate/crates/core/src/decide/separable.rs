//! The four-step decision for linearly separable color classes.

use crate::geometry::{det, first_false, in_triangle, segments_cross, tangents, Color, Point, Wedge};
use crate::pointset::BicoloredSet;

/// A red point and a blue point whose connecting segment properly crosses an
/// edge of each class hull.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrossedPair {
    pub red: usize,
    pub blue: usize,
}

/// Data for condition C2: hull edge uv of CH(own), points b, z of the other
/// color with z in Δuvb, no point of `own` in Δuvb, and `r` of `own` in W(b,u,v).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct C2Data {
    pub own: Color,
    pub u: usize,
    pub v: usize,
    pub b: usize,
    pub z: usize,
    pub r: usize,
}

/// A red hull edge and a blue hull edge that see each other.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct C1Data {
    pub red_edge: (usize, usize),
    pub blue_edge: (usize, usize),
}

fn hull_of(s: &BicoloredSet, c: Color) -> (Vec<usize>, Vec<Point>) {
    let idx = s.color_hull(c).to_vec();
    let pts = idx.iter().map(|&i| s.point(i)).collect();
    (idx, pts)
}

/// A point of color `c` for which every segment to the other color crosses
/// the boundary of CH(c): an interior point of CH(c), or a vertex of CH(S)
/// whose two neighbours on CH(S) also have color `c`.
fn step1_point(s: &BicoloredSet, c: Color) -> Option<usize> {
    let on_hull = s.color_hull(c);
    if on_hull.len() < s.indices(c).len() {
        let mut mark = vec![false; s.len()];
        for &i in on_hull {
            mark[i] = true;
        }
        return s.indices(c).iter().copied().find(|&i| !mark[i]);
    }
    let h = s.hull();
    let n = h.len();
    (0..n).map(|k| h[k]).enumerate().find_map(|(k, i)| {
        let prev = h[(k + n - 1) % n];
        let next = h[(k + 1) % n];
        let col = |j: usize| s.point(j).color;
        (n >= 3 && col(i) == c && col(prev) == c && col(next) == c).then_some(i)
    })
}

/// Step 1: both classes either have interior points or at least three
/// vertices on CH(S). Returns the pair certifying the crossed-segment lemma.
pub fn step1_pair(s: &BicoloredSet) -> Option<CrossedPair> {
    let red = step1_point(s, Color::Red)?;
    let blue = step1_point(s, Color::Blue)?;
    Some(CrossedPair { red, blue })
}

pub fn separable_step1_interior(s: &BicoloredSet) -> bool {
    step1_pair(s).is_some()
}

/// The color class that fails the step-1 condition, which is then in convex position.
pub fn step1_convex_color(s: &BicoloredSet) -> Option<Color> {
    if step1_point(s, Color::Blue).is_none() {
        Some(Color::Blue)
    } else if step1_point(s, Color::Red).is_none() {
        Some(Color::Red)
    } else {
        None
    }
}

/// Interval [a, b) of chain positions where `pred` holds, given that the true
/// set is a prefix or a suffix of 0..len.
fn run_of(len: usize, pred: impl Fn(usize) -> bool) -> (usize, usize) {
    if len == 0 {
        return (0, 0);
    }
    if pred(0) {
        (0, first_false(0, len, &pred))
    } else if pred(len - 1) {
        (first_false(0, len, |k| !pred(k)), len)
    } else {
        (0, 0)
    }
}

/// Step 2, with `convex` in convex position: for each point r of the other
/// color, tangents from r to CH(convex) delimit the far chain; r succeeds if
/// it is interior to its hull and the chain is non-empty, or if some chain
/// vertex lies in the interior angle of its hull at r. O(log n) per point.
pub fn step2_tangent_scan(s: &BicoloredSet, convex: Color) -> Option<CrossedPair> {
    let (poly_idx, poly) = hull_of(s, convex);
    let m = poly.len();
    if m < 3 || m != s.indices(convex).len() {
        return None;
    }
    let other = convex.other();
    let (own_idx, own) = hull_of(s, other);
    let h = own.len();
    let mut pos = vec![usize::MAX; s.len()];
    for (k, &i) in own_idx.iter().enumerate() {
        pos[i] = k;
    }
    let pair = |r: usize, b: usize| match other {
        Color::Red => CrossedPair { red: r, blue: b },
        Color::Blue => CrossedPair { red: b, blue: r },
    };
    for &ri in s.indices(other) {
        let r = s.point(ri);
        let (lo, hi) = tangents(&poly, &r);
        let len = (hi + m - lo) % m;
        if len < 2 {
            continue;
        }
        let len = len - 1;
        let at = |k: usize| (lo + 1 + k) % m;
        if pos[ri] == usize::MAX {
            return Some(pair(ri, poly_idx[at(0)]));
        }
        if h < 3 {
            continue;
        }
        let k = pos[ri];
        let prev = own[(k + h - 1) % h];
        let next = own[(k + 1) % h];
        let (a0, a1) = run_of(len, |t| det(&r, &next, &poly[at(t)]) > 0);
        let (b0, b1) = run_of(len, |t| det(&r, &prev, &poly[at(t)]) < 0);
        let (x0, x1) = (a0.max(b0), a1.min(b1));
        if x0 < x1 {
            return Some(pair(ri, poly_idx[at(x0)]));
        }
    }
    None
}

/// Step 2 entry point: picks the convex class from step 1.
pub fn separable_step2_tangent_scan(s: &BicoloredSet) -> bool {
    match step1_convex_color(s) {
        Some(c) => step2_tangent_scan(s, c).is_some(),
        None => step1_pair(s).is_some(),
    }
}

/// Cyclic run of `len` positions starting at `start` on Z_m.
#[derive(Clone, Copy, Debug)]
struct Arc {
    start: usize,
    len: usize,
}

impl Arc {
    fn contains(&self, x: usize, m: usize) -> bool {
        (x + m - self.start) % m < self.len
    }
}

/// A position shared by all arcs. A non-empty intersection of arcs always
/// contains the start of one of them.
fn arcs_meet(arcs: &[Arc], m: usize) -> Option<usize> {
    let mut candidates: Vec<usize> = arcs.iter().filter(|a| a.len < m).map(|a| a.start).collect();
    if candidates.is_empty() {
        candidates.push(0);
    }
    candidates.into_iter().find(|&c| arcs.iter().all(|a| a.contains(c, m)))
}

fn see_each_other(u: &Point, v: &Point, w: &Point, z: &Point) -> bool {
    det(u, v, w) < 0 && det(u, v, z) < 0 && det(w, z, u) < 0 && det(w, z, v) < 0
}

fn c1_brute(p_idx: &[usize], p: &[Point], q_idx: &[usize], q: &[Point], swap: bool) -> Option<C1Data> {
    for (i, j) in crate::geometry::hull_edges(p.len()) {
        for (k, l) in crate::geometry::hull_edges(q.len()) {
            if see_each_other(&p[i], &p[j], &q[k], &q[l]) {
                let (e, f) = ((p_idx[i], p_idx[j]), (q_idx[k], q_idx[l]));
                return Some(if swap { C1Data { red_edge: f, blue_edge: e } } else { C1Data { red_edge: e, blue_edge: f } });
            }
        }
    }
    None
}

/// Step 3: a red hull edge and a blue hull edge that see each other.
///
/// For each edge uv of CH(R), the blue edges that see it are the edges
/// visible from both u and v whose endpoints both lie beyond ℓ(u,v). Each of
/// the three sets is a cyclic run of CH(B) edges: visibility runs come from
/// tangents, and the run beyond ℓ(u,v) from the extreme vertices in the
/// normal direction, tracked by rotating pointers. O(h_R log h_B + h_B).
pub fn separable_check_c1(s: &BicoloredSet) -> Option<C1Data> {
    let (p_idx, p) = hull_of(s, Color::Red);
    let (q_idx, q) = hull_of(s, Color::Blue);
    if p.len() < 2 || q.len() < 2 {
        return None;
    }
    if q.len() == 2 {
        return c1_brute(&p_idx, &p, &q_idx, &q, false);
    }
    if p.len() == 2 {
        return c1_brute(&q_idx, &q, &p_idx, &p, true);
    }
    let (h, m) = (p.len(), q.len());
    let vis: Vec<Arc> = p
        .iter()
        .map(|u| {
            let (lo, hi) = tangents(&q, u);
            Arc { start: hi, len: (lo + m - hi) % m }
        })
        .collect();
    let f = |a: &Point, b: &Point, k: usize| det(a, b, &q[k % m]);
    let (mut jmin, mut jmax) = (0usize, 0usize);
    for k in 0..m {
        if f(&p[0], &p[1], k) < f(&p[0], &p[1], jmin) {
            jmin = k;
        }
        if f(&p[0], &p[1], k) > f(&p[0], &p[1], jmax) {
            jmax = k;
        }
    }
    for i in 0..h {
        let (u, v) = (&p[i], &p[(i + 1) % h]);
        let mut steps = 0;
        while steps < m && f(u, v, jmin + 1) < f(u, v, jmin) {
            jmin = (jmin + 1) % m;
            steps += 1;
        }
        steps = 0;
        while steps < m && f(u, v, jmax + 1) > f(u, v, jmax) {
            jmax = (jmax + 1) % m;
            steps += 1;
        }
        if f(u, v, jmin) >= 0 {
            continue;
        }
        let beyond = if f(u, v, jmax) < 0 {
            Arc { start: 0, len: m }
        } else {
            let up = (jmax + m - jmin) % m;
            let last = first_false(0, up + 1, |t| f(u, v, jmin + t) < 0) - 1;
            let down = (jmin + m - jmax) % m;
            let first = first_false(0, down + 1, |t| f(u, v, jmin + m - t) < 0) - 1;
            Arc { start: (jmin + m - first) % m, len: first + last }
        };
        let arcs = [vis[i], vis[(i + 1) % h], beyond];
        if let Some(k) = arcs_meet(&arcs, m) {
            return Some(C1Data {
                red_edge: (p_idx[i], p_idx[(i + 1) % h]),
                blue_edge: (q_idx[k], q_idx[(k + 1) % m]),
            });
        }
    }
    None
}

/// Edge of the CCW polygon `poly` through which the ray from `b` towards `z`
/// enters it, as positions (u, v) with b strictly right of u->v, provided
/// the ray meets it after passing z. O(log n).
pub fn entry_edge(poly: &[Point], b: &Point, z: &Point) -> Option<(usize, usize)> {
    let m = poly.len();
    let (u, v) = match m {
        0 | 1 => return None,
        2 => {
            if det(&poly[0], &poly[1], b) < 0 {
                (0, 1)
            } else {
                (1, 0)
            }
        }
        _ => {
            let (lo, hi) = tangents(poly, b);
            if det(b, z, &poly[hi]) <= 0 || det(b, z, &poly[lo]) >= 0 {
                return None;
            }
            // vertices hi, hi+1, .., lo face b, with decreasing angle seen from b
            let len = (lo + m - hi) % m;
            let t = first_false(1, len + 1, |t| det(b, z, &poly[(hi + t) % m]) > 0);
            ((hi + t - 1) % m, (hi + t) % m)
        }
    };
    in_triangle(*z, poly[u], poly[v], *b).then_some((u, v))
}

/// Candidate C2 configurations with bz a hull edge of the other color and uv
/// the edge of CH(own) where the ray b->z enters it.
pub fn c2_edge_wedges(s: &BicoloredSet, own: Color) -> Vec<(usize, usize, usize, usize)> {
    let (own_idx, own_hull) = hull_of(s, own);
    let (oth_idx, _) = hull_of(s, own.other());
    let k = oth_idx.len();
    let mut directed = Vec::new();
    match k {
        0 | 1 => {}
        2 => directed.extend([(0, 1), (1, 0)]),
        _ => {
            for i in 0..k {
                directed.push((i, (i + 1) % k));
                directed.push(((i + 1) % k, i));
            }
        }
    }
    let mut out = Vec::new();
    for (i, j) in directed {
        let (b, z) = (oth_idx[i], oth_idx[j]);
        if let Some((u, v)) = entry_edge(&own_hull, &s.point(b), &s.point(z)) {
            out.push((own_idx[u], own_idx[v], b, z));
        }
    }
    out
}

/// Step 4, reference form: every candidate wedge is scanned against every
/// point of its color. O(h·n).
pub fn separable_check_c2_scan(s: &BicoloredSet) -> Option<C2Data> {
    for own in [Color::Red, Color::Blue] {
        let members = s.colored(own);
        let idx = s.indices(own);
        for (u, v, b, z) in c2_edge_wedges(s, own) {
            let w = Wedge::new(s.point(b), s.point(u), s.point(v));
            if let Some(k) = members.iter().position(|p| w.contains(p)) {
                return Some(C2Data { own, u, v, b, z, r: idx[k] });
            }
        }
    }
    None
}

/// The conclusion of the crossed-segment lemma for a concrete pair: C1 for
/// the two crossed hull edges, or a C2 configuration read off from them.
pub fn crossed_pair_conclusion(s: &BicoloredSet, pair: CrossedPair) -> Option<Result<C1Data, C2Data>> {
    let (r, b) = (s.point(pair.red), s.point(pair.blue));
    let crossed = |c: Color| {
        let h = s.color_hull(c);
        crate::geometry::hull_edges(h.len())
            .into_iter()
            .map(|(i, j)| (h[i], h[j]))
            .find(|&(i, j)| segments_cross(r, b, s.point(i), s.point(j)))
    };
    let (u, v) = crossed(Color::Red)?;
    let (w, z) = crossed(Color::Blue)?;
    let p = |i: usize| s.point(i);
    // orient both edges so that the far class lies on their right
    let (u, v) = if det(&p(u), &p(v), &b) < 0 { (u, v) } else { (v, u) };
    let (w, z) = if det(&p(w), &p(z), &r) < 0 { (w, z) } else { (z, w) };
    if see_each_other(&p(u), &p(v), &p(w), &p(z)) {
        return Some(Ok(C1Data { red_edge: (u, v), blue_edge: (w, z) }));
    }
    let candidates = [
        (Color::Red, u, v, pair.blue, w, pair.red),
        (Color::Red, u, v, pair.blue, z, pair.red),
        (Color::Blue, w, z, pair.red, u, pair.blue),
        (Color::Blue, w, z, pair.red, v, pair.blue),
    ];
    candidates
        .into_iter()
        .map(|(own, u, v, b, z, r)| C2Data { own, u, v, b, z, r })
        .find(|d| c2_holds_for(s, d))
        .map(Err)
}

/// Checks the C2 predicate for concrete data, scanning the own color once.
pub fn c2_holds_for(s: &BicoloredSet, d: &C2Data) -> bool {
    let (u, v, b, z, r) = (s.point(d.u), s.point(d.v), s.point(d.b), s.point(d.z), s.point(d.r));
    u.color == d.own
        && v.color == d.own
        && r.color == d.own
        && b.color != d.own
        && z.color != d.own
        && in_triangle(z, u, v, b)
        && Wedge::new(b, u, v).contains(&r)
        && !s.colored(d.own).iter().any(|x| in_triangle(*x, u, v, b))
}
