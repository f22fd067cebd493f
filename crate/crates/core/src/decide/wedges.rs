//! Condition C2 over the reduced wedge family.
//!
//! Each candidate is a wedge W(b,u,v) where bz is an edge of the other
//! class hull and uv is the edge of the own hull where the ray b->z enters
//! it. The question is whether some own point lies in one of the wedges.
//!
//! When the own class is in convex position its points are hull vertices
//! and the wedge query is a binary search on the far chain seen from b.
//! Otherwise the other class is convex, and the wedges whose apex has z as
//! its clockwise (resp. counter-clockwise) neighbour meet the own hull in
//! pairwise disjoint regions; each group is handled by a sweep away from the
//! other class that locates every own point between the wedge rays.

use super::separable::{c2_edge_wedges, C2Data};
use crate::geometry::{det, first_false, tangents, Color, Point, Wedge};
use crate::pointset::BicoloredSet;

/// Candidate wedge: own hull edge (u, v), apex b and its hull neighbour z.
#[derive(Clone, Copy, Debug)]
struct Cand {
    u: usize,
    v: usize,
    b: usize,
    z: usize,
}

fn is_convex_class(s: &BicoloredSet, c: Color) -> bool {
    s.color_hull(c).len() == s.indices(c).len()
}

/// Decides C2 for separable sets in which neither C1 nor the crossed-segment
/// condition holds. Falls back to the direct wedge scan when neither class
/// is in convex position, a case the decision never reaches.
pub fn separable_check_c2(s: &BicoloredSet) -> Option<C2Data> {
    for own in [Color::Red, Color::Blue] {
        let found = if is_convex_class(s, own) {
            convex_pass(s, own)
        } else if is_convex_class(s, own.other()) {
            sweep_pass(s, own)
        } else {
            return super::separable::separable_check_c2_scan(s);
        };
        if found.is_some() {
            return found;
        }
    }
    None
}

fn candidates(s: &BicoloredSet, own: Color) -> Vec<Cand> {
    c2_edge_wedges(s, own).into_iter().map(|(u, v, b, z)| Cand { u, v, b, z }).collect()
}

fn data(own: Color, c: &Cand, r: usize) -> C2Data {
    C2Data { own, u: c.u, v: c.v, b: c.b, z: c.z, r }
}

/// Own class in convex position: the own points inside W(b,u,v) are the
/// vertices of the far chain seen from b that lie between the two rays.
fn convex_pass(s: &BicoloredSet, own: Color) -> Option<C2Data> {
    let idx = s.color_hull(own);
    let poly = s.color_hull_points(own);
    let m = poly.len();
    if m < 3 {
        return None;
    }
    for c in candidates(s, own) {
        let (b, u, v) = (s.point(c.b), s.point(c.u), s.point(c.v));
        let (lo, hi) = tangents(&poly, &b);
        let len = (hi + m - lo) % m;
        if len < 2 {
            continue;
        }
        let at = |t: usize| (lo + 1 + t) % m;
        let s_uv = det(&b, &u, &v).signum();
        let first = |t: usize| det(&b, &u, &poly[at(t)]).signum() == s_uv;
        let second = |t: usize| det(&b, &v, &poly[at(t)]).signum() == -s_uv;
        let (a0, a1) = run(len - 1, first);
        let (b0, b1) = run(len - 1, second);
        let (x0, x1) = (a0.max(b0), a1.min(b1));
        if x0 < x1 {
            return Some(data(own, &c, idx[at(x0)]));
        }
    }
    None
}

/// Interval of a predicate that holds on a prefix or a suffix of 0..len.
fn run(len: usize, pred: impl Fn(usize) -> bool) -> (usize, usize) {
    if len == 0 {
        (0, 0)
    } else if pred(0) {
        (0, first_false(0, len, &pred))
    } else if pred(len - 1) {
        (first_false(0, len, |t| !pred(t)), len)
    } else {
        (0, 0)
    }
}

/// A hull edge (p, q) with every point of `far` strictly to its right,
/// taken from either hull. O(h) by rotating the extreme-vertex pointer.
fn separating_edge(near: &[Point], far: &[Point]) -> Option<(Point, Point)> {
    let (h, m) = (near.len(), far.len());
    if h < 2 || m == 0 {
        return None;
    }
    let f = |i: usize, k: usize| det(&near[i % h], &near[(i + 1) % h], &far[k % m]);
    let mut j = (0..m).max_by_key(|&k| f(0, k)).unwrap_or(0);
    for i in 0..h {
        let mut steps = 0;
        while steps < m && f(i, j + 1) > f(i, j) {
            j = (j + 1) % m;
            steps += 1;
        }
        let mut steps = 0;
        while steps < m && f(i, j + m - 1) > f(i, j) {
            j = (j + m - 1) % m;
            steps += 1;
        }
        if f(i, j) < 0 {
            return Some((near[i], near[(i + 1) % h]));
        }
    }
    None
}

/// Own class not convex, other class convex. Wedges split by the side of b
/// on which z lies; each group is swept separately.
fn sweep_pass(s: &BicoloredSet, own: Color) -> Option<C2Data> {
    let other = own.other();
    let oh = s.color_hull(other);
    let k = oh.len();
    let mut pos = vec![usize::MAX; s.len()];
    for (i, &x) in oh.iter().enumerate() {
        pos[x] = i;
    }
    let own_pts = s.color_hull_points(own);
    let oth_pts = s.color_hull_points(other);
    // level grows away from the other class
    let level: Box<dyn Fn(&Point) -> i128> = if let Some((p, q)) = separating_edge(&own_pts, &oth_pts) {
        Box::new(move |x| det(&p, &q, x))
    } else if let Some((p, q)) = separating_edge(&oth_pts, &own_pts) {
        Box::new(move |x| -det(&p, &q, x))
    } else {
        return None;
    };
    let mut groups: [Vec<Cand>; 2] = [Vec::new(), Vec::new()];
    for c in candidates(s, own) {
        let (pb, pz) = (pos[c.b], pos[c.z]);
        let away = if k < 3 { c.b } else if (pb + 1) % k == pz { oh[(pz + 1) % k] } else { oh[(pz + k - 1) % k] };
        let wedge = Wedge::new(s.point(c.b), s.point(c.u), s.point(c.v));
        // the hull neighbour of z beyond it must stay out of Δuvb
        if away != c.b && wedge.contains(&s.point(away)) {
            continue;
        }
        let clockwise = k >= 3 && (pz + 1) % k == pb;
        groups[clockwise as usize].push(c);
    }
    groups.iter().find_map(|g| sweep_group(s, own, g, &*level))
}

/// A ray starting at an own hull vertex and pointing away from the apex.
#[derive(Clone, Copy)]
struct Ray {
    apex: Point,
    start: Point,
    wedge: usize,
}

impl Ray {
    /// Whether `p` lies strictly to the right of the ray's supporting line,
    /// seen along its direction.
    fn has_on_right(&self, p: &Point) -> bool {
        det(&self.apex, &self.start, p) < 0
    }

    /// Whether `other`, starting at or after this ray's level, runs to its right.
    fn precedes(&self, other: &Ray) -> bool {
        if self.start.same_place(&other.start) {
            det(&self.start, &self.apex, &other.apex) < 0
        } else {
            self.has_on_right(&other.start)
        }
    }
}

/// Sweep over one group of pairwise disjoint wedge regions. Rays are kept
/// ordered left to right; a ray that has left the hull stays outside on its
/// side and never disturbs the order seen from points inside. An own point
/// inside a region is adjacent to one of the region's rays unless both rays
/// have already left the hull, in which case the region holds the own point
/// of largest level.
fn sweep_group(s: &BicoloredSet, own: Color, group: &[Cand], level: &dyn Fn(&Point) -> i128) -> Option<C2Data> {
    if group.is_empty() {
        return None;
    }
    let wedge = |c: &Cand| Wedge::new(s.point(c.b), s.point(c.u), s.point(c.v));
    let hit = |w: usize, r: usize| wedge(&group[w]).contains(&s.point(r)).then(|| data(own, &group[w], r));
    let own_idx = s.indices(own);
    let deepest = *own_idx.iter().max_by_key(|&&i| level(&s.point(i)))?;
    if let Some(d) = (0..group.len()).find_map(|w| hit(w, deepest)) {
        return Some(d);
    }
    let mut rays = Vec::with_capacity(2 * group.len());
    for (w, c) in group.iter().enumerate() {
        for start in [c.u, c.v] {
            rays.push(Ray { apex: s.point(c.b), start: s.point(start), wedge: w });
        }
    }
    // (level, 0 = insert ray / 1 = query point, index)
    let mut events: Vec<(i128, u8, usize)> = rays.iter().enumerate().map(|(i, r)| (level(&r.start), 0, i)).collect();
    events.extend(own_idx.iter().map(|&i| (level(&s.point(i)), 1, i)));
    events.sort_unstable();
    let mut order = Treap::default();
    for (_, kind, i) in events {
        if kind == 0 {
            let new = rays[i];
            order.insert(i, |e| rays[e].precedes(&new));
        } else {
            let p = s.point(i);
            let (left, right) = order.neighbours(|e| rays[e].has_on_right(&p));
            for e in [left, right].into_iter().flatten() {
                if let Some(d) = hit(rays[e].wedge, i) {
                    return Some(d);
                }
            }
        }
    }
    None
}

/// Ordered sequence with comparator-driven search, as a treap over an arena.
#[derive(Default)]
struct Treap {
    item: Vec<usize>,
    prio: Vec<u64>,
    kids: Vec<[Option<usize>; 2]>,
    root: Option<usize>,
}

impl Treap {
    fn priority(n: usize) -> u64 {
        let mut z = (n as u64).wrapping_add(0x9E37_79B9_7F4A_7C15);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Splits into the prefix where `before` holds and the rest.
    fn split(&mut self, t: Option<usize>, before: &dyn Fn(usize) -> bool) -> (Option<usize>, Option<usize>) {
        let Some(n) = t else { return (None, None) };
        if before(self.item[n]) {
            let (l, r) = self.split(self.kids[n][1], before);
            self.kids[n][1] = l;
            (Some(n), r)
        } else {
            let (l, r) = self.split(self.kids[n][0], before);
            self.kids[n][0] = r;
            (l, Some(n))
        }
    }

    fn merge(&mut self, a: Option<usize>, b: Option<usize>) -> Option<usize> {
        match (a, b) {
            (None, x) | (x, None) => x,
            (Some(x), Some(y)) => {
                if self.prio[x] > self.prio[y] {
                    self.kids[x][1] = self.merge(self.kids[x][1], Some(y));
                    Some(x)
                } else {
                    self.kids[y][0] = self.merge(Some(x), self.kids[y][0]);
                    Some(y)
                }
            }
        }
    }

    /// Inserts `item` after the prefix of items for which `before` holds.
    fn insert(&mut self, item: usize, before: impl Fn(usize) -> bool) {
        let n = self.item.len();
        self.item.push(item);
        self.prio.push(Self::priority(n));
        self.kids.push([None, None]);
        let (l, r) = self.split(self.root, &before);
        let l = self.merge(l, Some(n));
        self.root = self.merge(l, r);
    }

    /// Last item where `before` holds and first item where it fails.
    fn neighbours(&self, before: impl Fn(usize) -> bool) -> (Option<usize>, Option<usize>) {
        let (mut last, mut first) = (None, None);
        let mut t = self.root;
        while let Some(n) = t {
            if before(self.item[n]) {
                last = Some(self.item[n]);
                t = self.kids[n][1];
            } else {
                first = Some(self.item[n]);
                t = self.kids[n][0];
            }
        }
        (last, first)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decide::tests::random_separable_n;
    use crate::decide::{decide_balanced_convex_4hole, Stage};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn scan_own(s: &BicoloredSet, own: Color) -> bool {
        candidates(s, own).iter().any(|c| {
            let w = Wedge::new(s.point(c.b), s.point(c.u), s.point(c.v));
            s.indices(own).iter().any(|&r| w.contains(&s.point(r)))
        })
    }

    #[test]
    fn passes_agree_with_scan_where_the_decision_needs_them() {
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        let (mut swept, mut convex) = (0, 0);
        for _ in 0..40000 {
            let n = rng.gen_range(6..30);
            let Some(s) = random_separable_n(&mut rng, 200, n) else { continue };
            if decide_balanced_convex_4hole(&s).stage != Stage::WedgeScan {
                continue;
            }
            for own in [Color::Red, Color::Blue] {
                let got = if is_convex_class(&s, own) {
                    convex += 1;
                    convex_pass(&s, own)
                } else {
                    swept += 1;
                    sweep_pass(&s, own)
                };
                assert_eq!(got.is_some(), scan_own(&s, own), "{own}\n{}", s.to_text());
            }
        }
        assert!(swept > 100 && convex > 100, "{swept} {convex}");
    }

    #[test]
    fn treap_keeps_order() {
        let mut t = Treap::default();
        let keys = [5, 1, 9, 3, 7, 2, 8];
        for (i, &k) in keys.iter().enumerate() {
            t.insert(i, |e| keys[e] < k);
        }
        assert_eq!(t.neighbours(|e| keys[e] < 6), (Some(0), Some(4)));
        assert_eq!(t.neighbours(|e| keys[e] < 0), (None, Some(1)));
        assert_eq!(t.neighbours(|e| keys[e] < 10), (Some(2), None));
    }
}
