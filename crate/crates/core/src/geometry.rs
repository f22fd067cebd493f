//! Exact predicates on integer-grid points.
//!
//! Every point set is scaled onto a common integer grid when parsed, so all
//! predicates reduce to the sign of a 2x2 determinant evaluated in `i128`.

use std::fmt;

use crate::error::{Error, Result};

/// Largest admissible absolute coordinate. Keeps every determinant inside `i128`.
pub const COORD_LIMIT: i64 = 1 << 61;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }

    /// Signed weight: red +1, blue -1.
    pub fn weight(self) -> i64 {
        match self {
            Color::Red => 1,
            Color::Blue => -1,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Color::Red => 'R',
            Color::Blue => 'B',
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: i64,
    pub y: i64,
    pub color: Color,
}

impl Point {
    pub const fn new(x: i64, y: i64, color: Color) -> Point {
        Point { x, y, color }
    }

    pub const fn red(x: i64, y: i64) -> Point {
        Point::new(x, y, Color::Red)
    }

    pub const fn blue(x: i64, y: i64) -> Point {
        Point::new(x, y, Color::Blue)
    }

    pub fn same_place(&self, other: &Point) -> bool {
        self.x == other.x && self.y == other.y
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Ccw,
    Cw,
}

/// Twice the signed area of triangle abc.
#[inline]
pub fn det(a: &Point, b: &Point, c: &Point) -> i128 {
    let abx = b.x as i128 - a.x as i128;
    let aby = b.y as i128 - a.y as i128;
    let acx = c.x as i128 - a.x as i128;
    let acy = c.y as i128 - a.y as i128;
    abx * acy - aby * acx
}

#[inline]
pub fn left(a: &Point, b: &Point, c: &Point) -> bool {
    det(a, b, c) > 0
}

#[inline]
pub fn right(a: &Point, b: &Point, c: &Point) -> bool {
    det(a, b, c) < 0
}

pub fn orient(a: Point, b: Point, c: Point) -> Result<Orientation> {
    match det(&a, &b, &c) {
        d if d > 0 => Ok(Orientation::Ccw),
        d if d < 0 => Ok(Orientation::Cw),
        _ => Err(Error::CollinearInput(a, b, c)),
    }
}

/// Proper crossing of the open segments pq and rs.
pub fn segments_cross(p: Point, q: Point, r: Point, s: Point) -> bool {
    let d1 = det(&p, &q, &r).signum();
    let d2 = det(&p, &q, &s).signum();
    let d3 = det(&r, &s, &p).signum();
    let d4 = det(&r, &s, &q).signum();
    d1 * d2 < 0 && d3 * d4 < 0
}

/// Strict containment in the open triangle abc, for either orientation of abc.
pub fn in_triangle(x: Point, a: Point, b: Point, c: Point) -> bool {
    let s = det(&a, &b, &c).signum();
    if s == 0 {
        return false;
    }
    det(&a, &b, &x).signum() == s && det(&b, &c, &x).signum() == s && det(&c, &a, &x).signum() == s
}

/// Open convex wedge bounded by the rays apex->ray1_through and apex->ray2_through.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Wedge {
    pub apex: Point,
    pub ray1_through: Point,
    pub ray2_through: Point,
}

impl Wedge {
    pub fn new(apex: Point, ray1_through: Point, ray2_through: Point) -> Wedge {
        Wedge { apex, ray1_through, ray2_through }
    }

    pub fn contains(&self, x: &Point) -> bool {
        let (a, b, c) = (&self.apex, &self.ray1_through, &self.ray2_through);
        let s = det(a, b, c).signum();
        if s == 0 {
            return false;
        }
        det(a, b, x).signum() == s && det(a, c, x).signum() == -s
    }
}

pub fn in_wedge(x: Point, w: &Wedge) -> bool {
    w.contains(&x)
}

/// The point of `(X ∩ Δabc) ∪ {c}` minimising the area of the triangle on base ab.
pub fn area_min_select(a: Point, b: Point, c: Point, xs: &[Point]) -> Point {
    let mut best = c;
    let mut best_area = det(&a, &b, &c).abs();
    for x in xs {
        if in_triangle(*x, a, b, c) {
            let area = det(&a, &b, x).abs();
            if area < best_area {
                best = *x;
                best_area = area;
            }
        }
    }
    best
}

/// Indices of the convex hull vertices in counter-clockwise order, starting
/// from the lexicographically smallest point. Collinear boundary points are dropped.
pub fn hull_indices(points: &[Point]) -> Vec<usize> {
    let mut sorted = lex_sorted(points);
    sorted.dedup_by(|a, b| a.0.same_place(&b.0));
    hull_of_sorted(&sorted)
}

/// Points tagged with their index, sorted by (x, y).
pub fn lex_sorted(points: &[Point]) -> Vec<(Point, usize)> {
    let mut sorted: Vec<(Point, usize)> = points.iter().copied().zip(0..).collect();
    sorted.sort_unstable_by_key(|(p, _)| (p.x, p.y));
    sorted
}

/// Monotone chain over points sorted by (x, y) without repeated positions.
/// Works on the sorted copy so large inputs are scanned sequentially.
pub fn hull_of_sorted(sorted: &[(Point, usize)]) -> Vec<usize> {
    if sorted.len() <= 2 {
        return sorted.iter().map(|&(_, i)| i).collect();
    }
    let chain = |order: &mut dyn Iterator<Item = &(Point, usize)>| {
        let mut out: Vec<(Point, usize)> = Vec::new();
        for &v in order {
            while out.len() >= 2 && det(&out[out.len() - 2].0, &out[out.len() - 1].0, &v.0) <= 0 {
                out.pop();
            }
            out.push(v);
        }
        out.pop();
        out
    };
    let mut hull = chain(&mut sorted.iter());
    hull.extend(chain(&mut sorted.iter().rev()));
    hull.into_iter().map(|(_, i)| i).collect()
}

pub fn convex_hull(points: &[Point]) -> Vec<Point> {
    hull_indices(points).into_iter().map(|i| points[i]).collect()
}

/// Strictly inside a CCW convex polygon with at least three vertices. O(log n).
pub fn strictly_inside_convex(poly: &[Point], p: &Point) -> bool {
    let n = poly.len();
    if n < 3 {
        return false;
    }
    let o = &poly[0];
    if det(o, &poly[1], p) <= 0 || det(o, &poly[n - 1], p) >= 0 {
        return false;
    }
    // largest k in [1, n-2] with p left of o->poly[k]
    let (mut lo, mut hi) = (1usize, n - 1);
    while hi - lo > 1 {
        let mid = (lo + hi) / 2;
        if det(o, &poly[mid], p) > 0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    det(&poly[lo], &poly[lo + 1], p) > 0
}

/// Directed edges of a CCW hull cycle. A two-vertex hull yields both directions.
pub fn hull_edges(len: usize) -> Vec<(usize, usize)> {
    match len {
        0 | 1 => Vec::new(),
        2 => vec![(0, 1), (1, 0)],
        n => (0..n).map(|i| (i, (i + 1) % n)).collect(),
    }
}

/// Some edge of `p` has every vertex of `q` strictly on its outer side.
fn separated_by_edge_of(p: &[Point], q: &[Point]) -> bool {
    if p.len() < 2 || q.is_empty() {
        return false;
    }
    if p.len() == 2 {
        return [(0, 1), (1, 0)]
            .iter()
            .any(|&(i, j)| q.iter().all(|x| det(&p[i], &p[j], x) < 0));
    }
    let m = q.len();
    let f = |a: &Point, b: &Point, k: usize| det(a, b, &q[k % m]);
    let mut j = (0..m).max_by_key(|&k| f(&p[0], &p[1], k)).unwrap_or(0);
    for i in 0..p.len() {
        let (a, b) = (&p[i], &p[(i + 1) % p.len()]);
        let mut steps = 0;
        while steps < m && f(a, b, j + 1) > f(a, b, j) {
            j = (j + 1) % m;
            steps += 1;
        }
        if f(a, b, j) < 0 {
            return true;
        }
    }
    false
}

/// Two CCW hull cycles have disjoint closed hulls. Linear in the hull sizes.
pub fn hulls_disjoint(p: &[Point], q: &[Point]) -> bool {
    if p.is_empty() || q.is_empty() {
        return true;
    }
    if p.len() == 1 && q.len() == 1 {
        return !p[0].same_place(&q[0]);
    }
    separated_by_edge_of(p, q) || separated_by_edge_of(q, p)
}

/// Tangent vertices of a CCW convex polygon seen from an outside point `r`.
///
/// Returns `(lo, hi)`: every other vertex lies counter-clockwise of r->poly[lo]
/// and clockwise of r->poly[hi]. The chain lo, lo+1, .., hi is the far side.
/// O(log n) for n >= 3.
pub fn tangents(poly: &[Point], r: &Point) -> (usize, usize) {
    let m = poly.len();
    match m {
        0 => panic!("tangents of an empty polygon"),
        1 => return (0, 0),
        2 => {
            return if det(r, &poly[0], &poly[1]) > 0 { (0, 1) } else { (1, 0) };
        }
        _ => {}
    }
    let d = |k: usize| det(r, &poly[k % m], &poly[(k + 1) % m]).signum();
    let d0 = d(0);
    // first vertex where the turn direction seen from r flips
    let p = |k: usize| d(k) == d0 && det(r, &poly[0], &poly[k]).signum() * d0 >= 0;
    let s = first_false(0, m, p) % m;
    // from s the sign is -d0 up to the other extreme
    let t = first_false(0, m, |k| d(s + k) != d0);
    let t = (s + t) % m;
    if d0 > 0 {
        (t, s)
    } else {
        (s, t)
    }
}

/// Smallest k in [lo, hi) with `pred(k)` false, assuming pred is true on a prefix.
/// Returns hi if pred holds everywhere.
pub fn first_false(lo: usize, hi: usize, pred: impl Fn(usize) -> bool) -> usize {
    let (mut lo, mut hi) = (lo, hi);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if pred(mid) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    lo
}
