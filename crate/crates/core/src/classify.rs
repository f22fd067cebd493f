//! Coloring of bichromatic edges and the counting lemmas built on it.

use std::cmp::Ordering;
use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{det, in_triangle, Color, Point};
use crate::holes::{enumerate_balanced_4holes, HolePolygon};
use crate::pointset::BicoloredSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum EdgeColor {
    Green,
    Black,
    Red,
    Blue,
}

impl EdgeColor {
    pub fn name(self) -> &'static str {
        match self {
            EdgeColor::Green => "green",
            EdgeColor::Black => "black",
            EdgeColor::Red => "red",
            EdgeColor::Blue => "blue",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeClassification {
    /// Red endpoint.
    pub p: usize,
    /// Blue endpoint.
    pub q: usize,
    pub color: EdgeColor,
    /// T(p,q); empty for green and black edges unless full witnesses were requested.
    pub rotation_witness: Vec<usize>,
    /// Index into `Classification::holes` of a hole using both endpoints.
    pub hole_witness: Option<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ClassificationSummary {
    pub green_count: usize,
    pub black_count: usize,
    pub red_count: usize,
    pub blue_count: usize,
    /// Red edges at each red point, in the order of the red indices.
    pub red_degrees: Vec<usize>,
    /// Blue edges at each blue point, in the order of the blue indices.
    pub blue_degrees: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub edges: Vec<EdgeClassification>,
    pub summary: ClassificationSummary,
    pub holes: Vec<HolePolygon>,
}

/// Rotation order of `a` and `b` when the ray from `pivot` through `dir`
/// turns about `pivot` (counter-clockwise if `ccw`).
fn rotation_cmp(pivot: &Point, dir: &Point, a: &Point, b: &Point, ccw: bool) -> Ordering {
    let sign = if ccw { 1 } else { -1 };
    // points reached in the first half-turn come first
    let half = |x: &Point| if det(pivot, dir, x) * sign > 0 { 0 } else { 1 };
    half(a).cmp(&half(b)).then_with(|| 0.cmp(&(det(pivot, a, b) * sign)))
}

fn first_in_rotation(s: &BicoloredSet, pivot: usize, dir: usize, ccw: bool) -> Option<usize> {
    let (pv, dv) = (s.point(pivot), s.point(dir));
    (0..s.len())
        .filter(|&i| i != pivot && i != dir)
        .min_by(|&a, &b| rotation_cmp(&pv, &dv, &s.point(a), &s.point(b), ccw))
}

/// T(p,q): the first point met by each of the four rotations of the segment
/// pq about its endpoints. Duplicates collapse; sorted by index.
pub fn rotation_neighbors(s: &BicoloredSet, p: usize, q: usize) -> Vec<usize> {
    let mut t: Vec<usize> = [(p, q, false), (p, q, true), (q, p, false), (q, p, true)]
        .into_iter()
        .filter_map(|(a, b, ccw)| first_in_rotation(s, a, b, ccw))
        .collect();
    t.sort_unstable();
    t.dedup();
    t
}

fn hull_edge_set(s: &BicoloredSet) -> std::collections::HashSet<(usize, usize)> {
    let h = s.hull();
    crate::geometry::hull_edges(h.len())
        .into_iter()
        .map(|(i, j)| (h[i].min(h[j]), h[i].max(h[j])))
        .collect()
}

/// Colors every red-blue pair. Green pairs come from the hole enumeration;
/// with `full_witnesses` T(p,q) is also reported for green and black edges.
pub fn classify_edges(s: &BicoloredSet, full_witnesses: bool) -> Result<Classification> {
    let holes = enumerate_balanced_4holes(s);
    let mut green: HashMap<(usize, usize), usize> = HashMap::new();
    for (k, h) in holes.iter().enumerate() {
        for &a in &h.indices {
            for &b in &h.indices {
                if s.point(a).color == Color::Red && s.point(b).color == Color::Blue {
                    green.entry((a, b)).or_insert(k);
                }
            }
        }
    }
    let hull = hull_edge_set(s);
    let reds = s.indices(Color::Red);
    let blues = s.indices(Color::Blue);
    let mut edges = Vec::with_capacity(reds.len() * blues.len());
    let mut summary = ClassificationSummary {
        red_degrees: vec![0; reds.len()],
        blue_degrees: vec![0; blues.len()],
        ..Default::default()
    };
    for (ri, &p) in reds.iter().enumerate() {
        for (bi, &q) in blues.iter().enumerate() {
            let hole = green.get(&(p, q)).copied();
            let black = hole.is_none() && hull.contains(&(p.min(q), p.max(q)));
            let needs_t = full_witnesses || (hole.is_none() && !black);
            let t = if needs_t { rotation_neighbors(s, p, q) } else { Vec::new() };
            let color = if hole.is_some() {
                EdgeColor::Green
            } else if black {
                EdgeColor::Black
            } else {
                straddling_color(s, p, q, &t)?
            };
            match color {
                EdgeColor::Green => summary.green_count += 1,
                EdgeColor::Black => summary.black_count += 1,
                EdgeColor::Red => {
                    summary.red_count += 1;
                    summary.red_degrees[ri] += 1;
                }
                EdgeColor::Blue => {
                    summary.blue_count += 1;
                    summary.blue_degrees[bi] += 1;
                }
            }
            edges.push(EdgeClassification { p, q, color, rotation_witness: t, hole_witness: hole });
        }
    }
    Ok(Classification { edges, summary, holes })
}

pub fn classify_all_edges(s: &BicoloredSet) -> Result<Classification> {
    classify_edges(s, false)
}

fn straddling_color(s: &BicoloredSet, p: usize, q: usize, t: &[usize]) -> Result<EdgeColor> {
    let (pp, pq) = (s.point(p), s.point(q));
    let violation = |reason: &str| Error::ClassificationInvariantViolated { p, q, reason: reason.to_string() };
    let first = t.first().ok_or_else(|| violation("T(p,q) is empty"))?;
    let color = s.point(*first).color;
    if t.iter().any(|&x| s.point(x).color != color) {
        return Err(violation("T(p,q) is bichromatic"));
    }
    let left = t.iter().any(|&x| det(&pp, &pq, &s.point(x)) > 0);
    let right = t.iter().any(|&x| det(&pp, &pq, &s.point(x)) < 0);
    if !(left && right) {
        return Err(violation("T(p,q) lies on one side of the line pq"));
    }
    Ok(match color {
        Color::Red => EdgeColor::Red,
        Color::Blue => EdgeColor::Blue,
    })
}

/// `p_index,q_index,color` lines with a header.
pub fn to_csv(c: &Classification) -> String {
    let mut out = String::from("p_index,q_index,color\n");
    for e in &c.edges {
        out.push_str(&format!("{},{},{}\n", e.p, e.q, e.color.name()));
    }
    out
}

/// Outcome of the counting-lemma checks; every flag must be true.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub n: usize,
    pub red_edges_bounded: bool,
    pub blue_edges_bounded: bool,
    pub green_edges_bounded: bool,
    pub black_edges_bounded: bool,
    /// Present for linearly separable sets only.
    pub separable: Option<SeparableReport>,
    pub summary: ClassificationSummary,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeparableReport {
    pub red_edges_bounded: bool,
    pub blue_edges_bounded: bool,
    pub black_edges_bounded: bool,
    pub green_edges_bounded: bool,
}

impl LemmaReport {
    pub fn all_hold(&self) -> bool {
        let sep = self.separable.as_ref().is_none_or(|r| {
            r.red_edges_bounded && r.blue_edges_bounded && r.black_edges_bounded && r.green_edges_bounded
        });
        self.red_edges_bounded && self.blue_edges_bounded && self.green_edges_bounded && self.black_edges_bounded && sep
    }
}

/// Checks the red/blue/green/black edge bounds for |R| = |B| = n.
pub fn verify_counting_lemmas(s: &BicoloredSet) -> Result<LemmaReport> {
    let n = s.red_count();
    if n != s.blue_count() {
        return Err(Error::Precondition("counting lemmas need |R| = |B|".into()));
    }
    let c = classify_all_edges(s)?;
    let sm = &c.summary;
    let n_i = n as i64;
    let cap = n_i * ((n_i - 1).div_euclid(3));
    let (red, blue, green, black) = (sm.red_count as i64, sm.blue_count as i64, sm.green_count as i64, sm.black_count as i64);
    let separable = s.linearly_separable().then(|| {
        // (n²−3n+2)/6 and (2n²+3n−8)/3, compared after clearing denominators
        let sep_cap = n_i * n_i - 3 * n_i + 2;
        SeparableReport {
            red_edges_bounded: 6 * red <= sep_cap,
            blue_edges_bounded: 6 * blue <= sep_cap,
            black_edges_bounded: black <= 2,
            green_edges_bounded: 3 * green >= 2 * n_i * n_i + 3 * n_i - 8,
        }
    });
    Ok(LemmaReport {
        n,
        red_edges_bounded: red <= cap,
        blue_edges_bounded: blue <= cap,
        green_edges_bounded: green >= n_i * n_i - 2 * cap - 2 * n_i,
        black_edges_bounded: black <= 2 * n_i,
        separable,
        summary: c.summary.clone(),
    })
}

/// Radial CCW order of the points of `others` around `r`.
fn radial(s: &BicoloredSet, r: usize, others: &[usize]) -> Vec<usize> {
    let pr = s.point(r);
    let upper = |p: &Point| (p.y > pr.y) || (p.y == pr.y && p.x > pr.x);
    let mut v = others.to_vec();
    v.sort_by(|&a, &b| {
        let (pa, pb) = (s.point(a), s.point(b));
        upper(&pb).cmp(&upper(&pa)).then_with(|| 0.cmp(&det(&pr, &pa, &pb)))
    });
    v
}

/// For every red (blue) edge r-b_i and the radially adjacent b_{i±1}
/// reached by turning less than π, Δ r b_i b_{i±1} holds at least three
/// points of r's color.
pub fn triangle_blocking_holds(s: &BicoloredSet, c: &Classification) -> bool {
    c.edges.iter().all(|e| {
        let (own, other, col) = match e.color {
            EdgeColor::Red => (e.p, e.q, Color::Red),
            EdgeColor::Blue => (e.q, e.p, Color::Blue),
            _ => return true,
        };
        let ring = radial(s, own, s.indices(col.other()));
        let m = ring.len();
        let i = ring.iter().position(|&x| x == other).expect("endpoint in ring");
        let po = s.point(own);
        [(ring[(i + 1) % m], 1), (ring[(i + m - 1) % m], -1)].iter().all(|&(nb, sign)| {
            if nb == other || det(&po, &s.point(other), &s.point(nb)) * sign <= 0 {
                return true;
            }
            let (pa, pb) = (s.point(other), s.point(nb));
            s.indices(col).iter().filter(|&&x| in_triangle(s.point(x), po, pa, pb)).count() >= 3
        })
    })
}

/// With a separating line, rank each class by distance to it; the point of
/// rank i carries at most ⌊i/3⌋ edges of its own color. Ties in distance
/// only raise ranks, so the bound needs no distinct-distance assumption.
pub fn separable_degree_bounds_hold(s: &BicoloredSet, c: &Classification) -> Option<bool> {
    let (p, q) = separating_direction(s)?;
    let mut ok = true;
    for (col, degrees) in [(Color::Red, &c.summary.red_degrees), (Color::Blue, &c.summary.blue_degrees)] {
        let idx = s.indices(col);
        let dist = |i: usize| det(&p, &q, &s.point(idx[i])).abs();
        let mut order: Vec<usize> = (0..idx.len()).collect();
        order.sort_by_key(|&i| dist(i));
        for (rank, &i) in order.iter().enumerate() {
            ok &= degrees[i] <= rank / 3;
        }
    }
    Some(ok)
}

/// A hull edge of one class with the whole other class strictly on its
/// right. Distance to its line ranks both classes as a separating line would.
fn separating_direction(s: &BicoloredSet) -> Option<(Point, Point)> {
    let red = s.color_hull_points(Color::Red);
    let blue = s.color_hull_points(Color::Blue);
    for (near, far) in [(&red, &blue), (&blue, &red)] {
        let h = near.len();
        for (i, j) in crate::geometry::hull_edges(h) {
            let (a, b) = (near[i], near[j]);
            if far.iter().all(|x| det(&a, &b, x) < 0) {
                return Some((a, b));
            }
        }
    }
    None
}
