//! Witness quadrilaterals built along the existence proofs.
//!
//! Every candidate is validated (balanced, convex, empty) before it is
//! returned; a positive decision without a valid candidate is a bug and is
//! reported as `WitnessConstructionFailed`.

use std::collections::HashMap;

use super::{decide_with_witness, separable, C2Data, ConvexDecision, Evidence};
use crate::error::{Error, Result};
use crate::geometry::{det, in_triangle, segments_cross, Color, Wedge};
use crate::holes::{is_empty_polygon, HolePolygon};
use crate::pointset::BicoloredSet;

/// Index-level area-minimising selector: the point of color `col` strictly
/// inside Δabc closest to ℓ(a,b), or `c` itself.
fn select(s: &BicoloredSet, a: usize, b: usize, c: usize, col: Color) -> usize {
    let (pa, pb, pc) = (s.point(a), s.point(b), s.point(c));
    let mut best = (det(&pa, &pb, &pc).abs(), c);
    for &i in s.indices(col) {
        let x = s.point(i);
        if in_triangle(x, pa, pb, pc) {
            best = best.min((det(&pa, &pb, &x).abs(), i));
        }
    }
    best.1
}

/// The four points as a CCW convex cycle, if they are in convex position.
fn convex_quad(s: &BicoloredSet, q: [usize; 4]) -> Option<HolePolygon> {
    let mut seen = q.to_vec();
    seen.sort_unstable();
    seen.dedup();
    if seen.len() != 4 {
        return None;
    }
    for cyc in [[0, 1, 2, 3], [0, 1, 3, 2], [0, 2, 1, 3]] {
        let poly = HolePolygon::from_indices(s, &cyc.map(|i| q[i]));
        if poly.is_convex {
            return Some(poly);
        }
    }
    None
}

/// Balanced, convex and empty.
pub fn is_valid_witness(s: &BicoloredSet, h: &HolePolygon) -> bool {
    h.is_balanced_4hole() && h.is_convex && is_empty_polygon(s, &h.vertices).unwrap_or(false)
}

fn valid(s: &BicoloredSet, q: [usize; 4]) -> Option<HolePolygon> {
    convex_quad(s, q).filter(|h| is_valid_witness(s, h))
}

fn first_valid(s: &BicoloredSet, candidates: &[[usize; 4]], what: &str) -> Result<HolePolygon> {
    candidates
        .iter()
        .find_map(|&q| valid(s, q))
        .ok_or_else(|| Error::WitnessConstructionFailed(what.to_string()))
}

/// Minimum-area shrinking of a red-red segment ab crossing a blue-blue
/// segment cd: while a point lies inside the quad, it replaces one endpoint
/// of its color so that the diagonals still cross. O(n) per step, at most n steps.
pub fn shrink_crossing(s: &BicoloredSet, red: (usize, usize), blue: (usize, usize)) -> Result<HolePolygon> {
    let (mut a, mut b) = red;
    let (mut c, mut d) = blue;
    let p = |i: usize| s.point(i);
    if !segments_cross(p(a), p(b), p(c), p(d)) {
        return Err(Error::WitnessConstructionFailed("segments do not cross".into()));
    }
    loop {
        let inside = (0..s.len()).find(|&e| {
            e != a && e != b && e != c && e != d && (in_triangle(p(e), p(a), p(c), p(b)) || in_triangle(p(e), p(a), p(b), p(d)))
        });
        let Some(e) = inside else { break };
        match p(e).color {
            Color::Red if segments_cross(p(e), p(a), p(c), p(d)) => b = e,
            Color::Red => a = e,
            Color::Blue if segments_cross(p(e), p(c), p(a), p(b)) => d = e,
            Color::Blue => c = e,
        }
    }
    let (r, b_) = match p(a).color {
        Color::Red => ((a, b), (c, d)),
        Color::Blue => ((c, d), (a, b)),
    };
    first_valid(s, &[[r.0, b_.0, r.1, b_.1]], "crossing diagonals")
}

/// Triangulation of the given points by an incremental sweep in
/// lexicographic order. Triangles are CCW index triples. O(n·h).
pub fn triangulate(s: &BicoloredSet, idx: &[usize]) -> Vec<[usize; 3]> {
    let mut order = idx.to_vec();
    order.sort_by_key(|&i| (s.point(i).x, s.point(i).y));
    let p = |i: usize| s.point(i);
    let mut tris = Vec::new();
    if order.len() < 3 {
        return tris;
    }
    // hull as a CCW cycle
    let (a, b, c) = (order[0], order[1], order[2]);
    let mut hull = if det(&p(a), &p(b), &p(c)) > 0 { vec![a, b, c] } else { vec![a, c, b] };
    tris.push([hull[0], hull[1], hull[2]]);
    for &x in &order[3..] {
        let m = hull.len();
        let visible: Vec<bool> = (0..m).map(|k| det(&p(hull[k]), &p(hull[(k + 1) % m]), &p(x)) < 0).collect();
        for k in 0..m {
            if visible[k] {
                tris.push([hull[(k + 1) % m], hull[k], x]);
            }
        }
        // visible edges form one run; cut it out and splice x in
        let start = (0..m).find(|&k| visible[k] && !visible[(k + m - 1) % m]).expect("new point sees the hull");
        let mut end = start;
        while visible[end % m] {
            end += 1;
        }
        let mut next = Vec::with_capacity(m + 1);
        next.push(x);
        let mut k = end % m;
        loop {
            next.push(hull[k]);
            if k == start {
                break;
            }
            k = (k + 1) % m;
        }
        hull = next;
    }
    tris
}

fn key(i: usize, j: usize) -> (usize, usize) {
    (i.min(j), i.max(j))
}

/// Witness for an inner hull strictly inside an outer hull with at least
/// four outer points, via a triangulation of the outer class.
pub fn nested_witness(s: &BicoloredSet, outer: Color) -> Result<HolePolygon> {
    let inner = outer.other();
    let tris = triangulate(s, s.indices(outer));
    let p = |i: usize| s.point(i);
    let locate = |x: usize| tris.iter().position(|t| in_triangle(p(x), p(t[0]), p(t[1]), p(t[2])));
    let blues = s.indices(inner);
    let first = locate(blues[0]).ok_or_else(|| Error::WitnessConstructionFailed("inner point outside".into()))?;
    for &y in &blues[1..] {
        if locate(y) != Some(first) {
            let x = blues[0];
            for t in &tris {
                for k in 0..3 {
                    let (e0, e1) = (t[k], t[(k + 1) % 3]);
                    if segments_cross(p(x), p(y), p(e0), p(e1)) {
                        return oriented_shrink(s, (e0, e1), (x, y));
                    }
                }
            }
            return Err(Error::WitnessConstructionFailed("no separating triangulation edge".into()));
        }
    }
    let t = tris[first];
    if blues.len() == 2 {
        let (x, y) = (blues[0], blues[1]);
        let cands: Vec<[usize; 4]> = (0..3).map(|k| [t[k], t[(k + 1) % 3], x, y]).collect();
        return first_valid(s, &cands, "two inner points");
    }
    let mut apex: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for tr in &tris {
        for k in 0..3 {
            apex.entry(key(tr[k], tr[(k + 1) % 3])).or_default().push(tr[(k + 2) % 3]);
        }
    }
    let hull = s.color_hull(inner);
    let h = hull.len();
    let mut cands = Vec::new();
    for k in 0..3 {
        let (a, b, c) = (t[k], t[(k + 1) % 3], t[(k + 2) % 3]);
        let Some(d) = apex[&key(a, b)].iter().copied().find(|&d| d != c) else { continue };
        let u = select(s, a, b, c, inner);
        let Some(pos) = hull.iter().position(|&i| i == u) else { continue };
        let v = hull[(pos + 1) % h];
        let w = hull[(pos + h - 1) % h];
        cands.push([a, b, u, w]);
        cands.push([a, b, u, v]);
        for (a, w, v) in [(a, w, v), (b, v, w)] {
            cands.push([a, d, u, w]);
            cands.push([select(s, w, a, d, outer), a, u, w]);
            cands.push([a, d, u, select(s, a, u, v, inner)]);
            cands.push([select(s, a, w, d, outer), a, select(s, a, w, v, inner), w]);
        }
    }
    first_valid(s, &cands, "nested hulls")
}

fn oriented_shrink(s: &BicoloredSet, e: (usize, usize), f: (usize, usize)) -> Result<HolePolygon> {
    if s.point(e.0).color == Color::Red {
        shrink_crossing(s, e, f)
    } else {
        shrink_crossing(s, f, e)
    }
}

/// The quad from the C2 configuration: z' = f(u,v,b) splits W(b,u,v), and
/// the half containing r yields {r', z', b', u} (or the mirror with v).
pub fn c2_witness(s: &BicoloredSet, d: &C2Data) -> Result<HolePolygon> {
    let (own, other) = (d.own, d.own.other());
    let z = select(s, d.u, d.v, d.b, other);
    let in_first = Wedge::new(s.point(d.b), s.point(d.u), s.point(z)).contains(&s.point(d.r));
    let build = |u: usize| [select(s, u, z, d.r, own), z, select(s, u, z, d.b, other), u];
    let cands = if in_first { [build(d.u), build(d.v)] } else { [build(d.v), build(d.u)] };
    first_valid(s, &cands, "C2 configuration")
}

/// Builds a witness for a positive decision.
pub fn extract_witness(s: &BicoloredSet, decision: &ConvexDecision) -> Result<HolePolygon> {
    match decision.evidence {
        Evidence::None => Err(Error::WitnessConstructionFailed("negative decision".into())),
        Evidence::BoundariesCross => {
            let (e, f) = super::nonsep::crossing_hull_edges(s)
                .ok_or_else(|| Error::WitnessConstructionFailed("no crossing hull edges".into()))?;
            shrink_crossing(s, e, f)
        }
        Evidence::Nested { outer } => nested_witness(s, outer),
        Evidence::ThreeOuter { u, v, a, b, .. } => first_valid(s, &[[u, v, a, b]], "three outer points"),
        Evidence::C1(c1) => {
            first_valid(s, &[[c1.red_edge.0, c1.red_edge.1, c1.blue_edge.0, c1.blue_edge.1]], "seeing edges")
        }
        Evidence::C2(c2) => c2_witness(s, &c2),
    }
}

/// A convex 4-hole that is balanced or monochromatic, for sets with at least
/// four points of each color.
pub fn find_convex_4hole_balanced_or_mono(s: &BicoloredSet) -> Result<HolePolygon> {
    if s.red_count() < 4 || s.blue_count() < 4 {
        return Err(Error::Precondition("need at least four points of each color".into()));
    }
    if s.linearly_separable() {
        match separable::step1_convex_color(s) {
            Some(c) => {
                let h = s.color_hull(c);
                let poly = HolePolygon::from_indices(s, &h[..4]);
                if poly.is_convex && is_empty_polygon(s, &poly.vertices)? {
                    return Ok(poly);
                }
                Err(Error::WitnessConstructionFailed("consecutive hull vertices".into()))
            }
            None => decide_with_witness(s)?
                .witness
                .ok_or_else(|| Error::WitnessConstructionFailed("separable with interior points".into())),
        }
    } else {
        decide_with_witness(s)?
            .witness
            .ok_or_else(|| Error::WitnessConstructionFailed("not separable".into()))
    }
}
