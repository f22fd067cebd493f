//! Exhaustive reference computations. Polynomial of high degree; intended for
//! small sets only and guarded by a size cap.

use crate::error::{Error, Result};
use crate::geometry::{det, in_triangle, Color, Point};
use crate::holes::{canonical_cycle, is_simple, point_in_polygon, signed_area2};
use crate::pointset::BicoloredSet;

pub const DEFAULT_CAP: usize = 20;

/// Size cap, overridable through `HOLEKIT_ORACLE_CAP`.
pub fn cap() -> usize {
    std::env::var("HOLEKIT_ORACLE_CAP")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_CAP)
}

fn check_cap(s: &BicoloredSet) -> Result<()> {
    let cap = cap();
    if s.len() > cap {
        return Err(Error::OracleCapExceeded { size: s.len(), cap });
    }
    Ok(())
}

/// Sorted index triples whose open triangle holds no point.
pub fn empty_triangles(s: &BicoloredSet) -> Vec<[usize; 3]> {
    let p = s.points();
    let n = p.len();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if !(0..n).any(|x| x != a && x != b && x != c && in_triangle(p[x], p[a], p[b], p[c])) {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

/// Every 2+2 colored 4-subset, as index quadruples.
fn balanced_quadruples(s: &BicoloredSet) -> Vec<[usize; 4]> {
    let reds = s.indices(Color::Red);
    let blues = s.indices(Color::Blue);
    let mut out = Vec::new();
    for i in 0..reds.len() {
        for j in i + 1..reds.len() {
            for k in 0..blues.len() {
                for l in k + 1..blues.len() {
                    out.push([reds[i], reds[j], blues[k], blues[l]]);
                }
            }
        }
    }
    out
}

fn empty_cycle(s: &BicoloredSet, cycle: &[usize]) -> bool {
    let pts: Vec<Point> = cycle.iter().map(|&i| s.point(i)).collect();
    !(0..s.len()).any(|x| !cycle.contains(&x) && point_in_polygon(&s.point(x), &pts))
}

/// All balanced 4-holes as CCW index cycles starting at their smallest index, sorted.
pub fn balanced_4holes(s: &BicoloredSet) -> Result<Vec<Vec<usize>>> {
    check_cap(s)?;
    let mut out = Vec::new();
    for [a, b, c, d] in balanced_quadruples(s) {
        for cycle in [[a, b, c, d], [a, b, d, c], [a, c, b, d]] {
            let pts: Vec<Point> = cycle.iter().map(|&i| s.point(i)).collect();
            if !is_simple(&pts) {
                continue;
            }
            let mut cycle = cycle.to_vec();
            if signed_area2(&pts) < 0 {
                cycle.reverse();
            }
            if empty_cycle(s, &cycle) {
                out.push(canonical_cycle(&cycle));
            }
        }
    }
    out.sort();
    Ok(out)
}

pub fn count_balanced_4holes(s: &BicoloredSet) -> Result<u64> {
    Ok(balanced_4holes(s)?.len() as u64)
}

/// The four points ordered CCW around their hull, or None if one lies inside
/// the triangle of the others.
pub fn convex_order(s: &BicoloredSet, q: [usize; 4]) -> Option<[usize; 4]> {
    let p = |i: usize| s.point(q[i]);
    for i in 0..4 {
        let o: Vec<usize> = (0..4).filter(|&j| j != i).collect();
        if in_triangle(p(i), p(o[0]), p(o[1]), p(o[2])) {
            return None;
        }
    }
    for cyc in [[0, 1, 2, 3], [0, 1, 3, 2], [0, 2, 1, 3]] {
        let c = cyc.map(|i| q[i]);
        let pts: Vec<Point> = c.iter().map(|&i| s.point(i)).collect();
        if is_simple(&pts) {
            return Some(if signed_area2(&pts) < 0 { [c[3], c[2], c[1], c[0]] } else { c });
        }
    }
    None
}

/// Every balanced convex 4-hole, as CCW index cycles.
pub fn balanced_convex_4holes(s: &BicoloredSet) -> Vec<[usize; 4]> {
    balanced_quadruples(s)
        .into_iter()
        .filter_map(|q| convex_order(s, q))
        .filter(|c| empty_cycle(s, c))
        .collect()
}

pub fn has_balanced_convex_4hole(s: &BicoloredSet) -> bool {
    balanced_quadruples(s)
        .into_iter()
        .filter_map(|q| convex_order(s, q))
        .any(|c| empty_cycle(s, &c))
}

/// Directed CCW hull edges of one color; a two-point hull gives both directions.
pub fn hull_edge_points(s: &BicoloredSet, c: Color) -> Vec<(Point, Point)> {
    let h = s.color_hull_points(c);
    crate::geometry::hull_edges(h.len()).into_iter().map(|(i, j)| (h[i], h[j])).collect()
}

/// A red and a blue hull edge each having the other strictly on its outer side.
pub fn c1_pairs(s: &BicoloredSet) -> Vec<((Point, Point), (Point, Point))> {
    let mut out = Vec::new();
    for (u, v) in hull_edge_points(s, Color::Red) {
        for (w, z) in hull_edge_points(s, Color::Blue) {
            if det(&u, &v, &w) < 0 && det(&u, &v, &z) < 0 && det(&w, &z, &u) < 0 && det(&w, &z, &v) < 0 {
                out.push(((u, v), (w, z)));
            }
        }
    }
    out
}

/// The separable condition C2 for hull edges of color `c`: an edge uv of
/// CH(c), points b, z of the other color with z in Δuvb, no point of color c
/// in Δuvb, and a point of color c in W(b,u,v). Evaluated over all triples.
pub fn c2_witnesses(s: &BicoloredSet, c: Color) -> Vec<(Point, Point, Point, Point, Point)> {
    let own = s.colored(c);
    let other = s.colored(c.other());
    let mut out = Vec::new();
    for (u, v) in hull_edge_points(s, c) {
        for &b in &other {
            for &z in &other {
                if b == z || !in_triangle(z, u, v, b) {
                    continue;
                }
                if own.iter().any(|r| in_triangle(*r, u, v, b)) {
                    continue;
                }
                let wedge = crate::geometry::Wedge::new(b, u, v);
                if let Some(r) = own.iter().find(|r| wedge.contains(r)) {
                    out.push((u, v, b, z, *r));
                }
            }
        }
    }
    out
}

pub fn c2_holds(s: &BicoloredSet) -> bool {
    !c2_witnesses(s, Color::Red).is_empty() || !c2_witnesses(s, Color::Blue).is_empty()
}

/// Some red r and blue b such that the open segment rb properly crosses an
/// edge of CH(R) and an edge of CH(B). Checked over all pairs and all edges.
pub fn crossed_red_blue_segment(s: &BicoloredSet) -> Option<(Point, Point)> {
    let red_edges = hull_edge_points(s, Color::Red);
    let blue_edges = hull_edge_points(s, Color::Blue);
    let crossed = |r: Point, b: Point, edges: &[(Point, Point)]| {
        edges.iter().any(|&(p, q)| crate::geometry::segments_cross(r, b, p, q))
    };
    for r in s.colored(Color::Red) {
        for b in s.colored(Color::Blue) {
            if crossed(r, b, &red_edges) && crossed(r, b, &blue_edges) {
                return Some((r, b));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_examples() {
        let s = BicoloredSet::parse("0 0 R\n4 0 B\n4 4 R\n0 4 B\n").unwrap();
        assert_eq!(count_balanced_4holes(&s), Ok(1));
        assert!(has_balanced_convex_4hole(&s));
        let s = BicoloredSet::parse("0 0 R\n8 0 R\n0 8 B\n2 2 B\n").unwrap();
        assert_eq!(count_balanced_4holes(&s), Ok(3));
        assert!(!has_balanced_convex_4hole(&s));
    }

    #[test]
    fn cap_is_enforced() {
        let text: String = (0..21).map(|i| format!("{} {} R\n", i, i * i)).collect();
        let s = BicoloredSet::parse(&text).unwrap();
        assert!(matches!(balanced_4holes(&s), Err(Error::OracleCapExceeded { size: 21, .. })));
    }
}
