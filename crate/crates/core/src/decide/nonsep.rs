//! Characterisation for color classes that are not linearly separable.

use crate::geometry::{det, segments_cross, strictly_inside_convex, Color, Point};
use crate::pointset::BicoloredSet;

/// Containment of one class hull in the other, or a boundary crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Overlap {
    /// CH(inner) lies strictly inside CH(inner.other()).
    Contained { inner: Color },
    BoundariesCross,
}

/// Every hull vertex of `inner` strictly inside CH(inner.other()). O(h log h).
pub fn hull_contained(s: &BicoloredSet, inner: Color) -> bool {
    let outer = s.color_hull_points(inner.other());
    outer.len() >= 3
        && !s.color_hull(inner).is_empty()
        && s.color_hull_points(inner).iter().all(|p| strictly_inside_convex(&outer, p))
}

/// Classifies a non-separable set. Under general position, hulls that are
/// neither disjoint nor nested have crossing boundaries.
pub fn overlap(s: &BicoloredSet) -> Overlap {
    if hull_contained(s, Color::Blue) {
        Overlap::Contained { inner: Color::Blue }
    } else if hull_contained(s, Color::Red) {
        Overlap::Contained { inner: Color::Red }
    } else {
        Overlap::BoundariesCross
    }
}

pub fn check_hull_boundaries_cross(s: &BicoloredSet) -> bool {
    !s.linearly_separable() && overlap(s) == Overlap::BoundariesCross
}

/// A red hull edge and a blue hull edge that cross, found by scanning all pairs.
pub fn crossing_hull_edges(s: &BicoloredSet) -> Option<((usize, usize), (usize, usize))> {
    let edges = |c: Color| {
        let h = s.color_hull(c);
        crate::geometry::hull_edges(h.len()).into_iter().map(|(i, j)| (h[i], h[j])).collect::<Vec<_>>()
    };
    let p = s.points();
    for (a, b) in edges(Color::Red) {
        for &(c, d) in &edges(Color::Blue) {
            if segments_cross(p[a], p[b], p[c], p[d]) {
                return Some(((a, b), (c, d)));
            }
        }
    }
    None
}

/// For CH(inner) inside a triangle of the other color: an edge uv of CH(inner)
/// with an open side holding exactly the two outer points `a`, `b` and no
/// inner point. Returns (u, v, a, b) as point indices.
pub fn check_three_outer_condition(s: &BicoloredSet, outer_color: Color) -> Option<(usize, usize, usize, usize)> {
    let inner = outer_color.other();
    let outer = s.indices(outer_color);
    if outer.len() != 3 || !hull_contained(s, inner) {
        return None;
    }
    let pts = s.points();
    let hull = s.color_hull(inner);
    // the right side of a CCW hull edge holds no inner point; a two-point
    // hull yields both directions of its edge
    for (i, j) in crate::geometry::hull_edges(hull.len()) {
        let (u, v) = (hull[i], hull[j]);
        let right: Vec<usize> = outer.iter().copied().filter(|&x| det(&pts[u], &pts[v], &pts[x]) < 0).collect();
        if right.len() == 2 {
            return Some((u, v, right[0], right[1]));
        }
    }
    None
}

/// Direct count over all points: some open side of ℓ(u,v) holds exactly two
/// outer points and no inner point. Quadratic; used to check the fast path.
pub fn three_outer_condition_slow(s: &BicoloredSet, outer_color: Color) -> bool {
    let inner = outer_color.other();
    if s.indices(outer_color).len() != 3 || !hull_contained(s, inner) {
        return false;
    }
    let pts: &[Point] = s.points();
    let hull = s.color_hull(inner);
    crate::geometry::hull_edges(hull.len()).into_iter().any(|(i, j)| {
        let (u, v) = (pts[hull[i]], pts[hull[j]]);
        [1i128, -1].iter().any(|&side| {
            let mut outer_n = 0;
            let mut inner_n = 0;
            for p in pts {
                if det(&u, &v, p).signum() == side {
                    if p.color == outer_color {
                        outer_n += 1;
                    } else {
                        inner_n += 1;
                    }
                }
            }
            outer_n == 2 && inner_n == 0
        })
    })
}
