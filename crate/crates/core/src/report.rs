//! JSON shapes emitted by the command line tool.

use serde::Serialize;
use serde_json::Value;

use crate::classify::{Classification, ClassificationSummary, LemmaReport};
use crate::decide::ConvexDecision;
use crate::geometry::Point;
use crate::holes::{
    count_balanced_4holes_detailed, general_lower_bound, is_empty_polygon, is_simple, quadratic_lower_bound,
    separable_lower_bound, HolePolygon,
};
use crate::oracle;
use crate::pointset::BicoloredSet;

/// `[x, y, "R"|"B"]`, coordinates as JSON numbers in the input's units.
pub fn point_json(s: &BicoloredSet, p: &Point) -> Value {
    let coord = |v: i64| -> Value {
        if s.scale() == 0 {
            Value::from(v)
        } else {
            s.coord_text(v).parse::<f64>().map(Value::from).unwrap_or(Value::Null)
        }
    };
    Value::Array(vec![coord(p.x), coord(p.y), Value::from(p.color.letter().to_string())])
}

pub fn polygon_json(s: &BicoloredSet, h: &HolePolygon) -> Value {
    Value::Array(h.vertices.iter().map(|p| point_json(s, p)).collect())
}

#[derive(Clone, Debug, Serialize)]
pub struct CountReport {
    pub n_red: usize,
    pub n_blue: usize,
    pub balanced_4holes: u64,
    pub convex_balanced_4holes: u64,
    pub empty_triangles: u64,
    pub separable: bool,
    /// The bound that applies to this set: the separable or quadratic bound
    /// when |R| = |B|, otherwise the general two-count bound.
    pub lower_bound: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_count: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agreement: Option<bool>,
}

pub fn applicable_lower_bound(s: &BicoloredSet) -> i64 {
    let (r, b) = (s.red_count() as i64, s.blue_count() as i64);
    if r != b {
        general_lower_bound(r, b)
    } else if s.linearly_separable() {
        separable_lower_bound(r)
    } else {
        quadratic_lower_bound(r)
    }
}

/// Counts, optionally cross-checked against the oracle (which enforces its size cap).
pub fn count_report(s: &BicoloredSet, with_oracle: bool) -> crate::Result<CountReport> {
    let c = count_balanced_4holes_detailed(s);
    let oracle_count = if with_oracle { Some(oracle::count_balanced_4holes(s)?) } else { None };
    Ok(CountReport {
        n_red: s.red_count(),
        n_blue: s.blue_count(),
        balanced_4holes: c.total,
        convex_balanced_4holes: c.convex,
        empty_triangles: c.empty_triangles,
        separable: s.linearly_separable(),
        lower_bound: applicable_lower_bound(s),
        agreement: oracle_count.map(|o| o == c.total),
        oracle_count,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct DecisionReport {
    pub has_hole: bool,
    pub condition: String,
    pub witness: Option<Value>,
}

pub fn decision_report(s: &BicoloredSet, d: &ConvexDecision) -> DecisionReport {
    DecisionReport {
        has_hole: d.has_hole,
        condition: d.condition.name().to_string(),
        witness: d.witness.as_ref().map(|w| polygon_json(s, w)),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct KholeReport {
    pub k: usize,
    pub polygon: Value,
    pub simple: bool,
    pub empty: bool,
    pub balanced: bool,
    pub valid: bool,
}

pub fn khole_report(s: &BicoloredSet, k: usize, h: &HolePolygon) -> KholeReport {
    let simple = h.is_segment || is_simple(&h.vertices);
    let empty = h.is_segment || is_empty_polygon(s, &h.vertices).unwrap_or(false);
    let balanced = h.red_vertex_count == k && h.blue_vertex_count == k;
    KholeReport { k, polygon: polygon_json(s, h), simple, empty, balanced, valid: simple && empty && balanced }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassifyReport {
    pub summary: ClassificationSummary,
    /// Present when |R| = |B|.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lemmas: Option<LemmaReport>,
}

pub fn classify_report(s: &BicoloredSet, c: &Classification) -> crate::Result<ClassifyReport> {
    let lemmas = if s.red_count() == s.blue_count() { Some(crate::classify::verify_counting_lemmas(s)?) } else { None };
    Ok(ClassifyReport { summary: c.summary.clone(), lemmas })
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("report types serialize");
    out.push('\n');
    out
}
