//! Point families: extremal constructions and random instances.
//!
//! Every constructor validates its output; constructions whose defining
//! property is only claimed (not forced by coordinates) are checked against
//! the decider, the classifier or the oracle before they are returned.

use std::collections::HashSet;
use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classify::{classify_all_edges, EdgeColor};
use crate::decide::decide_balanced_convex_4hole;
use crate::error::{Error, Result};
use crate::geometry::{det, Color, Point};
use crate::holes::count_balanced_4holes;
use crate::oracle;
use crate::pointset::{BicoloredSet, Validation};

/// Above this size, general position is checked on sampled triples only.
pub const EXACT_VALIDATION_LIMIT: usize = 4000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    DoubleChain,
    RegularGonBlack,
    RandomGeneral,
    RandomSeparable,
    SeparableNoConvex,
    TwoRedFewHoles,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::DoubleChain,
        Family::RegularGonBlack,
        Family::RandomGeneral,
        Family::RandomSeparable,
        Family::SeparableNoConvex,
        Family::TwoRedFewHoles,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::DoubleChain => "double-chain",
            Family::RegularGonBlack => "regular-gon-black",
            Family::RandomGeneral => "random-general",
            Family::RandomSeparable => "random-separable",
            Family::SeparableNoConvex => "separable-no-convex",
            Family::TwoRedFewHoles => "two-red-few-holes",
        }
    }

    pub fn parse(name: &str) -> Option<Family> {
        let key = name.trim().to_ascii_lowercase().replace('_', "-");
        Family::ALL.into_iter().find(|f| f.name() == key)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorSpec {
    pub family: Family,
    /// Points per color (double chain, random, separable_no_convex).
    pub n: usize,
    /// Polygon parameter of the black-edge construction.
    pub k: usize,
    /// Blue count of the two-red family.
    pub m: usize,
    /// Inward offset of the black-edge blockers, as a fraction of the edge length.
    /// `None` runs the default schedule.
    pub epsilon: Option<f64>,
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn new(family: Family) -> GeneratorSpec {
        GeneratorSpec { family, n: 4, k: 2, m: 5, epsilon: None, seed: 0 }
    }
}

pub fn generate(spec: &GeneratorSpec) -> Result<BicoloredSet> {
    match spec.family {
        Family::DoubleChain => double_chain(spec.n),
        Family::RegularGonBlack => match spec.epsilon {
            Some(eps) => regular_gon_black(spec.k, eps),
            None => regular_gon_black_scheduled(spec.k).map(|(s, _)| s),
        },
        Family::RandomGeneral => Ok(random_general(spec.n, spec.n, spec.seed, false)),
        Family::RandomSeparable => Ok(random_general(spec.n, spec.n, spec.seed, true)),
        Family::SeparableNoConvex => separable_no_convex(spec.n),
        Family::TwoRedFewHoles => two_red_few_holes(spec.m).map(|(s, _)| s),
    }
}

fn validated(points: Vec<Point>, seed: u64) -> Result<BicoloredSet> {
    let mode = if points.len() <= EXACT_VALIDATION_LIMIT {
        Validation::Exact
    } else {
        Validation::Sampled { triples: 200_000, seed }
    };
    BicoloredSet::with_validation(points, mode)
}

/// n reds on a concave chain facing n blues on a convex chain, far enough
/// apart that no line through two points of one color meets the other hull.
pub fn double_chain(n: usize) -> Result<BicoloredSet> {
    if n < 2 {
        return Err(Error::Precondition("double chain needs n ≥ 2".into()));
    }
    let ni = n as i64;
    // slopes between chain points are below n in absolute value, so a line
    // through two reds stays under n²/4 + n² on the chain's x-range; blues
    // start above 3n² − n²/4
    let gap = 3 * ni * ni;
    let bump = |i: i64| i * (ni - 1 - i);
    let mut pts: Vec<Point> = (0..ni).map(|i| Point::red(i, bump(i))).collect();
    pts.extend((0..ni).map(|i| Point::blue(i, gap - bump(i))));
    if n <= 200 && !far_apart(&pts) {
        return Err(Error::ConstructionUnverified("double chain lines meet the other chain".into()));
    }
    validated(pts, n as u64)
}

fn far_apart(pts: &[Point]) -> bool {
    let same_side = |a: &Point, b: &Point, color: Color| {
        let mut signs = pts.iter().filter(|p| p.color == color).map(|p| det(a, b, p).signum());
        let first = signs.next().unwrap_or(1);
        first != 0 && signs.all(|s| s == first)
    };
    for (i, a) in pts.iter().enumerate() {
        for b in &pts[i + 1..] {
            if a.color == b.color && !same_side(a, b, a.color.other()) {
                return false;
            }
        }
    }
    true
}

/// Radius of the snapped regular polygon.
const GON_RADIUS: f64 = 1.0e7;

/// Regular 2k-gon with alternating colors; each CCW edge gets three points of
/// its origin color just inside it, `epsilon` edge lengths away. Succeeds only
/// if the classifier then reports exactly the 2k polygon edges as black.
pub fn regular_gon_black(k: usize, epsilon: f64) -> Result<BicoloredSet> {
    if k < 2 {
        return Err(Error::Precondition("regular_gon_black needs k ≥ 2".into()));
    }
    if !(epsilon > 0.0 && epsilon.is_finite()) {
        return Err(Error::Precondition("epsilon must be positive".into()));
    }
    let m = 2 * k;
    // an irrational-looking phase keeps symmetric triples off common lines
    let phase = 0.1234;
    let verts: Vec<(f64, f64)> = (0..m)
        .map(|j| {
            let a = phase + 2.0 * PI * j as f64 / m as f64;
            ((GON_RADIUS * a.cos()).round(), (GON_RADIUS * a.sin()).round())
        })
        .collect();
    let color = |j: usize| if j.is_multiple_of(2) { Color::Red } else { Color::Blue };
    let mut pts: Vec<Point> = verts.iter().enumerate().map(|(j, &(x, y))| Point::new(x as i64, y as i64, color(j))).collect();
    for j in 0..m {
        let (ax, ay) = verts[j];
        let (bx, by) = verts[(j + 1) % m];
        let (dx, dy) = (bx - ax, by - ay);
        // inward normal of a CCW edge, scaled to the edge length
        let (nx, ny) = (-dy, dx);
        for (t, depth) in [(0.3, 1.0), (0.5, 0.5), (0.7, 1.0)] {
            let off = epsilon * depth;
            let p = Point::new((ax + t * dx + off * nx).round() as i64, (ay + t * dy + off * ny).round() as i64, color(j));
            pts.push(p);
        }
    }
    let s = BicoloredSet::new(pts).map_err(|e| Error::ConstructionUnverified(format!("placement: {e}")))?;
    let c = classify_all_edges(&s)?;
    let hull = s.hull().len();
    if hull != m || c.summary.black_count != m {
        return Err(Error::ConstructionUnverified(format!(
            "epsilon {epsilon}: {} black edges, expected {m}",
            c.summary.black_count
        )));
    }
    let polygon_black = c
        .edges
        .iter()
        .filter(|e| e.color == EdgeColor::Black)
        .all(|e| e.p < m && e.q < m && ((e.p + 1) % m == e.q || (e.q + 1) % m == e.p));
    if !polygon_black {
        return Err(Error::ConstructionUnverified("a black edge is not a polygon edge".into()));
    }
    Ok(s)
}

/// Epsilons tried, largest first.
pub const EPSILON_SCHEDULE: [f64; 5] = [1.0 / 8.0, 1.0 / 32.0, 1.0 / 128.0, 1.0 / 512.0, 1.0 / 2048.0];

/// First epsilon of the schedule for which the construction verifies.
pub fn regular_gon_black_scheduled(k: usize) -> Result<(BicoloredSet, f64)> {
    let mut last = None;
    for eps in EPSILON_SCHEDULE {
        match regular_gon_black(k, eps) {
            Ok(s) => return Ok((s, eps)),
            Err(e @ Error::ConstructionUnverified(_)) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last.expect("schedule is not empty"))
}

const RANDOM_RANGE: i64 = 1 << 30;
const SEPARATION_GAP: i64 = 1 << 20;

fn sample(rng: &mut ChaCha8Rng, color: Color, separable: bool) -> Point {
    let x = match (separable, color) {
        (false, _) => rng.gen_range(-RANDOM_RANGE..=RANDOM_RANGE),
        (true, Color::Red) => rng.gen_range(-RANDOM_RANGE..=-SEPARATION_GAP),
        (true, Color::Blue) => rng.gen_range(SEPARATION_GAP..=RANDOM_RANGE),
    };
    Point::new(x, rng.gen_range(-RANDOM_RANGE..=RANDOM_RANGE), color)
}

/// Uniform grid points, resampled until duplicate-free and in general
/// position; with `separable` the colors sit on opposite sides of a vertical gap.
pub fn random_general(r: usize, b: usize, seed: u64, separable: bool) -> BicoloredSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = HashSet::new();
    let mut pts = Vec::with_capacity(r + b);
    let colors = std::iter::repeat_n(Color::Red, r).chain(std::iter::repeat_n(Color::Blue, b));
    for c in colors {
        loop {
            let p = sample(&mut rng, c, separable);
            if seen.insert((p.x, p.y)) {
                pts.push(p);
                break;
            }
        }
    }
    loop {
        match validated(pts.clone(), seed) {
            Ok(s) => return s,
            Err(Error::CollinearInput(_, _, bad)) => {
                let i = pts.iter().position(|p| p.same_place(&bad)).expect("reported point is in the set");
                seen.remove(&(bad.x, bad.y));
                loop {
                    let p = sample(&mut rng, bad.color, separable);
                    if seen.insert((p.x, p.y)) {
                        pts[i] = p;
                        break;
                    }
                }
            }
            Err(e) => unreachable!("random points are in range and distinct: {e}"),
        }
    }
}

/// Largest n for which the no-convex construction fits the coordinate range.
pub const NO_CONVEX_MAX_N: usize = 15;

/// Separable n + n set without a balanced convex 4-hole: reds on x = −y²,
/// blues on x = y², both below the axis, at geometrically spaced heights
/// (4^i for reds, 2·4^i for blues). Verified by the decider, and by the
/// oracle when the set is small enough.
pub fn separable_no_convex(n: usize) -> Result<BicoloredSet> {
    if !(2..=NO_CONVEX_MAX_N).contains(&n) {
        return Err(Error::Precondition(format!("separable_no_convex needs 2 ≤ n ≤ {NO_CONVEX_MAX_N}")));
    }
    let mut pts = Vec::with_capacity(2 * n);
    for i in 0..n as u32 {
        let u = 4i64.pow(i);
        pts.push(Point::red(-u * u, -u));
        let v = 2 * u;
        pts.push(Point::blue(v * v, -v));
    }
    let s = BicoloredSet::new(pts)?;
    if !s.linearly_separable() || decide_balanced_convex_4hole(&s).has_hole {
        return Err(Error::ConstructionUnverified("the decider finds a balanced convex 4-hole".into()));
    }
    if s.len() <= oracle::cap() && oracle::has_balanced_convex_4hole(&s) {
        return Err(Error::ConstructionUnverified("the oracle finds a balanced convex 4-hole".into()));
    }
    Ok(s)
}

/// Two reds, four blues shielding the red segment, and the remaining blues on
/// a parabola far beyond the shield. Returns the set with its balanced
/// 4-hole count, which does not depend on m.
pub fn two_red_few_holes(m: usize) -> Result<(BicoloredSet, u64)> {
    if !(5..=100_000).contains(&m) {
        return Err(Error::Precondition("two_red_few_holes needs 5 ≤ m ≤ 100000".into()));
    }
    const S: i64 = 1000;
    let mut base = vec![Point::red(877 * S, -759 * S), Point::red(-599 * S, -746 * S)];
    base.extend([(-206, -727), (53, -718), (576, -644), (-269, -669)].map(|(x, y)| Point::blue(x * S, y * S)));
    let k = (m - 4) as i64;
    let step = 2_500 * S / k;
    let curve = (S * S / ((k - 1) * (k - 1)).max(1)).max(1);
    for lift in 0..100 {
        let mut pts = base.clone();
        pts.extend((0..k).map(|i| {
            let c = 2 * i - (k - 1);
            Point::blue(-1_000 * S + step * i, 2_000 * S + lift + curve * c * c)
        }));
        match validated(pts, m as u64) {
            Ok(s) => {
                let count = count_balanced_4holes(&s);
                return Ok((s, count));
            }
            Err(Error::CollinearInput(..)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::ConstructionUnverified("no collinearity-free lift of the far blues".into()))
}
