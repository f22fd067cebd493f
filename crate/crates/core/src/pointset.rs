//! Validated bicolored point sets and the `x y c` text format.

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::{det, hull_of_sorted, hulls_disjoint, lex_sorted, Color, Point, COORD_LIMIT};

/// How thoroughly general position is checked at construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Validation {
    /// Every triple, via an angular sort around each point. O(n² log n).
    Exact,
    /// Duplicates exactly, collinearity on random triples only. For large benchmark inputs.
    Sampled { triples: usize, seed: u64 },
}

#[derive(Clone, Debug)]
pub struct BicoloredSet {
    points: Vec<Point>,
    red_idx: Vec<usize>,
    blue_idx: Vec<usize>,
    /// Decimal digits after the point: a grid coordinate v stands for v / 10^scale.
    scale: u32,
    hull: Vec<usize>,
    red_hull: Vec<usize>,
    blue_hull: Vec<usize>,
}

impl BicoloredSet {
    pub fn new(points: Vec<Point>) -> Result<BicoloredSet> {
        BicoloredSet::with_validation(points, Validation::Exact)
    }

    pub fn with_validation(points: Vec<Point>, mode: Validation) -> Result<BicoloredSet> {
        BicoloredSet::build(points, 0, mode)
    }

    fn build(points: Vec<Point>, scale: u32, mode: Validation) -> Result<BicoloredSet> {
        for p in &points {
            if p.x.abs() >= COORD_LIMIT || p.y.abs() >= COORD_LIMIT {
                return Err(Error::CoordinateRange(format!("({}, {})", p.x, p.y)));
            }
        }
        let sorted = lex_sorted(&points);
        if let Some(w) = sorted.windows(2).find(|w| w[0].0.same_place(&w[1].0)) {
            return Err(Error::DuplicatePoint { x: w[1].0.x, y: w[1].0.y });
        }
        match mode {
            Validation::Exact => check_collinear_exact(&points)?,
            Validation::Sampled { triples, seed } => check_collinear_sampled(&points, triples, seed)?,
        }
        let red_idx: Vec<usize> = (0..points.len()).filter(|&i| points[i].color == Color::Red).collect();
        let blue_idx: Vec<usize> = (0..points.len()).filter(|&i| points[i].color == Color::Blue).collect();
        let hull = hull_of_sorted(&sorted);
        let sub_hull = |c: Color| {
            let sub: Vec<(Point, usize)> = sorted.iter().copied().filter(|(p, _)| p.color == c).collect();
            hull_of_sorted(&sub)
        };
        let red_hull = sub_hull(Color::Red);
        let blue_hull = sub_hull(Color::Blue);
        Ok(BicoloredSet { points, red_idx, blue_idx, scale, hull, red_hull, blue_hull })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, i: usize) -> Point {
        self.points[i]
    }

    pub fn red_count(&self) -> usize {
        self.red_idx.len()
    }

    pub fn blue_count(&self) -> usize {
        self.blue_idx.len()
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    /// Indices of the points of one color, in input order.
    pub fn indices(&self, c: Color) -> &[usize] {
        match c {
            Color::Red => &self.red_idx,
            Color::Blue => &self.blue_idx,
        }
    }

    pub fn colored(&self, c: Color) -> Vec<Point> {
        self.indices(c).iter().map(|&i| self.points[i]).collect()
    }

    /// CCW hull of the whole set, as point indices.
    pub fn hull(&self) -> &[usize] {
        &self.hull
    }

    /// CCW hull of one color class, as point indices.
    pub fn color_hull(&self, c: Color) -> &[usize] {
        match c {
            Color::Red => &self.red_hull,
            Color::Blue => &self.blue_hull,
        }
    }

    pub fn color_hull_points(&self, c: Color) -> Vec<Point> {
        self.color_hull(c).iter().map(|&i| self.points[i]).collect()
    }

    pub fn index_of(&self, p: &Point) -> Option<usize> {
        self.points.iter().position(|q| q.same_place(p))
    }

    pub fn linearly_separable(&self) -> bool {
        hulls_disjoint(&self.color_hull_points(Color::Red), &self.color_hull_points(Color::Blue))
    }

    /// Same points with colors exchanged.
    pub fn swapped(&self) -> BicoloredSet {
        let mut s = self.clone();
        for p in &mut s.points {
            p.color = p.color.other();
        }
        std::mem::swap(&mut s.red_idx, &mut s.blue_idx);
        std::mem::swap(&mut s.red_hull, &mut s.blue_hull);
        s
    }

    pub fn parse(text: &str) -> Result<BicoloredSet> {
        BicoloredSet::parse_with(text, Validation::Exact)
    }

    pub fn parse_with(text: &str, mode: Validation) -> Result<BicoloredSet> {
        let mut raw: Vec<(Decimal, Decimal, Color)> = Vec::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let perr = |msg: String| Error::Parse { line: n + 1, msg };
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 3 {
                return Err(perr(format!("expected `x y c`, got {} fields", fields.len())));
            }
            let x = Decimal::parse(fields[0]).map_err(perr)?;
            let y = Decimal::parse(fields[1]).map_err(perr)?;
            let c = match fields[2] {
                "R" | "r" => Color::Red,
                "B" | "b" => Color::Blue,
                other => return Err(perr(format!("unknown color `{other}`"))),
            };
            raw.push((x, y, c));
        }
        let scale = raw.iter().map(|(x, y, _)| x.frac_digits.max(y.frac_digits)).max().unwrap_or(0);
        let mut points = Vec::with_capacity(raw.len());
        for (x, y, c) in raw {
            points.push(Point::new(x.on_grid(scale)?, y.on_grid(scale)?, c));
        }
        BicoloredSet::build(points, scale, mode)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for p in &self.points {
            let _ = writeln!(
                out,
                "{} {} {}",
                format_coord(p.x, self.scale),
                format_coord(p.y, self.scale),
                p.color
            );
        }
        out
    }

    pub fn coord_text(&self, v: i64) -> String {
        format_coord(v, self.scale)
    }
}

/// A finite decimal literal, kept as digits plus a count of fractional digits.
#[derive(Clone, Copy, Debug)]
struct Decimal {
    mantissa: i128,
    frac_digits: u32,
}

impl Decimal {
    fn parse(s: &str) -> std::result::Result<Decimal, String> {
        let (neg, body) = match s.as_bytes().first() {
            Some(b'-') => (true, &s[1..]),
            Some(b'+') => (false, &s[1..]),
            _ => (false, s),
        };
        let (int, frac) = match body.split_once('.') {
            Some((i, f)) => (i, f),
            None => (body, ""),
        };
        if int.is_empty() && frac.is_empty() {
            return Err(format!("bad number `{s}`"));
        }
        if !int.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit()) {
            return Err(format!("bad number `{s}`"));
        }
        let frac = frac.trim_end_matches('0');
        let digits = format!("{int}{frac}");
        let digits = digits.trim_start_matches('0');
        if digits.len() > 30 {
            return Err(format!("number `{s}` has too many digits"));
        }
        let mut mantissa: i128 = if digits.is_empty() { 0 } else { digits.parse().map_err(|_| format!("bad number `{s}`"))? };
        if neg {
            mantissa = -mantissa;
        }
        Ok(Decimal { mantissa, frac_digits: frac.len() as u32 })
    }

    fn on_grid(&self, scale: u32) -> Result<i64> {
        let shift = scale - self.frac_digits;
        let v = 10i128
            .checked_pow(shift)
            .and_then(|f| self.mantissa.checked_mul(f))
            .filter(|v| v.abs() < COORD_LIMIT as i128)
            .ok_or_else(|| Error::CoordinateRange(format!("{} at scale 10^-{scale}", self.mantissa)))?;
        Ok(v as i64)
    }
}

pub fn format_coord(v: i64, scale: u32) -> String {
    if scale == 0 {
        return v.to_string();
    }
    let neg = v < 0;
    let digits = format!("{:0width$}", v.unsigned_abs(), width = scale as usize + 1);
    let (int, frac) = digits.split_at(digits.len() - scale as usize);
    let frac = frac.trim_end_matches('0');
    let sign = if neg { "-" } else { "" };
    if frac.is_empty() {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}

/// Direction from a to b folded into the upper half-plane, so that collinear
/// neighbours of a compare equal.
fn folded(a: &Point, b: &Point) -> (i128, i128) {
    let dx = b.x as i128 - a.x as i128;
    let dy = b.y as i128 - a.y as i128;
    if dy < 0 || (dy == 0 && dx < 0) {
        (-dx, -dy)
    } else {
        (dx, dy)
    }
}

fn check_collinear_exact(points: &[Point]) -> Result<()> {
    let n = points.len();
    let mut dirs: Vec<(i128, i128, usize)> = Vec::with_capacity(n);
    for i in 0..n {
        dirs.clear();
        dirs.extend((i + 1..n).map(|j| {
            let (dx, dy) = folded(&points[i], &points[j]);
            (dx, dy, j)
        }));
        dirs.sort_by(|a, b| (b.0 * a.1).cmp(&(a.0 * b.1)));
        for w in dirs.windows(2) {
            if w[0].0 * w[1].1 == w[0].1 * w[1].0 {
                return Err(Error::CollinearInput(points[i], points[w[0].2], points[w[1].2]));
            }
        }
    }
    Ok(())
}

fn check_collinear_sampled(points: &[Point], triples: usize, seed: u64) -> Result<()> {
    let n = points.len();
    if n < 3 {
        return Ok(());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..triples {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        let c = rng.gen_range(0..n);
        if a != b && b != c && a != c && det(&points[a], &points[b], &points[c]) == 0 {
            return Err(Error::CollinearInput(points[a], points[b], points[c]));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_mixed_decimals() {
        let s = BicoloredSet::parse("# sample\n0 0 R\n1.5 0 B\n\n0 -0.25 R\n").unwrap();
        assert_eq!(s.scale(), 2);
        assert_eq!(s.point(1), Point::blue(150, 0));
        assert_eq!(s.point(2), Point::red(0, -25));
        assert_eq!(s.red_count(), 2);
        assert_eq!(s.blue_count(), 1);
        assert_eq!(s.to_text(), "0 0 R\n1.5 0 B\n0 -0.25 R\n");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(BicoloredSet::parse("0 0 G\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(BicoloredSet::parse("0 0\n"), Err(Error::Parse { .. })));
        assert!(matches!(BicoloredSet::parse("0 x R\n"), Err(Error::Parse { .. })));
        assert!(matches!(BicoloredSet::parse("0 0 R\n0.0 0 B\n"), Err(Error::DuplicatePoint { .. })));
        assert!(matches!(
            BicoloredSet::parse("0 0 R\n1 1 B\n2.0 2 R\n"),
            Err(Error::CollinearInput(..))
        ));
    }

    #[test]
    fn collinear_exact_matches_triple_scan() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(3..9);
            let pts: Vec<Point> = (0..n).map(|_| Point::red(rng.gen_range(-3..4), rng.gen_range(-3..4))).collect();
            if (0..n).any(|i| (0..i).any(|j| pts[i].same_place(&pts[j]))) {
                continue;
            }
            let mut brute = false;
            for a in 0..n {
                for b in a + 1..n {
                    for c in b + 1..n {
                        brute |= det(&pts[a], &pts[b], &pts[c]) == 0;
                    }
                }
            }
            assert_eq!(check_collinear_exact(&pts).is_err(), brute);
        }
    }

    #[test]
    fn coord_formatting() {
        assert_eq!(format_coord(-5, 2), "-0.05");
        assert_eq!(format_coord(120, 2), "1.2");
        assert_eq!(format_coord(-300, 2), "-3");
        assert_eq!(format_coord(7, 0), "7");
    }

    #[test]
    fn separability() {
        let s = BicoloredSet::parse("0 0 R\n0 1 R\n5 0 B\n5 1 B\n").unwrap();
        assert!(s.linearly_separable());
        let s = BicoloredSet::parse("0 0 R\n10 0 R\n0 10 R\n1 1 B\n2 3 B\n").unwrap();
        assert!(!s.linearly_separable());
        let s = BicoloredSet::parse("0 0 R\n2 2 R\n0 2 B\n2 0 B\n").unwrap();
        assert!(!s.linearly_separable());
    }
}
