//! Static SVG pictures: reds as solid dots, blues as small open circles.

use std::fmt::Write as _;

use crate::classify::{Classification, EdgeColor};
use crate::geometry::{Color, Point};
use crate::holes::HolePolygon;
use crate::pointset::BicoloredSet;

#[derive(Clone, Debug)]
pub struct RenderOptions {
    /// Width and height of the square canvas in pixels.
    pub size: u32,
    pub margin: u32,
    pub red: String,
    pub blue: String,
}

impl Default for RenderOptions {
    fn default() -> RenderOptions {
        RenderOptions { size: 600, margin: 24, red: "#c62828".into(), blue: "#1565c0".into() }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Overlays<'a> {
    pub hole: Option<&'a HolePolygon>,
    pub edges: Option<&'a Classification>,
}

fn edge_stroke(c: EdgeColor, opts: &RenderOptions) -> &str {
    match c {
        EdgeColor::Green => "#2e7d32",
        EdgeColor::Black => "#000000",
        EdgeColor::Red => &opts.red,
        EdgeColor::Blue => &opts.blue,
    }
}

/// Maps set coordinates onto the canvas, y pointing up, aspect preserved.
struct Frame {
    min_x: f64,
    max_y: f64,
    unit: f64,
    pad_x: f64,
    pad_y: f64,
}

impl Frame {
    fn new(points: &[Point], opts: &RenderOptions) -> Frame {
        let xs = points.iter().map(|p| p.x as f64);
        let ys = points.iter().map(|p| p.y as f64);
        let (min_x, max_x) = xs.fold((f64::MAX, f64::MIN), |(a, b), v| (a.min(v), b.max(v)));
        let (min_y, max_y) = ys.fold((f64::MAX, f64::MIN), |(a, b), v| (a.min(v), b.max(v)));
        let inner = (opts.size - 2 * opts.margin) as f64;
        let span = (max_x - min_x).max(max_y - min_y).max(1.0);
        let unit = inner / span;
        let m = opts.margin as f64;
        Frame {
            min_x,
            max_y,
            unit,
            pad_x: m + (inner - (max_x - min_x) * unit) / 2.0,
            pad_y: m + (inner - (max_y - min_y) * unit) / 2.0,
        }
    }

    fn map(&self, p: &Point) -> (f64, f64) {
        (self.pad_x + (p.x as f64 - self.min_x) * self.unit, self.pad_y + (self.max_y - p.y as f64) * self.unit)
    }
}

/// Byte-identical output for identical input.
pub fn render_svg(s: &BicoloredSet, overlays: Overlays<'_>, opts: &RenderOptions) -> String {
    let pts = s.points();
    let mut out = String::new();
    let size = opts.size;
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    )
    .unwrap();
    writeln!(out, r##"<rect width="100%" height="100%" fill="#ffffff"/>"##).unwrap();
    if pts.is_empty() {
        out.push_str("</svg>\n");
        return out;
    }
    let frame = Frame::new(pts, opts);
    if let Some(c) = overlays.edges {
        out.push_str("<g stroke-width=\"1\" stroke-opacity=\"0.7\">\n");
        for e in &c.edges {
            let (x1, y1) = frame.map(&pts[e.p]);
            let (x2, y2) = frame.map(&pts[e.q]);
            writeln!(
                out,
                r#"<line class="{}" x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="{}"/>"#,
                e.color.name(),
                edge_stroke(e.color, opts)
            )
            .unwrap();
        }
        out.push_str("</g>\n");
    }
    if let Some(h) = overlays.hole {
        let mut d = String::new();
        for (i, v) in h.vertices.iter().enumerate() {
            let (x, y) = frame.map(v);
            write!(d, "{}{x:.2},{y:.2} ", if i == 0 { "M" } else { "L" }).unwrap();
        }
        d.push('Z');
        writeln!(out, r##"<path class="hole" d="{d}" fill="#ffd54f" fill-opacity="0.5" stroke="#6d4c41" stroke-width="2"/>"##)
            .unwrap();
    }
    let r = (opts.size as f64 / 120.0).max(2.0);
    for p in pts {
        let (x, y) = frame.map(p);
        match p.color {
            Color::Red => writeln!(out, r#"<circle cx="{x:.2}" cy="{y:.2}" r="{r:.2}" fill="{}"/>"#, opts.red),
            Color::Blue => writeln!(
                out,
                r##"<circle cx="{x:.2}" cy="{y:.2}" r="{r:.2}" fill="#ffffff" stroke="{}" stroke-width="1.5"/>"##,
                opts.blue
            ),
        }
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::holes::enumerate_balanced_4holes;

    #[test]
    fn four_points_four_markers() {
        let s = BicoloredSet::parse("0 0 R\n4 0 B\n4 4 R\n0 4 B\n").unwrap();
        let svg = render_svg(&s, Overlays::default(), &RenderOptions::default());
        assert_eq!(svg.matches("<circle").count(), 4);
        assert!(svg.starts_with("<svg") && svg.ends_with("</svg>\n"));
    }

    #[test]
    fn hole_overlay_is_a_four_vertex_path() {
        let s = BicoloredSet::parse("0 0 R\n4 0 B\n4 4 R\n0 4 B\n").unwrap();
        let h = &enumerate_balanced_4holes(&s)[0];
        let svg = render_svg(&s, Overlays { hole: Some(h), edges: None }, &RenderOptions::default());
        let path = svg.lines().find(|l| l.contains("class=\"hole\"")).unwrap();
        assert_eq!(path.matches('L').count(), 3);
        assert_eq!(svg, render_svg(&s, Overlays { hole: Some(h), edges: None }, &RenderOptions::default()));
    }
}
