//! SVG drawings of points, lines and curves in the affine chart `x0 = 1`.
//!
//! Floating point is used here for display only.

use std::fmt::Write as _;

use crate::geom::{Line, Point};
use crate::poly::HomPoly;

const SIZE: f64 = 600.0;
const GRID: usize = 240;

/// Affine position of a point, `None` at infinity.
pub fn affine(p: &Point) -> Option<(f64, f64)> {
    let c = p.coords();
    if c[0].is_zero() {
        return None;
    }
    let x = (&c[1] / &c[0]).to_f64();
    let y = (&c[2] / &c[0]).to_f64();
    (x.is_finite() && y.is_finite()).then_some((x, y))
}

/// A square viewport `[xmin, ymin, xmax, ymax]` around the finite points,
/// with a margin.
pub fn fit_viewport(points: &[Point]) -> [f64; 4] {
    let xy: Vec<(f64, f64)> = points.iter().filter_map(affine).collect();
    if xy.is_empty() {
        return [-10.0, -10.0, 10.0, 10.0];
    }
    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for (x, y) in xy {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    let span = (x1 - x0).max(y1 - y0).max(2.0) * 1.3;
    let (cx, cy) = ((x0 + x1) / 2.0, (y0 + y1) / 2.0);
    [
        cx - span / 2.0,
        cy - span / 2.0,
        cx + span / 2.0,
        cy + span / 2.0,
    ]
}

/// A polynomial with float coefficients scaled so the largest is 1, for
/// sign tracing.
struct FloatPoly(Vec<([u32; 3], f64)>);

impl FloatPoly {
    fn new(f: &HomPoly) -> FloatPoly {
        let f = f.canonical();
        let big = f
            .terms()
            .map(|(_, c)| c.abs())
            .max()
            .unwrap_or_else(crate::scalar::Scalar::one);
        FloatPoly(f.terms().map(|(m, c)| (*m, (c / &big).to_f64())).collect())
    }

    fn at(&self, x: f64, y: f64) -> f64 {
        self.0
            .iter()
            .map(|(m, c)| c * x.powi(m[1] as i32) * y.powi(m[2] as i32))
            .sum()
    }
}

/// Zero set of `f` in the viewport by marching squares: segments in
/// affine coordinates.
pub fn trace_curve(f: &HomPoly, view: [f64; 4]) -> Vec<[(f64, f64); 2]> {
    let g = FloatPoly::new(f);
    let [x0, y0, x1, y1] = view;
    let dx = (x1 - x0) / GRID as f64;
    let dy = (y1 - y0) / GRID as f64;
    let mut vals = vec![0.0; (GRID + 1) * (GRID + 1)];
    for j in 0..=GRID {
        for i in 0..=GRID {
            vals[j * (GRID + 1) + i] = g.at(x0 + i as f64 * dx, y0 + j as f64 * dy);
        }
    }
    let v = |i: usize, j: usize| vals[j * (GRID + 1) + i];
    let mut segs = Vec::new();
    for j in 0..GRID {
        for i in 0..GRID {
            let corners = [(i, j), (i + 1, j), (i + 1, j + 1), (i, j + 1)];
            let mut hits = Vec::with_capacity(4);
            for k in 0..4 {
                let (a, b) = (corners[k], corners[(k + 1) % 4]);
                let (fa, fb) = (v(a.0, a.1), v(b.0, b.1));
                if (fa >= 0.0) != (fb >= 0.0) {
                    let t = fa / (fa - fb);
                    let px = x0 + (a.0 as f64 + t * (b.0 as f64 - a.0 as f64)) * dx;
                    let py = y0 + (a.1 as f64 + t * (b.1 as f64 - a.1 as f64)) * dy;
                    hits.push((px, py));
                }
            }
            if hits.len() >= 2 {
                segs.push([hits[0], hits[1]]);
            }
            if hits.len() == 4 {
                segs.push([hits[2], hits[3]]);
            }
        }
    }
    segs
}

/// The part of a line inside the viewport, if any.
pub fn clip_line(l: &Line, view: [f64; 4]) -> Option<[(f64, f64); 2]> {
    let [c, a, b] = l.coeffs().clone().map(|s| s.to_f64());
    let [x0, y0, x1, y1] = view;
    let mut hits: Vec<(f64, f64)> = Vec::new();
    let mut add = |p: (f64, f64)| {
        let eps = 1e-9 * (x1 - x0);
        let inside = p.0 >= x0 - eps && p.0 <= x1 + eps && p.1 >= y0 - eps && p.1 <= y1 + eps;
        if inside
            && !hits
                .iter()
                .any(|q| (q.0 - p.0).abs() < eps && (q.1 - p.1).abs() < eps)
        {
            hits.push(p);
        }
    };
    if b != 0.0 {
        for x in [x0, x1] {
            add((x, -(c + a * x) / b));
        }
    }
    if a != 0.0 {
        for y in [y0, y1] {
            add((-(c + b * y) / a, y));
        }
    }
    (hits.len() >= 2).then(|| [hits[0], hits[1]])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Style {
    Curve,
    Construction,
    Highlight,
}

impl Style {
    fn stroke(self) -> (&'static str, f64) {
        match self {
            Style::Curve => ("#1f4e9c", 2.0),
            Style::Construction => ("#888888", 1.0),
            Style::Highlight => ("#c0392b", 1.5),
        }
    }
}

/// An SVG document under construction.
pub struct Canvas {
    view: [f64; 4],
    labels: bool,
    body: String,
}

impl Canvas {
    pub fn new(view: [f64; 4], labels: bool) -> Canvas {
        Canvas {
            view,
            labels,
            body: String::new(),
        }
    }

    pub fn viewport(&self) -> [f64; 4] {
        self.view
    }

    fn px(&self, (x, y): (f64, f64)) -> (f64, f64) {
        let [x0, y0, x1, y1] = self.view;
        ((x - x0) / (x1 - x0) * SIZE, (y1 - y) / (y1 - y0) * SIZE)
    }

    /// Draws the curve `f = 0`; returns the number of segments.
    pub fn curve(&mut self, f: &HomPoly, style: Style) -> usize {
        let segs = trace_curve(f, self.view);
        if segs.is_empty() {
            return 0;
        }
        let (stroke, width) = style.stroke();
        let mut d = String::new();
        for [p, q] in &segs {
            let (a, b) = (self.px(*p), self.px(*q));
            let _ = write!(d, "M{:.2} {:.2}L{:.2} {:.2}", a.0, a.1, b.0, b.1);
        }
        let _ = writeln!(
            self.body,
            r#"<path d="{d}" fill="none" stroke="{stroke}" stroke-width="{width}" stroke-linecap="round"/>"#
        );
        segs.len()
    }

    /// Draws a line clipped to the viewport; false if it misses it.
    pub fn line(&mut self, l: &Line, label: Option<&str>, style: Style) -> bool {
        let Some([p, q]) = clip_line(l, self.view) else {
            return false;
        };
        let (a, b) = (self.px(p), self.px(q));
        let (stroke, width) = style.stroke();
        let _ = writeln!(
            self.body,
            r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="{stroke}" stroke-width="{width}"/>"#,
            a.0, a.1, b.0, b.1
        );
        if let (true, Some(text)) = (self.labels, label) {
            let (mx, my) = ((a.0 * 0.8 + b.0 * 0.2), (a.1 * 0.8 + b.1 * 0.2));
            self.text(mx + 4.0, my - 4.0, text, stroke);
        }
        true
    }

    /// Draws a point; false if it is at infinity or outside the viewport.
    pub fn point(&mut self, p: &Point, label: Option<&str>, style: Style) -> bool {
        let Some(xy) = affine(p) else { return false };
        let (x, y) = self.px(xy);
        if !(0.0..=SIZE).contains(&x) || !(0.0..=SIZE).contains(&y) {
            return false;
        }
        let fill = match style {
            Style::Highlight => "#c0392b",
            _ => "#111111",
        };
        let _ = writeln!(
            self.body,
            r#"<circle cx="{x:.2}" cy="{y:.2}" r="4" fill="{fill}"/>"#
        );
        if let (true, Some(text)) = (self.labels, label) {
            self.text(x + 6.0, y - 6.0, text, fill);
        }
        true
    }

    fn text(&mut self, x: f64, y: f64, text: &str, fill: &str) {
        let _ = writeln!(
            self.body,
            r#"<text x="{x:.2}" y="{y:.2}" font-family="serif" font-style="italic" font-size="15" fill="{fill}">{}</text>"#,
            escape(&subscripts(text))
        );
    }

    pub fn finish(self) -> String {
        format!(
            concat!(
                r#"<svg xmlns="http://www.w3.org/2000/svg" width="{s}" height="{s}" viewBox="0 0 {s} {s}">"#,
                "\n",
                r##"<rect width="{s}" height="{s}" fill="#ffffff"/>"##,
                "\n{body}</svg>\n"
            ),
            s = SIZE,
            body = self.body
        )
    }
}

/// `a_1` is shown as `a₁`.
fn subscripts(name: &str) -> String {
    let mut out = String::new();
    let mut sub = false;
    for ch in name.chars() {
        match ch {
            '_' => sub = true,
            d @ '0'..='9' if sub => {
                out.push(char::from_u32(0x2080 + d.to_digit(10).unwrap()).unwrap())
            }
            c => {
                sub = false;
                out.push(c);
            }
        }
    }
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    #[test]
    fn circle_trace_stays_on_the_circle() {
        // x1^2 + x2^2 - 4 x0^2
        let mut f = HomPoly::zero(2);
        f.add_term([0, 2, 0], Scalar::one());
        f.add_term([0, 0, 2], Scalar::one());
        f.add_term([2, 0, 0], Scalar::from(-4));
        let segs = trace_curve(&f, [-3.0, -3.0, 3.0, 3.0]);
        assert!(segs.len() > 100);
        for [p, q] in segs {
            for (x, y) in [p, q] {
                assert!(((x * x + y * y).sqrt() - 2.0).abs() < 0.05);
            }
        }
    }

    #[test]
    fn clipping() {
        let view = [-1.0, -1.0, 1.0, 1.0];
        // x = y
        let [p, q] = clip_line(&Line::new(0, 1, -1), view).unwrap();
        assert!((p.0 - p.1).abs() < 1e-12 && (q.0 - q.1).abs() < 1e-12);
        assert!((p.0 - q.0).abs() > 1.9);
        // x = 5
        assert!(clip_line(&Line::new(-5, 1, 0), view).is_none());
    }

    #[test]
    fn labels_and_output() {
        assert_eq!(subscripts("b_1"), "b₁");
        assert_eq!(subscripts("AB"), "AB");
        let mut c = Canvas::new([-1.0, -1.0, 1.0, 1.0], true);
        assert!(c.point(&Point::affine(0, 0), Some("a_1"), Style::Highlight));
        assert!(!c.point(&Point::new(0, 1, 0), Some("p"), Style::Highlight));
        let svg = c.finish();
        assert!(svg.starts_with("<svg") && svg.contains("a₁") && svg.ends_with("</svg>\n"));
    }
}
