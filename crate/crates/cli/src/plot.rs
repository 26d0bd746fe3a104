//! Static SVG rendering of a classified instance: the polygon, the dashed
//! chord `P_1 P_n`, the half-plane that holds a convex polygon, and vertex
//! labels. Output depends only on the input, so identical instances give
//! byte-identical files.

use std::fmt::Write as _;

use convexseq::{PointSeq, PolygonVerdict, VerdictKind};

const SIZE: f64 = 480.0;
const MARGIN: f64 = 40.0;

struct View {
    min_x: f64,
    min_y: f64,
    scale: f64,
}

impl View {
    fn fit(points: &[(f64, f64)]) -> View {
        let (mut min_x, mut max_x, mut min_y, mut max_y) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
        for &(x, y) in points {
            min_x = min_x.min(x);
            max_x = max_x.max(x);
            min_y = min_y.min(y);
            max_y = max_y.max(y);
        }
        let extent = (max_x - min_x).max(max_y - min_y).max(1e-9);
        View {
            min_x,
            min_y,
            scale: (SIZE - 2.0 * MARGIN) / extent,
        }
    }

    fn px(&self, x: f64) -> f64 {
        MARGIN + (x - self.min_x) * self.scale
    }

    // SVG y grows downward
    fn py(&self, y: f64) -> f64 {
        SIZE - MARGIN - (y - self.min_y) * self.scale
    }

    fn world_x(&self, px: f64) -> f64 {
        self.min_x + (px - MARGIN) / self.scale
    }
}

fn num(v: f64) -> String {
    let s = format!("{v:.2}");
    if s == "-0.00" {
        "0.00".to_owned()
    } else {
        s
    }
}

pub fn render_svg(seq: &PointSeq, verdict: &PolygonVerdict) -> String {
    let pts: Vec<(f64, f64)> = seq.points().iter().map(|p| (p.x.to_f64(), p.y.to_f64())).collect();
    let view = View::fit(&pts);
    let n = pts.len();
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{s}" height="{s}" viewBox="0 0 {s} {s}">"#,
        s = SIZE
    );
    let _ = writeln!(out, r#"  <rect width="100%" height="100%" fill="white"/>"#);

    let (x1, y1) = pts[0];
    let (xn, yn) = pts[n - 1];
    let chord_at = |x: f64| y1 + (x - x1) * (yn - y1) / (xn - x1);

    // Half-plane band clipped to the canvas: the chord line across the full
    // width, closed off along the bottom or top edge.
    let band_edge = match verdict.kind {
        VerdictKind::ConvexBelowChord => Some(SIZE),
        VerdictKind::ConvexAboveChord => Some(0.0),
        _ => None,
    };
    if let Some(edge) = band_edge {
        let (left, right) = (view.world_x(0.0), view.world_x(SIZE));
        let _ = writeln!(
            out,
            r##"  <polygon class="halfspace" points="0.00,{} {},{} {},{} 0.00,{}" fill="#4a90d9" fill-opacity="0.15" stroke="none"/>"##,
            num(view.py(chord_at(left))),
            num(SIZE),
            num(view.py(chord_at(right))),
            num(SIZE),
            num(edge),
            num(edge)
        );
    }

    for i in 0..n {
        let (a, b) = (pts[i], pts[(i + 1) % n]);
        let _ = writeln!(
            out,
            r##"  <line class="edge" x1="{}" y1="{}" x2="{}" y2="{}" stroke="#222222" stroke-width="2"/>"##,
            num(view.px(a.0)),
            num(view.py(a.1)),
            num(view.px(b.0)),
            num(view.py(b.1))
        );
    }
    let _ = writeln!(
        out,
        r##"  <line class="chord" x1="{}" y1="{}" x2="{}" y2="{}" stroke="#d0021b" stroke-width="1.5" stroke-dasharray="6 4"/>"##,
        num(view.px(x1)),
        num(view.py(y1)),
        num(view.px(xn)),
        num(view.py(yn))
    );

    for (i, &(x, y)) in pts.iter().enumerate() {
        let (cx, cy) = (view.px(x), view.py(y));
        if verdict.witness == Some(i + 1) {
            let _ = writeln!(
                out,
                r##"  <circle class="witness" cx="{}" cy="{}" r="9" fill="none" stroke="#f5a623" stroke-width="3"/>"##,
                num(cx),
                num(cy)
            );
        }
        let _ = writeln!(
            out,
            r##"  <circle class="vertex" cx="{}" cy="{}" r="3.5" fill="#222222"/>"##,
            num(cx),
            num(cy)
        );
        let _ = writeln!(
            out,
            r#"  <text class="label" x="{}" y="{}" font-family="sans-serif" font-size="13">P{}</text>"#,
            num(cx + 6.0),
            num(cy - 6.0),
            i + 1
        );
    }
    let _ = writeln!(
        out,
        r#"  <text class="verdict" x="{}" y="24" font-family="sans-serif" font-size="14">{}{}</text>"#,
        num(MARGIN),
        verdict.kind,
        if verdict.is_convex() && !verdict.strict {
            " (weak)"
        } else {
            ""
        }
    );
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use convexseq::classify;

    fn render(coords: &[(i64, i64)]) -> String {
        let p = PointSeq::from_integers(coords, false).unwrap();
        render_svg(&p, &classify(&p))
    }

    #[test]
    fn triangle_structure() {
        let svg = render(&[(0, 0), (2, 2), (3, 1)]);
        assert_eq!(svg.matches(r#"class="edge""#).count(), 3);
        assert_eq!(svg.matches(r#"class="chord""#).count(), 1);
        assert!(svg.contains("stroke-dasharray"));
        assert_eq!(svg.matches(r#"class="label""#).count(), 3);
        assert!(svg.contains(r#"class="halfspace""#));
        assert!(!svg.contains(r#"class="witness""#));
    }

    #[test]
    fn below_chord_band_runs_to_bottom_edge() {
        let svg = render(&[(0, 0), (1, 0), (2, 1), (3, 3)]);
        let band = svg.lines().find(|l| l.contains("halfspace")).unwrap();
        assert!(band.contains(" 480.00,480.00 0.00,480.00\""), "{band}");
    }

    #[test]
    fn not_convex_highlights_witness_without_band() {
        let svg = render(&[(0, 0), (1, 2), (2, 1), (3, 3)]);
        assert_eq!(svg.matches(r#"class="witness""#).count(), 1);
        assert!(!svg.contains("halfspace"));
        assert_eq!(svg.matches(r#"class="edge""#).count(), 4);
    }

    #[test]
    fn output_is_deterministic() {
        let a = render(&[(0, 0), (1, 0), (2, 1), (3, 3)]);
        let b = render(&[(0, 0), (1, 0), (2, 1), (3, 3)]);
        assert_eq!(a, b);
    }
}
