//! SVG plots of a graphic: definite edges solid, indefinite edges dashed,
//! cusps and inflections marked. The y-axis is flipped so the second
//! coordinate increases from bottom to top on screen.

use std::fmt::Write as _;

use graphic_core::{features, tangency_points, FoldType, Graphic, Point, VertexKind};

const MARGIN: f64 = 0.25;

struct Mapper {
    scale: f64,
    min: Point,
    max: Point,
}

impl Mapper {
    fn new(g: &Graphic, extra: Option<&Graphic>) -> Mapper {
        let mut min = Point::new(f64::INFINITY, f64::INFINITY);
        let mut max = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        let mut take = |g: &Graphic| {
            for (_, seg) in g.segments() {
                let (lo, hi) = seg.bezier.control_bbox();
                min.x = min.x.min(lo.x);
                min.y = min.y.min(lo.y);
                max.x = max.x.max(hi.x);
                max.y = max.y.max(hi.y);
            }
        };
        take(g);
        if let Some(e) = extra {
            take(e);
        }
        min.x -= MARGIN;
        min.y -= MARGIN;
        max.x += MARGIN;
        max.y += MARGIN;
        let span = (max.x - min.x).max(max.y - min.y);
        Mapper {
            scale: 640.0 / span,
            min,
            max,
        }
    }

    fn width(&self) -> f64 {
        (self.max.x - self.min.x) * self.scale
    }

    fn height(&self) -> f64 {
        (self.max.y - self.min.y) * self.scale
    }

    // Flip y so the graphic's vertical coordinate grows upward on screen.
    fn map(&self, p: Point) -> (f64, f64) {
        (
            (p.x - self.min.x) * self.scale,
            (self.max.y - p.y) * self.scale,
        )
    }
}

fn path_data(m: &Mapper, g: &Graphic, fold: FoldType) -> String {
    let mut d = String::new();
    for comp in &g.components {
        for seg in &comp.segments {
            if seg.fold != fold {
                continue;
            }
            let b = seg.bezier;
            let (x0, y0) = m.map(b.p0);
            let (x1, y1) = m.map(b.p1);
            let (x2, y2) = m.map(b.p2);
            let (x3, y3) = m.map(b.p3);
            let _ = write!(
                d,
                "M{x0:.2} {y0:.2}C{x1:.2} {y1:.2} {x2:.2} {y2:.2} {x3:.2} {y3:.2}"
            );
        }
    }
    d
}

fn marker(out: &mut String, m: &Mapper, p: Point, radius: f64, style: &str) {
    let (x, y) = m.map(p);
    let _ = writeln!(
        out,
        r#"<circle cx="{x:.2}" cy="{y:.2}" r="{radius}" {style}/>"#
    );
}

/// Renders the graphic; when `angle` is given, adds the rotated copy with
/// its horizontal tangency points marked.
pub fn render(g: &Graphic, angle: Option<f64>) -> String {
    let rotated = angle.map(|t| g.rotate(t));
    let m = Mapper::new(g, rotated.as_ref());
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" standalone="no"?>"#);
    let _ = writeln!(
        out,
        r#"<svg width="{:.0}" height="{:.0}" viewBox="0 0 {:.0} {:.0}" version="1.1" xmlns="http://www.w3.org/2000/svg">"#,
        m.width(),
        m.height(),
        m.width(),
        m.height()
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);

    let draw_graphic = |out: &mut String, g: &Graphic, class: &str| {
        let solid = path_data(&m, g, FoldType::Definite);
        if !solid.is_empty() {
            let _ = writeln!(
                out,
                r#"<path d="{solid}" fill="none" stroke="{class}" stroke-width="2"/>"#
            );
        }
        let dashed = path_data(&m, g, FoldType::Indefinite);
        if !dashed.is_empty() {
            let _ = writeln!(
                out,
                r#"<path d="{dashed}" fill="none" stroke="{class}" stroke-width="2" stroke-dasharray="7 4"/>"#
            );
        }
        // Cusps.
        for (ci, comp) in g.components.iter().enumerate() {
            for (vi, v) in comp.vertices.iter().enumerate() {
                if v.kind == VertexKind::Cusp {
                    marker(
                        out,
                        &m,
                        comp.vertex_position(vi),
                        4.5,
                        r##"fill="none" stroke="#c02020" stroke-width="1.6""##,
                    );
                }
            }
            let _ = ci;
        }
        // Inflection points.
        for (_, seg) in g.segments() {
            if let Ok(list) = features::inflections(&seg.bezier) {
                for inf in list {
                    marker(out, &m, inf.point, 3.0, r##"fill="#2050c0""##);
                }
            }
        }
    };

    draw_graphic(&mut out, g, "black");
    if let (Some(t), Some(rot)) = (angle, rotated.as_ref()) {
        draw_graphic(&mut out, rot, "#808080");
        if let Ok(tangencies) = tangency_points(rot, 0.0) {
            for tangency in tangencies {
                marker(&mut out, &m, tangency.point, 3.5, r##"fill="#108040""##);
            }
        }
        let _ = writeln!(
            out,
            r#"<text x="12" y="20" font-family="monospace" font-size="14">rotated by {t:.6} rad (gray), horizontal tangencies marked</text>"#
        );
    }

    out.push_str("</svg>\n");
    out
}
