//! Validation of the local singularity axioms of an abstract graphic.
//!
//! Violations are data, not failures: `validate` always returns the complete
//! list so a front end can report everything at once.

use alloc::vec::Vec;
use core::fmt;

use crate::features::{curvature_numerator, germ_sides, FeatureError};
use crate::geom::Point;
use crate::graphic::{Graphic, SegmentRef, VertexKind, VertexRef};
use crate::intersect::{self, Adjacency, Intersection};
use crate::poly::real_roots_default;
use crate::{math, TOL_ANGLE, TOL_GEOM};

/// Minimum `|sin θ|` for a double point to count as transversal.
const TOL_TRANSVERSAL: f64 = 1e-7;

#[derive(Clone, Debug, PartialEq)]
pub enum Violation {
    /// Component is empty or its vertex count does not match its segments.
    Malformed { component: usize },
    /// Fold labels must alternate at cusps and persist across smooth
    /// vertices.
    FoldAlternation { vertex: VertexRef },
    /// Consecutive segment endpoints do not coincide.
    VertexGap { vertex: VertexRef, gap: f64 },
    /// Unit tangents fail the smooth (parallel) or cusp (anti-parallel)
    /// condition.
    VertexTangent { vertex: VertexRef, dot: f64 },
    /// Segment with identically vanishing signed curvature (straight line).
    DegenerateFlat { seg: SegmentRef },
    /// Velocity vanishes somewhere on the segment.
    VanishingVelocity { seg: SegmentRef, s: f64 },
    /// The signed curvature changes sign across a smooth vertex, hiding an
    /// inflection from the root-isolated queries.
    CurvatureSignFlip { vertex: VertexRef },
    /// Two segment images meet tangentially instead of crossing.
    NonTransversalCrossing {
        a: SegmentRef,
        b: SegmentRef,
        point: Point,
    },
    /// A cusp sits on a double point of the drawing.
    CuspOnCrossing { vertex: VertexRef, point: Point },
    /// The sheet annotations at a cusp do not point into the beak.
    SheetMismatch { vertex: VertexRef },
    /// Cusp germ side test below tolerance (higher-order cusp).
    UndecidableCusp { vertex: VertexRef },
    /// The file's crossing-label count disagrees with the drawing.
    CrossingCountMismatch { listed: usize, found: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Malformed { component } => {
                write!(
                    f,
                    "component {component}: empty or vertex/segment count mismatch"
                )
            }
            Violation::FoldAlternation { vertex } => write!(
                f,
                "vertex {}/{}: fold labels must alternate exactly at cusps",
                vertex.component, vertex.vertex
            ),
            Violation::VertexGap { vertex, gap } => write!(
                f,
                "vertex {}/{}: segment endpoints differ by {gap:.3e}",
                vertex.component, vertex.vertex
            ),
            Violation::VertexTangent { vertex, dot } => write!(
                f,
                "vertex {}/{}: tangent condition failed (dot = {dot:.12})",
                vertex.component, vertex.vertex
            ),
            Violation::DegenerateFlat { seg } => {
                write!(
                    f,
                    "segment {}/{}: identically zero curvature",
                    seg.component, seg.segment
                )
            }
            Violation::VanishingVelocity { seg, s } => write!(
                f,
                "segment {}/{}: velocity vanishes near s = {s:.6}",
                seg.component, seg.segment
            ),
            Violation::CurvatureSignFlip { vertex } => write!(
                f,
                "vertex {}/{}: curvature changes sign across a smooth vertex",
                vertex.component, vertex.vertex
            ),
            Violation::NonTransversalCrossing { a, b, point } => write!(
                f,
                "segments {}/{} and {}/{}: tangential contact at ({:.6}, {:.6})",
                a.component, a.segment, b.component, b.segment, point.x, point.y
            ),
            Violation::CuspOnCrossing { vertex, point } => write!(
                f,
                "vertex {}/{}: cusp coincides with the double point ({:.6}, {:.6})",
                vertex.component, vertex.vertex, point.x, point.y
            ),
            Violation::SheetMismatch { vertex } => write!(
                f,
                "vertex {}/{}: sheet sides do not point into the cusp beak",
                vertex.component, vertex.vertex
            ),
            Violation::UndecidableCusp { vertex } => write!(
                f,
                "vertex {}/{}: cusp side test below tolerance",
                vertex.component, vertex.vertex
            ),
            Violation::CrossingCountMismatch { listed, found } => {
                write!(
                    f,
                    "crossing labels: {listed} listed, {found} found in the drawing"
                )
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "pass");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Checks every local axiom and returns the complete list of violations.
pub fn validate(g: &Graphic) -> ValidationReport {
    let mut violations = Vec::new();

    for (ci, comp) in g.components.iter().enumerate() {
        if comp.segments.is_empty() || comp.segments.len() != comp.vertices.len() {
            violations.push(Violation::Malformed { component: ci });
        }
    }
    if violations
        .iter()
        .any(|v| matches!(v, Violation::Malformed { .. }))
    {
        return ValidationReport { violations };
    }

    for (sref, seg) in g.segments() {
        check_segment(sref, &seg.bezier, &mut violations);
    }

    for (ci, comp) in g.components.iter().enumerate() {
        for vi in 0..comp.segments.len() {
            let vref = VertexRef {
                component: ci,
                vertex: vi,
            };
            check_vertex(g, vref, &mut violations);
        }
    }

    let crossings = find_crossings(g, &mut violations);
    if let Some(tags) = &g.crossings {
        if tags.len() != crossings.len() {
            violations.push(Violation::CrossingCountMismatch {
                listed: tags.len(),
                found: crossings.len(),
            });
        }
    }
    for (_, _, inter) in &crossings {
        for r in g.cusps() {
            let pos = g.components[r.component].vertex_position(r.vertex);
            if pos.distance(inter.point) <= TOL_GEOM.max(1e-7) {
                violations.push(Violation::CuspOnCrossing {
                    vertex: r,
                    point: inter.point,
                });
            }
        }
    }

    ValidationReport { violations }
}

fn check_segment(sref: SegmentRef, bez: &crate::geom::CubicBez, out: &mut Vec<Violation>) {
    let scale = {
        let (min, max) = bez.control_bbox();
        (max.x - min.x).max(max.y - min.y).max(1e-6)
    };

    // Endpoint velocities must not vanish (the vertex conditions need unit
    // tangents).
    if bez.deriv(0.0).length() <= 1e-9 * scale {
        out.push(Violation::VanishingVelocity { seg: sref, s: 0.0 });
        return;
    }
    if bez.deriv(1.0).length() <= 1e-9 * scale {
        out.push(Violation::VanishingVelocity { seg: sref, s: 1.0 });
        return;
    }

    // Interior velocity: minimize |v|² over (0, 1); its derivative is cubic.
    let (cx, cy) = bez.power_basis();
    let vx = [cx[1], 2.0 * cx[2], 3.0 * cx[3]];
    let vy = [cy[1], 2.0 * cy[2], 3.0 * cy[3]];
    // |v|²(s) has coefficients from the squared quadratics.
    let sq = |a: &[f64; 3]| {
        [
            a[0] * a[0],
            2.0 * a[0] * a[1],
            a[1] * a[1] + 2.0 * a[0] * a[2],
            2.0 * a[1] * a[2],
            a[2] * a[2],
        ]
    };
    let (qx, qy) = (sq(&vx), sq(&vy));
    let speed2: Vec<f64> = (0..5).map(|i| qx[i] + qy[i]).collect();
    let speed2 = crate::poly::Polynomial::new(speed2);
    if let Ok(roots) = real_roots_default(&speed2.deriv(), (0.0, 1.0)) {
        for r in roots.values() {
            if speed2.eval(r) <= (1e-9 * scale) * (1e-9 * scale) {
                out.push(Violation::VanishingVelocity { seg: sref, s: r });
            }
        }
    }

    // Straight segments are excluded by genericity.
    let kappa = curvature_numerator(bez);
    let speed_scale = bez
        .deriv(0.0)
        .length()
        .max(bez.deriv(0.5).length())
        .max(bez.deriv(1.0).length());
    if kappa.is_zero() || kappa.coeff_scale() < 1e-13 * speed_scale * speed_scale {
        out.push(Violation::DegenerateFlat { seg: sref });
    }
}

fn check_vertex(g: &Graphic, vref: VertexRef, out: &mut Vec<Violation>) {
    let comp = &g.components[vref.component];
    let (in_idx, out_idx) = comp.incident(vref.vertex);
    let seg_in = &comp.segments[in_idx];
    let seg_out = &comp.segments[out_idx];
    let kind = comp.vertices[vref.vertex].kind;

    let p_in = seg_in.bezier.p3;
    let p_out = seg_out.bezier.p0;
    let scale = seg_in.bezier.p0.distance(p_in).max(1.0);
    let gap = p_in.distance(p_out);
    if gap > TOL_GEOM * scale {
        out.push(Violation::VertexGap { vertex: vref, gap });
        return;
    }

    let u_in = seg_in.bezier.deriv(1.0);
    let u_out = seg_out.bezier.deriv(0.0);
    if u_in.length() == 0.0 || u_out.length() == 0.0 {
        return; // reported as VanishingVelocity already
    }
    let dot = u_in.normalize().dot(u_out.normalize());

    match kind {
        VertexKind::Smooth => {
            if dot <= 1.0 - TOL_ANGLE {
                out.push(Violation::VertexTangent { vertex: vref, dot });
            }
            if seg_in.fold != seg_out.fold {
                out.push(Violation::FoldAlternation { vertex: vref });
            }
            // Signed curvature may not change sign across a smooth vertex:
            // that would be an inflection invisible to the interior queries.
            let k_in = curvature_at_end(&seg_in.bezier, 1.0);
            let k_out = curvature_at_end(&seg_out.bezier, 0.0);
            if k_in * k_out <= 0.0 {
                out.push(Violation::CurvatureSignFlip { vertex: vref });
            }
        }
        VertexKind::Cusp => {
            if dot >= -1.0 + TOL_ANGLE {
                out.push(Violation::VertexTangent { vertex: vref, dot });
            }
            if seg_in.fold == seg_out.fold {
                out.push(Violation::FoldAlternation { vertex: vref });
                return;
            }
            check_cusp_sheets(g, vref, out);
        }
    }
}

/// Signed curvature numerator sign at a segment end, normalized by speed.
fn curvature_at_end(bez: &crate::geom::CubicBez, s: f64) -> f64 {
    let v = bez.deriv(s);
    let a = bez.deriv2(s);
    let num = v.cross(a);
    let speed = v.length();
    if speed == 0.0 {
        return 0.0;
    }
    let k = num / (speed * speed * speed);
    if math::abs(k) < 1e-9 {
        0.0
    } else {
        k
    }
}

/// The sheet normal of each edge at a cusp must point toward the other edge
/// germ (into the beak), as in the local model of the cusp.
fn check_cusp_sheets(g: &Graphic, vref: VertexRef, out: &mut Vec<Violation>) {
    let comp = &g.components[vref.component];
    let (in_idx, out_idx) = comp.incident(vref.vertex);
    let (germ_in, germ_out) = g.vertex_germs(vref);

    let (m_in, m_out) = match germ_sides(&germ_in, &germ_out) {
        Ok(sides) => sides,
        Err(FeatureError::UndecidableAtTolerance) => {
            out.push(Violation::UndecidableCusp { vertex: vref });
            return;
        }
        Err(_) => return,
    };
    if math::abs(m_in - m_out) < crate::TOL_SIDE {
        // Germs with matching curvature against the tangent line: the beak
        // interior is not resolved at tolerance.
        out.push(Violation::UndecidableCusp { vertex: vref });
        return;
    }

    let beak = crate::features::cusp_direction(g, vref);
    let normal = beak.turn_left();

    // Sheet normals of the two segments at the vertex, in traversal
    // orientation.
    let n_in = comp.segments[in_idx].sheet_normal(1.0);
    let n_out = comp.segments[out_idx].sheet_normal(0.0);

    // Toward the other germ: the sign of the other side measure minus ours.
    let want_in = m_out - m_in;
    let want_out = m_in - m_out;
    if n_in.dot(normal) * want_in <= 0.0 || n_out.dot(normal) * want_out <= 0.0 {
        out.push(Violation::SheetMismatch { vertex: vref });
    }
}

/// A transversal double point of the drawing.
#[derive(Clone, Copy, Debug)]
pub struct DoublePoint {
    pub a: SegmentRef,
    pub b: SegmentRef,
    pub point: Point,
}

/// The transversal double points of the graphic, in deterministic order.
pub fn double_points(g: &Graphic) -> Vec<DoublePoint> {
    let mut scratch = Vec::new();
    find_crossings(g, &mut scratch)
        .into_iter()
        .map(|(a, b, inter)| DoublePoint {
            a,
            b,
            point: inter.point,
        })
        .collect()
}

/// All double points of the drawing; tangential contacts are reported as
/// violations and excluded from the returned list.
pub(crate) fn find_crossings(
    g: &Graphic,
    out: &mut Vec<Violation>,
) -> Vec<(SegmentRef, SegmentRef, Intersection)> {
    let segs: Vec<(SegmentRef, &crate::graphic::Segment)> = g.segments().collect();
    let mut crossings = Vec::new();
    for i in 0..segs.len() {
        let (ra, sa) = segs[i];
        // Self-intersection of a single cubic.
        for inter in intersect::self_intersections(&sa.bezier) {
            if inter.sin_angle < TOL_TRANSVERSAL {
                out.push(Violation::NonTransversalCrossing {
                    a: ra,
                    b: ra,
                    point: inter.point,
                });
            } else {
                crossings.push((ra, ra, inter));
            }
        }
        for (rb, sb) in segs.iter().skip(i + 1) {
            let adjacency = adjacency_of(g, ra, *rb);
            for inter in intersect::segment_intersections(&sa.bezier, &sb.bezier, adjacency) {
                if inter.sin_angle < TOL_TRANSVERSAL {
                    out.push(Violation::NonTransversalCrossing {
                        a: ra,
                        b: *rb,
                        point: inter.point,
                    });
                } else {
                    crossings.push((ra, *rb, inter));
                }
            }
        }
    }
    crossings
}

fn adjacency_of(g: &Graphic, a: SegmentRef, b: SegmentRef) -> Adjacency {
    if a.component != b.component {
        return Adjacency::None;
    }
    let n = g.components[a.component].segments.len();
    let forward = (a.segment + 1) % n == b.segment;
    let backward = (b.segment + 1) % n == a.segment;
    match (forward, backward) {
        (true, true) => Adjacency::Both,
        (true, false) => Adjacency::EndToStart,
        (false, true) => Adjacency::StartToEnd,
        (false, false) => Adjacency::None,
    }
}
