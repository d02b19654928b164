//! Pairwise segment intersection by bounding-box subdivision with Newton
//! polish. Used by validation (transversality of crossings) and by the slice
//! genericity checks.

use alloc::vec::Vec;

use crate::geom::{CubicBez, Point};

/// A located intersection of two segment images.
#[derive(Clone, Copy, Debug)]
pub struct Intersection {
    pub point: Point,
    /// Parameter on the first segment.
    pub s: f64,
    /// Parameter on the second segment.
    pub u: f64,
    /// `|sin θ|` of the crossing angle; near zero means tangential contact.
    pub sin_angle: f64,
}

/// Relationship between the two queried segments along their component chain,
/// used to suppress the shared endpoint from the intersection list.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Adjacency {
    /// Unrelated segments.
    None,
    /// The first segment's end is the second segment's start.
    EndToStart,
    /// The second segment's end is the first segment's start.
    StartToEnd,
    /// Both: a two-segment component where the pair shares both vertices.
    Both,
}

const BOX_TOL: f64 = 1e-10;
const MAX_DEPTH: u32 = 48;
/// Parameter window around a shared vertex inside which contacts are treated
/// as the vertex itself, not a crossing.
const CORNER_WINDOW: f64 = 1e-4;

fn boxes_overlap(a: &CubicBez, b: &CubicBez) -> bool {
    let (amin, amax) = a.control_bbox();
    let (bmin, bmax) = b.control_bbox();
    amin.x <= bmax.x && bmin.x <= amax.x && amin.y <= bmax.y && bmin.y <= amax.y
}

fn box_size(c: &CubicBez) -> f64 {
    let (min, max) = c.control_bbox();
    (max.x - min.x).max(max.y - min.y)
}

/// All transversal or tangential contacts between two distinct segments.
pub fn segment_intersections(
    a: &CubicBez,
    b: &CubicBez,
    adjacency: Adjacency,
) -> Vec<Intersection> {
    let mut candidates = Vec::new();
    subdivide(a, (0.0, 1.0), b, (0.0, 1.0), 0, &mut candidates);
    polish_and_dedup(a, b, adjacency, candidates)
}

/// Self-intersections of a single segment (a cubic can cross itself once).
pub fn self_intersections(a: &CubicBez) -> Vec<Intersection> {
    let (left, right) = a.subdivide(0.5);
    let mut candidates = Vec::new();
    subdivide(&left, (0.0, 0.5), &right, (0.5, 1.0), 0, &mut candidates);
    // The halves meet at the split point; drop that corner, keep real loops.
    let raw = polish_and_dedup(a, a, Adjacency::None, candidates);
    raw.into_iter()
        .filter(|i| (i.s - i.u).abs() > 1e-3)
        .collect()
}

fn subdivide(
    a: &CubicBez,
    arange: (f64, f64),
    b: &CubicBez,
    brange: (f64, f64),
    depth: u32,
    out: &mut Vec<(f64, f64)>,
) {
    if !boxes_overlap(a, b) {
        return;
    }
    let sa = box_size(a);
    let sb = box_size(b);
    if depth >= MAX_DEPTH || (sa <= BOX_TOL && sb <= BOX_TOL) {
        if out.len() < 4096 {
            out.push((0.5 * (arange.0 + arange.1), 0.5 * (brange.0 + brange.1)));
        }
        return;
    }
    if sa >= sb {
        let (l, r) = a.subdivide(0.5);
        let mid = 0.5 * (arange.0 + arange.1);
        subdivide(&l, (arange.0, mid), b, brange, depth + 1, out);
        subdivide(&r, (mid, arange.1), b, brange, depth + 1, out);
    } else {
        let (l, r) = b.subdivide(0.5);
        let mid = 0.5 * (brange.0 + brange.1);
        subdivide(a, arange, &l, (brange.0, mid), depth + 1, out);
        subdivide(a, arange, &r, (mid, brange.1), depth + 1, out);
    }
}

fn polish_and_dedup(
    a: &CubicBez,
    b: &CubicBez,
    adjacency: Adjacency,
    candidates: Vec<(f64, f64)>,
) -> Vec<Intersection> {
    let scale = box_size(a).max(box_size(b)).max(1e-12);
    let mut found: Vec<Intersection> = Vec::new();
    for (s0, u0) in candidates {
        let Some((s, u)) = newton(a, b, s0, u0, scale) else {
            continue;
        };
        if !(-1e-9..=1.0 + 1e-9).contains(&s) || !(-1e-9..=1.0 + 1e-9).contains(&u) {
            continue;
        }
        let s = s.clamp(0.0, 1.0);
        let u = u.clamp(0.0, 1.0);
        let near_corner = match adjacency {
            Adjacency::None => false,
            Adjacency::EndToStart => s > 1.0 - CORNER_WINDOW && u < CORNER_WINDOW,
            Adjacency::StartToEnd => u > 1.0 - CORNER_WINDOW && s < CORNER_WINDOW,
            Adjacency::Both => {
                (s > 1.0 - CORNER_WINDOW && u < CORNER_WINDOW)
                    || (u > 1.0 - CORNER_WINDOW && s < CORNER_WINDOW)
            }
        };
        if near_corner {
            continue;
        }
        if found
            .iter()
            .any(|f| (f.s - s).abs() < 1e-5 && (f.u - u).abs() < 1e-5)
        {
            continue;
        }
        let va = a.deriv(s);
        let vb = b.deriv(u);
        let denom = va.length() * vb.length();
        let sin_angle = if denom > 0.0 {
            (va.cross(vb) / denom).abs()
        } else {
            0.0
        };
        found.push(Intersection {
            point: a.eval(s),
            s,
            u,
            sin_angle,
        });
    }
    found.sort_by(|p, q| p.s.total_cmp(&q.s).then(p.u.total_cmp(&q.u)));
    found
}

/// Newton iteration on `b(u) − a(s) = 0`.
fn newton(a: &CubicBez, b: &CubicBez, mut s: f64, mut u: f64, scale: f64) -> Option<(f64, f64)> {
    let tol = scale * 1e-13;
    for _ in 0..40 {
        let pa = a.eval(s);
        let pb = b.eval(u);
        let f = pb - pa;
        let va = a.deriv(s);
        let vb = b.deriv(u);
        // Jacobian of f with respect to (s, u) is [−va, vb].
        let det = -va.x * vb.y + vb.x * va.y;
        if det.abs() < 1e-18 {
            return None;
        }
        let ds = (-f.x * vb.y + vb.x * f.y) / det;
        let du = (va.x * f.y - f.x * va.y) / det;
        let step = |v: f64| v.clamp(-0.2, 0.2);
        s += step(ds);
        u += step(du);
        if !s.is_finite()
            || !u.is_finite()
            || !(-0.5..=1.5).contains(&s)
            || !(-0.5..=1.5).contains(&u)
        {
            return None;
        }
        if f.length() < tol && ds.abs() < 1e-12 && du.abs() < 1e-12 {
            return Some((s, u));
        }
    }
    let f = b.eval(u) - a.eval(s);
    (f.length() < tol * 100.0).then_some((s, u))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::circle_arc;
    use core::f64::consts::PI;

    #[test]
    fn crossing_cubics_intersect_once() {
        let a = CubicBez::new(
            Point::new(0.0, 0.0),
            Point::new(0.5, 0.9),
            Point::new(1.5, 1.1),
            Point::new(2.0, 2.0),
        );
        let b = CubicBez::new(
            Point::new(0.0, 2.0),
            Point::new(0.5, 1.1),
            Point::new(1.5, 0.9),
            Point::new(2.0, 0.0),
        );
        let hits = segment_intersections(&a, &b, Adjacency::None);
        assert_eq!(hits.len(), 1, "{hits:?}");
        assert!(hits[0].sin_angle > 0.3);
        assert!(hits[0].point.distance(Point::new(1.0, 1.0)) < 0.1);
    }

    #[test]
    fn crossing_arcs_found_near_circle_intersections() {
        // Arcs of two unit circles whose true crossing is at (0.6, 0.8).
        let a = circle_arc(Point::new(0.0, 0.0), 1.0, 0.5, 1.3);
        let b = circle_arc(Point::new(1.2, 0.0), 1.0, PI - 1.3, PI - 0.5);
        let hits = segment_intersections(&a, &b, Adjacency::None);
        assert_eq!(hits.len(), 1, "{hits:?}");
        assert!(hits[0].point.distance(Point::new(0.6, 0.8)) < 1e-3);
        assert!(hits[0].sin_angle > 0.5);
    }

    #[test]
    fn disjoint_arcs_do_not_intersect() {
        let a = circle_arc(Point::new(0.0, 0.0), 1.0, 0.0, 1.5);
        let b = circle_arc(Point::new(5.0, 0.0), 1.0, 0.0, 1.5);
        assert!(segment_intersections(&a, &b, Adjacency::None).is_empty());
    }

    #[test]
    fn shared_vertex_is_not_a_crossing() {
        let a = circle_arc(Point::new(0.0, 0.0), 1.0, 0.0, 1.0);
        let b = circle_arc(Point::new(0.0, 0.0), 1.0, 1.0, 2.0);
        let hits = segment_intersections(&a, &b, Adjacency::EndToStart);
        assert!(hits.is_empty(), "{hits:?}");
    }

    #[test]
    fn looped_cubic_self_intersects() {
        let c = CubicBez::new(
            Point::new(0.0, 0.0),
            Point::new(2.0, 1.5),
            Point::new(-1.0, 1.5),
            Point::new(1.0, 0.0),
        );
        let hits = self_intersections(&c);
        assert_eq!(hits.len(), 1, "{hits:?}");
    }

    #[test]
    fn plain_arc_has_no_self_intersection() {
        let c = circle_arc(Point::new(0.0, 0.0), 1.0, 0.0, 1.4);
        assert!(self_intersections(&c).is_empty());
    }
}
