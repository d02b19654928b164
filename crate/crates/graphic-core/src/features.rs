//! Local differential queries on segments: inflections, horizontal
//! tangencies of the rotated height, and cusp classification.

use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt;

use crate::geom::{CubicBez, Point, Vec2};
use crate::graphic::{CuspType, Graphic, VertexKind, VertexRef};
use crate::math;
use crate::poly::{real_roots_default, IdenticallyZero, Polynomial};
use crate::{SIDE_OFFSET, TOL_SIDE};

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum FeatureError {
    /// The signed-curvature numerator vanishes identically: a straight or
    /// otherwise degenerate segment that genericity excludes.
    DegenerateFlat,
    /// A tangency root of multiplicity two or more: the caller queried at an
    /// event angle.
    TangentialDegeneracy { s: f64 },
    /// A cusp germ's side test fell below tolerance: a higher-order cusp
    /// outside the stable local models.
    UndecidableAtTolerance,
    /// Queried vertex is not a cusp.
    NotACusp,
}

impl fmt::Display for FeatureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FeatureError::DegenerateFlat => write!(f, "segment has identically zero curvature"),
            FeatureError::TangentialDegeneracy { s } => {
                write!(f, "tangency of multiplicity >= 2 at parameter {s}")
            }
            FeatureError::UndecidableAtTolerance => {
                write!(f, "cusp side test below tolerance (higher-order cusp?)")
            }
            FeatureError::NotACusp => write!(f, "vertex is not a cusp"),
        }
    }
}

impl core::error::Error for FeatureError {}

impl From<IdenticallyZero> for FeatureError {
    fn from(_: IdenticallyZero) -> FeatureError {
        FeatureError::DegenerateFlat
    }
}

/// Tangent slope at a point of a segment; `Vertical` when `|x'|` is below
/// tolerance relative to the speed.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Slope {
    Finite(f64),
    Vertical,
}

/// An interior zero of the signed-curvature numerator.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Inflection {
    pub s: f64,
    pub point: Point,
    pub slope: Slope,
}

/// The signed-curvature numerator `x'y'' − x''y'` as a polynomial in the
/// segment parameter. The cubic terms cancel for a cubic Bézier, so the
/// numerator is a quadratic and a segment carries at most two inflections.
pub fn curvature_numerator(bez: &CubicBez) -> Polynomial {
    let (cx, cy) = bez.power_basis();
    let (x1, x2, x3) = (cx[1], cx[2], cx[3]);
    let (y1, y2, y3) = (cy[1], cy[2], cy[3]);
    Polynomial::new([
        2.0 * (x1 * y2 - x2 * y1),
        6.0 * (x1 * y3 - x3 * y1),
        6.0 * (x2 * y3 - x3 * y2),
    ])
}

/// Slope of the tangent at parameter `s`.
pub fn slope_at(bez: &CubicBez, s: f64) -> Slope {
    let v = bez.deriv(s);
    if math::abs(v.x) <= 1e-12 * v.length() {
        Slope::Vertical
    } else {
        Slope::Finite(v.y / v.x)
    }
}

/// Interior inflection points of a segment: the roots of the
/// signed-curvature numerator on the open parameter interval, with the
/// unoriented tangent slope at each.
pub fn inflections(seg_bez: &CubicBez) -> Result<Vec<Inflection>, FeatureError> {
    let kappa = curvature_numerator(seg_bez);
    if kappa.is_zero() || degenerate_scale(seg_bez, &kappa) {
        return Err(FeatureError::DegenerateFlat);
    }
    let roots = real_roots_default(&kappa, (0.0, 1.0))?;
    let mut out = Vec::new();
    for root in &roots.roots {
        let s = root.value;
        if s <= 1e-9 || s >= 1.0 - 1e-9 {
            continue;
        }
        out.push(Inflection {
            s,
            point: seg_bez.eval(s),
            slope: slope_at(seg_bez, s),
        });
    }
    Ok(out)
}

/// A curvature numerator far smaller than the segment's speed scale marks a
/// numerically straight segment.
fn degenerate_scale(bez: &CubicBez, kappa: &Polynomial) -> bool {
    let speed = bez
        .deriv(0.0)
        .length()
        .max(bez.deriv(1.0).length())
        .max(bez.deriv(0.5).length());
    kappa.coeff_scale() < 1e-13 * speed * speed
}

/// Derivative of the rotated height along a segment,
/// `x'(s) sin t + y'(s) cos t`, as a quadratic polynomial in `s`.
pub fn height_deriv_poly(bez: &CubicBez, angle: f64) -> Polynomial {
    let (sin_t, cos_t) = math::sin_cos(angle);
    let (cx, cy) = bez.power_basis();
    Polynomial::new([
        cx[1] * sin_t + cy[1] * cos_t,
        2.0 * (cx[2] * sin_t + cy[2] * cos_t),
        3.0 * (cx[3] * sin_t + cy[3] * cos_t),
    ])
}

/// The rotated height of a point for sweep angle `t`.
#[inline]
pub fn rotated_height(p: Point, angle: f64) -> f64 {
    let (sin_t, cos_t) = math::sin_cos(angle);
    p.x * sin_t + p.y * cos_t
}

/// Parameters in the half-open attribution interval `[0, 1)` at which the
/// tangent becomes horizontal after rotating by `angle`. Each root must be
/// simple; a multiple root means the caller hit an event angle.
pub fn tangencies(seg_bez: &CubicBez, angle: f64) -> Result<Vec<f64>, FeatureError> {
    let hp = height_deriv_poly(seg_bez, angle);
    if hp.is_zero() {
        return Err(FeatureError::DegenerateFlat);
    }
    let roots = real_roots_default(&hp, (0.0, 1.0))?;
    let mut out = Vec::new();
    for root in &roots.roots {
        if root.multiplicity >= 2 {
            return Err(FeatureError::TangentialDegeneracy { s: root.value });
        }
        if root.value < 1.0 - 1e-9 {
            out.push(root.value);
        }
    }
    Ok(out)
}

/// Tangent line angle of a direction, reduced mod π into `[0, π)`.
pub fn line_angle(v: Vec2) -> f64 {
    let mut a = math::atan2(v.y, v.x);
    if a < 0.0 {
        a += PI;
    }
    if a >= PI {
        a -= PI;
    }
    a
}

/// The sweep angle at which a tangent line of direction `v` becomes
/// horizontal, in `[0, π)`. Values in the open interval `(0, π/2)` are
/// in-sweep events (negative slopes); everything else never goes horizontal
/// during the sweep or does so exactly at an endpoint.
pub fn sweep_angle(v: Vec2) -> f64 {
    let alpha = line_angle(v);
    if alpha == 0.0 {
        0.0
    } else {
        PI - alpha
    }
}

/// Beak direction of a cusp: the common unit tangent of the two germs,
/// oriented away from the vertex.
pub fn cusp_direction(g: &Graphic, r: VertexRef) -> Vec2 {
    let (germ_in, germ_out) = g.vertex_germs(r);
    let a = germ_in.deriv(0.0).normalize();
    let b = germ_out.deriv(0.0).normalize();
    (a + b).normalize()
}

/// Classifies a cusp given its two edge germs, both oriented away from the
/// shared vertex. Type one when the germs leave on opposite sides of the
/// tangent line at the cusp, type two when they leave on the same side.
pub fn classify_cusp_germs(germ_a: &CubicBez, germ_b: &CubicBez) -> Result<CuspType, FeatureError> {
    let (sa, sb) = germ_sides(germ_a, germ_b)?;
    if sa * sb < 0.0 {
        Ok(CuspType::TypeOne)
    } else {
        Ok(CuspType::TypeTwo)
    }
}

/// Curvature-normalized side measures of the two germs against the common
/// tangent normal: `2 η / ε²` where `η` is the normal offset of the germ at
/// arc length `ε` from the vertex.
pub(crate) fn germ_sides(germ_a: &CubicBez, germ_b: &CubicBez) -> Result<(f64, f64), FeatureError> {
    let dir_a = germ_a.deriv(0.0).normalize();
    let dir_b = germ_b.deriv(0.0).normalize();
    let beak = (dir_a + dir_b).normalize();
    let normal = beak.turn_left();
    let origin = germ_a.p0;
    // Probe at several dyadic fractions of the base offset and keep the
    // measure of largest magnitude; this makes the test robust when the
    // germs' scales differ wildly.
    let measure = |germ: &CubicBez| -> f64 {
        let mut best = 0.0f64;
        for k in 0..3 {
            let eps = SIDE_OFFSET * (1 << k) as f64;
            let p = point_at_arc(germ, eps);
            let m = 2.0 * (p - origin).dot(normal) / (eps * eps);
            if math::abs(m) > math::abs(best) {
                best = m;
            }
        }
        best
    };
    let ma = measure(germ_a);
    let mb = measure(germ_b);
    if math::abs(ma) < TOL_SIDE || math::abs(mb) < TOL_SIDE {
        return Err(FeatureError::UndecidableAtTolerance);
    }
    Ok((ma, mb))
}

/// Classifies the cusp at a vertex of a graphic.
pub fn classify_cusp(g: &Graphic, r: VertexRef) -> Result<CuspType, FeatureError> {
    let comp = &g.components[r.component];
    if comp.vertices[r.vertex].kind != VertexKind::Cusp {
        return Err(FeatureError::NotACusp);
    }
    let (germ_in, germ_out) = g.vertex_germs(r);
    classify_cusp_germs(&germ_in, &germ_out)
}

/// Point of a germ at (approximately) the given arc length from its start.
fn point_at_arc(bez: &CubicBez, arc: f64) -> Point {
    let v0 = bez.deriv(0.0).length();
    let mut u = arc / v0;
    for _ in 0..4 {
        let d = (bez.eval(u) - bez.p0).length();
        if d <= 0.0 {
            break;
        }
        u *= arc / d;
    }
    bez.eval(u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{circle_arc, Vec2};
    use core::f64::consts::{FRAC_PI_2, FRAC_PI_4};

    /// The curve (s, s³) for s in [−1, 1] as a cubic Bézier.
    fn s_cubed() -> CubicBez {
        CubicBez::new(
            Point::new(-1.0, -1.0),
            Point::new(-1.0 / 3.0, 1.0),
            Point::new(1.0 / 3.0, -1.0),
            Point::new(1.0, 1.0),
        )
    }

    #[test]
    fn s_cubed_is_the_claimed_curve() {
        for i in 0..=8 {
            let u = i as f64 / 8.0;
            let s = 2.0 * u - 1.0;
            let p = s_cubed().eval(u);
            assert!((p.x - s).abs() < 1e-12);
            assert!((p.y - s * s * s).abs() < 1e-12);
        }
    }

    #[test]
    fn s_cubed_inflection_at_midpoint() {
        let inf = inflections(&s_cubed()).unwrap();
        assert_eq!(inf.len(), 1);
        assert!((inf[0].s - 0.5).abs() < 1e-9);
        match inf[0].slope {
            Slope::Finite(m) => assert!(m.abs() < 1e-9),
            Slope::Vertical => panic!("slope should be 0"),
        }
    }

    #[test]
    fn rotated_s_cubed_inflection_slope() {
        let rot = s_cubed().map_points(|p| p.rotate(-FRAC_PI_4));
        let inf = inflections(&rot).unwrap();
        assert_eq!(inf.len(), 1);
        match inf[0].slope {
            Slope::Finite(m) => assert!((m - (-1.0)).abs() < 1e-9),
            Slope::Vertical => panic!("slope should be −1"),
        }
    }

    #[test]
    fn quarter_circle_has_no_inflection() {
        let arc = circle_arc(Point::new(0.0, 0.0), 1.0, 0.0, FRAC_PI_2);
        assert!(inflections(&arc).unwrap().is_empty());
    }

    #[test]
    fn straight_segment_is_degenerate() {
        let line = CubicBez::new(
            Point::new(0.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(2.0, 2.0),
            Point::new(3.0, 3.0),
        );
        assert_eq!(inflections(&line), Err(FeatureError::DegenerateFlat));
    }

    #[test]
    fn bottom_arc_has_one_horizontal_tangency() {
        // Quarter circle spanning the bottom point of the unit circle.
        let arc = circle_arc(Point::new(0.0, 0.0), 1.0, -3.0 * FRAC_PI_4, -FRAC_PI_4);
        let roots = tangencies(&arc, 0.0).unwrap();
        assert_eq!(roots.len(), 1);
        let p = arc.eval(roots[0]);
        assert!((p.y - (-1.0)).abs() < 1e-3);
    }

    #[test]
    fn s_cubed_has_no_tangency_at_quarter_turn() {
        // Slope 3s² ≥ 0 never equals −tan(π/4) = −1.
        assert!(tangencies(&s_cubed(), FRAC_PI_4).unwrap().is_empty());
    }

    #[test]
    fn tangencies_at_zero_angle_are_roots_of_y_prime() {
        let arc = circle_arc(Point::new(0.0, 0.0), 1.0, -3.0 * FRAC_PI_4, -FRAC_PI_4);
        for s in tangencies(&arc, 0.0).unwrap() {
            assert!(arc.deriv(s).y.abs() < 1e-9);
        }
    }

    /// Germ of the graph y = c·x² over x in [0, len], oriented away from the
    /// origin.
    fn parabola_germ(c: f64, len: f64) -> CubicBez {
        CubicBez::new(
            Point::new(0.0, 0.0),
            Point::new(len / 3.0, 0.0),
            Point::new(2.0 * len / 3.0, c * len * len / 3.0),
            Point::new(len, c * len * len),
        )
    }

    #[test]
    fn opposite_side_germs_are_type_one() {
        // Branches separated by the tangent line, like (s², s³).
        let a = parabola_germ(1.5, 0.4);
        let b = parabola_germ(-0.9, 0.4);
        assert_eq!(classify_cusp_germs(&a, &b), Ok(CuspType::TypeOne));
    }

    #[test]
    fn same_side_germs_are_type_two() {
        // Both branches above the tangent line, like (s², s⁴(1+s)).
        let a = parabola_germ(1.2, 0.4);
        let b = parabola_germ(0.6, 0.4);
        assert_eq!(classify_cusp_germs(&a, &b), Ok(CuspType::TypeTwo));
    }

    #[test]
    fn mirror_image_preserves_type() {
        let a = parabola_germ(1.5, 0.4);
        let b = parabola_germ(-0.9, 0.4);
        let mirror = |c: &CubicBez| c.map_points(|p| Point::new(p.x, -p.y));
        assert_eq!(
            classify_cusp_germs(&mirror(&a), &mirror(&b)),
            Ok(CuspType::TypeOne)
        );
        let c = parabola_germ(1.2, 0.4);
        let d = parabola_germ(0.6, 0.4);
        assert_eq!(
            classify_cusp_germs(&mirror(&c), &mirror(&d)),
            Ok(CuspType::TypeTwo)
        );
    }

    #[test]
    fn slope_minus_one_goes_horizontal_at_quarter_turn() {
        // tan t = −slope.
        let t = sweep_angle(Vec2::new(1.0, -1.0));
        assert!((t - FRAC_PI_4).abs() < 1e-15);
        // Positive slopes never go horizontal inside the sweep.
        assert!(sweep_angle(Vec2::new(1.0, 1.0)) > FRAC_PI_2);
    }

    #[test]
    fn exact_double_tangency_root_is_degenerate() {
        // y = (s − 1/2)³ has y' = 3(s − 1/2)², a double root at s = 1/2.
        let c = CubicBez::new(
            Point::new(0.0, -0.125),
            Point::new(1.0 / 3.0, 0.125),
            Point::new(2.0 / 3.0, -0.125),
            Point::new(1.0, 0.125),
        );
        assert!(matches!(
            tangencies(&c, 0.0),
            Err(FeatureError::TangentialDegeneracy { .. })
        ));
    }

    #[test]
    fn flat_germ_is_undecidable() {
        let a = parabola_germ(1.5, 0.4);
        let b = parabola_germ(1e-9, 0.4);
        assert_eq!(
            classify_cusp_germs(&a, &b),
            Err(FeatureError::UndecidableAtTolerance)
        );
    }
}
