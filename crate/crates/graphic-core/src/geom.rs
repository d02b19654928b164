//! Minimal planar geometry: points, vectors and cubic Bézier segments.

use core::ops::{Add, Mul, Neg, Sub};

use crate::math;

/// A point in the graphic plane.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

/// A direction or displacement in the graphic plane.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Point {
        Point { x, y }
    }

    #[inline]
    pub fn to_vec2(self) -> Vec2 {
        Vec2::new(self.x, self.y)
    }

    #[inline]
    pub fn distance(self, other: Point) -> f64 {
        (self - other).length()
    }

    /// Rotates the point about the origin by `angle` radians, counterclockwise.
    pub fn rotate(self, angle: f64) -> Point {
        let (s, c) = math::sin_cos(angle);
        Point::new(self.x * c - self.y * s, self.x * s + self.y * c)
    }
}

impl Vec2 {
    pub const fn new(x: f64, y: f64) -> Vec2 {
        Vec2 { x, y }
    }

    #[inline]
    pub fn dot(self, other: Vec2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    #[inline]
    pub fn cross(self, other: Vec2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    #[inline]
    pub fn length(self) -> f64 {
        math::hypot(self.x, self.y)
    }

    pub fn normalize(self) -> Vec2 {
        let len = self.length();
        Vec2::new(self.x / len, self.y / len)
    }

    /// The vector rotated a quarter turn counterclockwise.
    #[inline]
    pub fn turn_left(self) -> Vec2 {
        Vec2::new(-self.y, self.x)
    }

    /// Angle of the vector measured counterclockwise from the positive x-axis.
    #[inline]
    pub fn angle(self) -> f64 {
        math::atan2(self.y, self.x)
    }
}

impl Add<Vec2> for Point {
    type Output = Point;
    #[inline]
    fn add(self, v: Vec2) -> Point {
        Point::new(self.x + v.x, self.y + v.y)
    }
}

impl Sub for Point {
    type Output = Vec2;
    #[inline]
    fn sub(self, other: Point) -> Vec2 {
        Vec2::new(self.x - other.x, self.y - other.y)
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    #[inline]
    fn add(self, other: Vec2) -> Vec2 {
        Vec2::new(self.x + other.x, self.y + other.y)
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    #[inline]
    fn sub(self, other: Vec2) -> Vec2 {
        Vec2::new(self.x - other.x, self.y - other.y)
    }
}

impl Mul<f64> for Vec2 {
    type Output = Vec2;
    #[inline]
    fn mul(self, k: f64) -> Vec2 {
        Vec2::new(self.x * k, self.y * k)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    #[inline]
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

/// A cubic Bézier segment.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CubicBez {
    pub p0: Point,
    pub p1: Point,
    pub p2: Point,
    pub p3: Point,
}

impl CubicBez {
    pub const fn new(p0: Point, p1: Point, p2: Point, p3: Point) -> CubicBez {
        CubicBez { p0, p1, p2, p3 }
    }

    pub fn eval(&self, t: f64) -> Point {
        let mt = 1.0 - t;
        let b0 = mt * mt * mt;
        let b1 = 3.0 * mt * mt * t;
        let b2 = 3.0 * mt * t * t;
        let b3 = t * t * t;
        Point::new(
            b0 * self.p0.x + b1 * self.p1.x + b2 * self.p2.x + b3 * self.p3.x,
            b0 * self.p0.y + b1 * self.p1.y + b2 * self.p2.y + b3 * self.p3.y,
        )
    }

    /// First derivative with respect to the curve parameter.
    pub fn deriv(&self, t: f64) -> Vec2 {
        let mt = 1.0 - t;
        let d0 = (self.p1 - self.p0) * (3.0 * mt * mt);
        let d1 = (self.p2 - self.p1) * (6.0 * mt * t);
        let d2 = (self.p3 - self.p2) * (3.0 * t * t);
        d0 + d1 + d2
    }

    /// Second derivative with respect to the curve parameter.
    pub fn deriv2(&self, t: f64) -> Vec2 {
        let mt = 1.0 - t;
        let v0 = (self.p2.to_vec2() - self.p1.to_vec2() * 2.0 + self.p0.to_vec2()) * (6.0 * mt);
        let v1 = (self.p3.to_vec2() - self.p2.to_vec2() * 2.0 + self.p1.to_vec2()) * (6.0 * t);
        v0 + v1
    }

    /// Monomial coefficients of the x and y coordinate polynomials,
    /// ascending degree: `[c0, c1, c2, c3]` with `x(t) = Σ cᵢ tᵢ`.
    pub fn power_basis(&self) -> ([f64; 4], [f64; 4]) {
        let (p0, p1, p2, p3) = (self.p0, self.p1, self.p2, self.p3);
        let cx = [
            p0.x,
            3.0 * (p1.x - p0.x),
            3.0 * (p2.x - 2.0 * p1.x + p0.x),
            p3.x - 3.0 * p2.x + 3.0 * p1.x - p0.x,
        ];
        let cy = [
            p0.y,
            3.0 * (p1.y - p0.y),
            3.0 * (p2.y - 2.0 * p1.y + p0.y),
            p3.y - 3.0 * p2.y + 3.0 * p1.y - p0.y,
        ];
        (cx, cy)
    }

    /// Control points of the reversed segment.
    pub fn reverse(&self) -> CubicBez {
        CubicBez::new(self.p3, self.p2, self.p1, self.p0)
    }

    /// Applies `f` to every control point.
    pub fn map_points(&self, mut f: impl FnMut(Point) -> Point) -> CubicBez {
        CubicBez::new(f(self.p0), f(self.p1), f(self.p2), f(self.p3))
    }

    /// Axis-aligned bounding box of the control polygon (contains the curve).
    pub fn control_bbox(&self) -> (Point, Point) {
        let xs = [self.p0.x, self.p1.x, self.p2.x, self.p3.x];
        let ys = [self.p0.y, self.p1.y, self.p2.y, self.p3.y];
        let mut min = Point::new(xs[0], ys[0]);
        let mut max = min;
        for i in 1..4 {
            min.x = min.x.min(xs[i]);
            min.y = min.y.min(ys[i]);
            max.x = max.x.max(xs[i]);
            max.y = max.y.max(ys[i]);
        }
        (min, max)
    }

    /// Splits the segment at `t` by de Casteljau subdivision.
    pub fn subdivide(&self, t: f64) -> (CubicBez, CubicBez) {
        let lerp = |a: Point, b: Point| Point::new(a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t);
        let q0 = lerp(self.p0, self.p1);
        let q1 = lerp(self.p1, self.p2);
        let q2 = lerp(self.p2, self.p3);
        let r0 = lerp(q0, q1);
        let r1 = lerp(q1, q2);
        let s = lerp(r0, r1);
        (
            CubicBez::new(self.p0, q0, r0, s),
            CubicBez::new(s, r1, q2, self.p3),
        )
    }
}

/// Bézier approximation of the circular arc of `radius` about `center` from
/// angle `a0` to `a1` (radians, counterclockwise for `a1 > a0`). Accurate for
/// spans up to a quarter turn; endpoints and end tangent directions are exact.
pub fn circle_arc(center: Point, radius: f64, a0: f64, a1: f64) -> CubicBez {
    let k = 4.0 / 3.0 * math::tan((a1 - a0) / 4.0) * radius;
    let (s0, c0) = math::sin_cos(a0);
    let (s1, c1) = math::sin_cos(a1);
    let p0 = Point::new(center.x + radius * c0, center.y + radius * s0);
    let p3 = Point::new(center.x + radius * c1, center.y + radius * s1);
    let t0 = Vec2::new(-s0, c0);
    let t1 = Vec2::new(-s1, c1);
    CubicBez::new(p0, p0 + t0 * k, p3 + t1 * -k, p3)
}
