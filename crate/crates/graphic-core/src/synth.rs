//! Deterministic synthetic graphics for the test suites: a tiny seeded RNG,
//! radial-curve components fitted by cubic Hermite segments, and a generator
//! of randomized valid graphics.
//!
//! Everything here is test support; it is compiled only for tests or behind
//! the `synth` feature.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::geom::{CubicBez, Point, Vec2};
use crate::graphic::{Component, FoldType, Graphic, Segment, SheetSide, Vertex, VertexKind};

/// Splitmix64: small, seedable, reproducible across platforms.
#[derive(Clone, Debug)]
pub struct Rng {
    state: u64,
}

impl Rng {
    pub fn new(seed: u64) -> Rng {
        Rng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)`.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }

    pub fn chance(&mut self, p: f64) -> bool {
        self.next_f64() < p
    }
}

/// A localized concavity carved into a radial curve.
#[derive(Clone, Copy, Debug)]
pub struct Dent {
    /// Polar angle of the dent center.
    pub center: f64,
    /// Angular half-width.
    pub half_width: f64,
    /// Radial depth at the center.
    pub depth: f64,
}

/// A perturbed-circle component: `r(φ) = radius·(1 + Σ aₖ cos(kφ+ψₖ)) − dent`.
#[derive(Clone, Debug)]
pub struct RadialSpec {
    pub center: Point,
    pub radius: f64,
    /// Harmonic perturbations `(k, amplitude, phase)`; amplitudes are
    /// relative to `radius`.
    pub harmonics: Vec<(u32, f64, f64)>,
    pub dent: Option<Dent>,
    pub fold: FoldType,
    /// Sheet side toward the enclosed region (`Left` for the
    /// counterclockwise traversal used here) when true, away when false.
    pub sheet_inside: bool,
    /// Number of Bézier segments fitted around the curve.
    pub segments: usize,
    /// Polar angle of the first knot.
    pub knot_phase: f64,
}

impl RadialSpec {
    fn r(&self, phi: f64) -> f64 {
        let mut r = self.radius;
        for &(k, a, psi) in &self.harmonics {
            r += self.radius * a * crate::math::cos(k as f64 * phi + psi);
        }
        if let Some(d) = &self.dent {
            r -= dent_profile(d, phi);
        }
        r
    }

    fn dr(&self, phi: f64) -> f64 {
        let mut dr = 0.0;
        for &(k, a, psi) in &self.harmonics {
            dr -= self.radius * a * k as f64 * crate::math::sin(k as f64 * phi + psi);
        }
        if let Some(d) = &self.dent {
            dr -= dent_profile_deriv(d, phi);
        }
        dr
    }

    fn point(&self, phi: f64) -> Point {
        let (s, c) = crate::math::sin_cos(phi);
        let r = self.r(phi);
        Point::new(self.center.x + r * c, self.center.y + r * s)
    }

    /// Velocity with respect to the polar parameter.
    fn velocity(&self, phi: f64) -> Vec2 {
        let (s, c) = crate::math::sin_cos(phi);
        let r = self.r(phi);
        let dr = self.dr(phi);
        Vec2::new(dr * c - r * s, dr * s + r * c)
    }
}

fn wrap_delta(d: f64) -> f64 {
    let mut d = d % (2.0 * PI);
    if d > PI {
        d -= 2.0 * PI;
    }
    if d < -PI {
        d += 2.0 * PI;
    }
    d
}

/// Raised-cosine radial dent, C¹ at its boundary.
fn dent_profile(d: &Dent, phi: f64) -> f64 {
    let delta = wrap_delta(phi - d.center);
    if delta.abs() >= d.half_width {
        return 0.0;
    }
    let u = delta / d.half_width * (PI / 2.0);
    let c = crate::math::cos(u);
    d.depth * c * c
}

fn dent_profile_deriv(d: &Dent, phi: f64) -> f64 {
    let delta = wrap_delta(phi - d.center);
    if delta.abs() >= d.half_width {
        return 0.0;
    }
    let w = PI / 2.0 / d.half_width;
    let u = delta * w;
    -d.depth * crate::math::sin(2.0 * u) * w
}

/// Fits the radial curve with cubic Hermite segments sharing exact tangent
/// directions at the knots, producing a closed all-smooth component.
pub fn radial_component(spec: &RadialSpec) -> Component {
    let n = spec.segments;
    let step = 2.0 * PI / n as f64;
    let mut segments = Vec::with_capacity(n);
    for i in 0..n {
        let phi0 = spec.knot_phase + step * i as f64;
        let phi1 = phi0 + step;
        let p0 = spec.point(phi0);
        let p3 = spec.point(phi1);
        let v0 = spec.velocity(phi0);
        let v1 = spec.velocity(phi1);
        let bez = CubicBez::new(p0, p0 + v0 * (step / 3.0), p3 + v1 * (-step / 3.0), p3);
        segments.push(Segment::new(
            bez,
            spec.fold,
            if spec.sheet_inside {
                SheetSide::Left
            } else {
                SheetSide::Right
            },
        ));
    }
    // Close the chain exactly: the wrap-around knot must be bit-identical.
    let first_start = segments[0].bezier.p0;
    segments.last_mut().unwrap().bezier.p3 = first_start;
    let vertices = (0..n)
        .map(|_| Vertex {
            kind: VertexKind::Smooth,
        })
        .collect();
    Component { segments, vertices }
}

/// Draws a randomized valid graphic: a definite outer oval (sheet inside),
/// optionally an indefinite oval nested inside it, optionally a definite
/// satellite oval (sheet outside) placed far away. Dents carve negative-slope
/// inflection pairs into some of the curves. The draw is retried until the
/// sample passes validation and its sweep machinery is everywhere defined.
pub fn random_graphic(rng: &mut Rng) -> Graphic {
    for _ in 0..60 {
        let g = draw_candidate(rng);
        if crate::validate(&g).passed() && sweep_works(&g) {
            return g;
        }
    }
    panic!("synth: no valid graphic after 60 attempts");
}

fn sweep_works(g: &Graphic) -> bool {
    let sched = match crate::event_schedule(g) {
        Ok(s) => s,
        Err(_) => return false,
    };
    if !sched.warnings.is_empty() {
        return false;
    }
    crate::genus_trajectory(g).is_ok()
}

/// A dent center angle in one of the two polar zones where the tangent slope
/// is negative (upper-right and lower-left quadrants), with margins keeping
/// the inflection slopes away from horizontal and vertical.
fn dent_angle(rng: &mut Rng) -> f64 {
    let base = rng.range(0.35, 1.2);
    if rng.chance(0.5) {
        base
    } else {
        base + PI
    }
}

fn draw_candidate(rng: &mut Rng) -> Graphic {
    let mut components = Vec::new();

    let harmonics = |rng: &mut Rng, max_amp: f64| {
        let mut hs = Vec::new();
        for k in 2..=3u32 {
            if rng.chance(0.7) {
                hs.push((k, rng.range(0.005, max_amp), rng.range(0.0, 2.0 * PI)));
            }
        }
        hs
    };

    let outer_dent = rng.chance(0.35);
    let outer = RadialSpec {
        center: Point::new(rng.range(-0.1, 0.1), rng.range(-0.1, 0.1)),
        radius: rng.range(1.0, 1.3),
        harmonics: harmonics(rng, 0.02),
        dent: outer_dent.then(|| Dent {
            center: dent_angle(rng),
            half_width: rng.range(0.55, 0.8),
            depth: rng.range(0.1, 0.16),
        }),
        fold: FoldType::Definite,
        sheet_inside: true,
        segments: 10,
        knot_phase: rng.range(0.0, 0.6),
    };
    components.push(radial_component(&outer));

    if rng.chance(0.65) {
        let inner = RadialSpec {
            center: Point::new(rng.range(-0.12, 0.12), rng.range(-0.12, 0.12)),
            radius: rng.range(0.38, 0.5),
            harmonics: harmonics(rng, 0.015),
            dent: rng.chance(0.75).then(|| Dent {
                center: dent_angle(rng),
                half_width: rng.range(0.5, 0.75),
                depth: rng.range(0.045, 0.07),
            }),
            fold: FoldType::Indefinite,
            sheet_inside: rng.chance(0.5),
            segments: 9,
            knot_phase: rng.range(0.0, 0.6),
        };
        components.push(radial_component(&inner));
    }

    if rng.chance(0.35) {
        let dir = rng.range(0.0, 2.0 * PI);
        let dist = rng.range(3.2, 4.2);
        let satellite = RadialSpec {
            center: Point::new(dist * crate::math::cos(dir), dist * crate::math::sin(dir)),
            radius: rng.range(0.3, 0.45),
            harmonics: harmonics(rng, 0.015),
            dent: None,
            fold: FoldType::Definite,
            sheet_inside: false,
            segments: 8,
            knot_phase: rng.range(0.0, 0.6),
        };
        components.push(radial_component(&satellite));
    }

    Graphic::new(components)
}

/// Dense-sampling oracles used to check the analytic queries. These rely on
/// nothing but direct pointwise evaluation of the segment derivatives.
pub mod oracle {
    use super::*;
    use crate::features::rotated_height;

    /// Number of horizontal tangencies of a segment after rotating by
    /// `angle`, counted as sign changes of the height derivative over
    /// `samples` uniform steps.
    pub fn tangency_count(bez: &CubicBez, angle: f64, samples: usize) -> usize {
        let (sin_t, cos_t) = (crate::math::sin(angle), crate::math::cos(angle));
        let f = |s: f64| {
            let v = bez.deriv(s);
            v.x * sin_t + v.y * cos_t
        };
        let mut count = 0;
        let mut prev = f(0.0);
        for i in 1..=samples {
            let s = i as f64 / samples as f64;
            let cur = f(s);
            if prev != 0.0 && cur != 0.0 && (prev > 0.0) != (cur > 0.0) {
                count += 1;
            }
            if cur != 0.0 {
                prev = cur;
            }
        }
        count
    }

    /// Total tangency count over a graphic by dense sampling.
    pub fn graphic_tangency_count(g: &Graphic, angle: f64, samples: usize) -> usize {
        g.segments()
            .map(|(_, seg)| tangency_count(&seg.bezier, angle, samples))
            .sum()
    }

    /// Number of transversal crossings of the rotated level line with a
    /// segment, by dense sampling of `h − level`.
    pub fn slice_crossings(bez: &CubicBez, angle: f64, level: f64, samples: usize) -> usize {
        let f = |s: f64| rotated_height(bez.eval(s), angle) - level;
        let mut count = 0;
        let mut prev = f(0.0);
        for i in 1..=samples {
            let s = i as f64 / samples as f64;
            let cur = f(s);
            if prev != 0.0 && cur != 0.0 && (prev > 0.0) != (cur > 0.0) {
                count += 1;
            }
            if cur != 0.0 {
                prev = cur;
            }
        }
        count
    }
}
