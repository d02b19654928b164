//! Horizontal-slice census: Euler characteristics of the level surface and
//! of its Reeb graph, read off the fold-edge crossings of a level line.
//!
//! A generic level line crossing `n` definite and `m` indefinite fold points
//! meets the Reeb graph of the level surface in `n` valence-one and `m`
//! valence-three vertices, so the graph has `n + m` vertices and
//! `n/2 + 3m/2` edges. The slice of the definite oval (n = 2, m = 0) is a
//! 2-sphere, which fixes the sign `χ(Σ) = n − m`.

use alloc::vec::Vec;
use core::fmt;

use crate::features::{rotated_height, FeatureError};
use crate::graphic::{FoldType, Graphic, VertexKind};
use crate::math;
use crate::poly::{real_roots_default, Polynomial};
use crate::sweep::{tangency_points, SweepError};

#[derive(Clone, Debug, PartialEq)]
pub enum SliceError {
    /// The level line passes within tolerance of a tangency, cusp or
    /// crossing.
    NonGenericLevel { level: f64 },
    /// `n + 3m` is odd: the crossing counts cannot come from a closed curve
    /// system.
    ParityError { n_def: u32, m_indef: u32 },
    /// The queried angle itself is degenerate.
    Sweep(SweepError),
}

impl fmt::Display for SliceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SliceError::NonGenericLevel { level } => {
                write!(f, "level {level:.12} is non-generic for the slice")
            }
            SliceError::ParityError { n_def, m_indef } => {
                write!(
                    f,
                    "crossing counts (n = {n_def}, m = {m_indef}) have odd edge sum"
                )
            }
            SliceError::Sweep(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for SliceError {}

impl From<SweepError> for SliceError {
    fn from(e: SweepError) -> SliceError {
        SliceError::Sweep(e)
    }
}

impl From<FeatureError> for SliceError {
    fn from(e: FeatureError) -> SliceError {
        SliceError::Sweep(SweepError::Degenerate(e))
    }
}

/// Transversal crossing counts of a level line with the rotated graphic.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SliceCensus {
    pub n_def: u32,
    pub m_indef: u32,
    pub level: f64,
    pub angle: f64,
}

/// Euler data of the slice; the parity law makes every entry an exact
/// integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SliceEuler {
    /// Vertices of the Reeb graph of the level surface: `n + m`.
    pub vertices: u32,
    /// Edges of the Reeb graph: `(n + 3m) / 2`.
    pub edges: u32,
    /// Euler characteristic of the Reeb graph: `(n − m) / 2`.
    pub chi_reeb: i64,
    /// Euler characteristic of the level surface: `n − m`.
    pub chi_sigma: i64,
}

/// What kind of level a profile breakpoint sits at. Crossing a tangency
/// height changes one crossing count by ±2; crossing a cusp height moves a
/// crossing between the two incident edges, changing both counts by ±1
/// together (the slice Euler characteristic is unchanged there).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BreakKind {
    Tangency,
    Cusp,
}

/// Censuses between consecutive breakpoint heights at a fixed angle.
#[derive(Clone, Debug, PartialEq)]
pub struct SliceProfile {
    pub angle: f64,
    /// Rotated heights of the tangency points and cusps, ascending.
    pub breakpoints: Vec<f64>,
    /// The kind of each breakpoint.
    pub kinds: Vec<BreakKind>,
    /// One census per open band, including below the lowest and above the
    /// highest breakpoint.
    pub censuses: Vec<SliceCensus>,
}

/// Counts the transversal crossings of the level line (perpendicular to the
/// rotated height axis) with each fold type.
pub fn slice_census(g: &Graphic, angle: f64, level: f64) -> Result<SliceCensus, SliceError> {
    let scale = 1.0 + level.abs();
    let tol = crate::TOL_GEOM * scale;

    // The level must stay clear of tangencies, cusps and crossings.
    for t in tangency_points(g, angle)? {
        if math::abs(t.height - level) <= tol {
            return Err(SliceError::NonGenericLevel { level });
        }
    }
    for (ci, comp) in g.components.iter().enumerate() {
        for (vi, v) in comp.vertices.iter().enumerate() {
            if v.kind == VertexKind::Cusp {
                let h = rotated_height(comp.vertex_position(vi), angle);
                if math::abs(h - level) <= tol {
                    return Err(SliceError::NonGenericLevel { level });
                }
            }
        }
        let _ = ci;
    }
    let mut scratch = Vec::new();
    for (_, _, inter) in crate::validate::find_crossings(g, &mut scratch) {
        if math::abs(rotated_height(inter.point, angle) - level) <= tol {
            return Err(SliceError::NonGenericLevel { level });
        }
    }

    let mut n_def = 0u32;
    let mut m_indef = 0u32;
    let mut offset = 0usize;
    let mut per_seg: Vec<Vec<f64>> = Vec::new();
    for comp in &g.components {
        for seg in &comp.segments {
            let poly = height_poly(&seg.bezier, angle, level);
            let roots = match real_roots_default(&poly, (0.0, 1.0)) {
                Ok(r) => r,
                // A whole segment inside the level line would be flagged by
                // validation; treat as non-generic here.
                Err(_) => return Err(SliceError::NonGenericLevel { level }),
            };
            let mut list = Vec::new();
            for root in &roots.roots {
                if root.multiplicity >= 2 {
                    return Err(SliceError::NonGenericLevel { level });
                }
                list.push(root.value);
            }
            per_seg.push(list);
        }
    }
    // Shared-vertex roots are found by both incident segments; count once.
    for comp in &g.components {
        let n = comp.segments.len();
        for si in 0..n {
            let next_has_start = per_seg[offset + (si + 1) % n]
                .first()
                .is_some_and(|&r| r <= 1e-6);
            if next_has_start {
                let roots = &mut per_seg[offset + si];
                if roots.last().is_some_and(|&r| r >= 1.0 - 1e-6) {
                    roots.pop();
                }
            }
        }
        offset += n;
    }
    let mut idx = 0usize;
    for comp in &g.components {
        for seg in &comp.segments {
            for &_r in &per_seg[idx] {
                match seg.fold {
                    FoldType::Definite => n_def += 1,
                    FoldType::Indefinite => m_indef += 1,
                }
            }
            idx += 1;
        }
    }

    Ok(SliceCensus {
        n_def,
        m_indef,
        level,
        angle,
    })
}

fn height_poly(bez: &crate::geom::CubicBez, angle: f64, level: f64) -> Polynomial {
    let (sin_t, cos_t) = math::sin_cos(angle);
    let (cx, cy) = bez.power_basis();
    Polynomial::new([
        cx[0] * sin_t + cy[0] * cos_t - level,
        cx[1] * sin_t + cy[1] * cos_t,
        cx[2] * sin_t + cy[2] * cos_t,
        cx[3] * sin_t + cy[3] * cos_t,
    ])
}

/// Euler data of a slice census. `V = n + m`, `E = n/2 + 3m/2`,
/// `χ(R) = (n − m)/2`, `χ(Σ) = n − m`.
pub fn slice_euler(census: &SliceCensus) -> Result<SliceEuler, SliceError> {
    let n = census.n_def;
    let m = census.m_indef;
    if !(n + 3 * m).is_multiple_of(2) {
        return Err(SliceError::ParityError {
            n_def: n,
            m_indef: m,
        });
    }
    Ok(SliceEuler {
        vertices: n + m,
        edges: (n + 3 * m) / 2,
        chi_reeb: (n as i64 - m as i64) / 2,
        chi_sigma: n as i64 - m as i64,
    })
}

/// The census of every level band at a fixed non-event angle. Breakpoints
/// are the tangency heights together with the cusp heights; across a
/// tangency breakpoint exactly one crossing count changes by ±2, across a
/// cusp breakpoint both counts step by ±1 together.
pub fn slice_profile(g: &Graphic, angle: f64) -> Result<SliceProfile, SliceError> {
    let tangencies = tangency_points(g, angle)?;
    let mut marks: Vec<(f64, BreakKind)> = tangencies
        .iter()
        .map(|t| (t.height, BreakKind::Tangency))
        .collect();
    for comp in &g.components {
        for (vi, v) in comp.vertices.iter().enumerate() {
            if v.kind == VertexKind::Cusp {
                let h = rotated_height(comp.vertex_position(vi), angle);
                marks.push((h, BreakKind::Cusp));
            }
        }
    }
    marks.sort_by(|a, b| a.0.total_cmp(&b.0));
    let level_tol =
        crate::TOL_GEOM * (1.0 + marks.iter().fold(0.0f64, |m, x| m.max(math::abs(x.0))));
    if marks.windows(2).any(|w| w[1].0 - w[0].0 <= level_tol) {
        return Err(SliceError::NonGenericLevel { level: marks[0].0 });
    }

    let breakpoints: Vec<f64> = marks.iter().map(|m| m.0).collect();
    let kinds: Vec<BreakKind> = marks.iter().map(|m| m.1).collect();

    let mut levels = Vec::with_capacity(breakpoints.len() + 1);
    if breakpoints.is_empty() {
        levels.push(0.0);
    } else {
        levels.push(breakpoints[0] - 1.0);
        for w in breakpoints.windows(2) {
            levels.push(0.5 * (w[0] + w[1]));
        }
        levels.push(breakpoints[breakpoints.len() - 1] + 1.0);
    }

    let mut censuses = Vec::with_capacity(levels.len());
    for level in levels {
        censuses.push(slice_census(g, angle, level)?);
    }

    for (i, w) in censuses.windows(2).enumerate() {
        let dn = w[1].n_def as i64 - w[0].n_def as i64;
        let dm = w[1].m_indef as i64 - w[0].m_indef as i64;
        let consistent = match kinds[i] {
            BreakKind::Tangency => (dn.abs() == 2 && dm == 0) || (dn == 0 && dm.abs() == 2),
            BreakKind::Cusp => dn.abs() == 1 && dm == dn,
        };
        if !consistent {
            return Err(SliceError::NonGenericLevel { level: w[1].level });
        }
    }

    Ok(SliceProfile {
        angle,
        breakpoints,
        kinds,
        censuses,
    })
}
