//! Analysis engine for Rubinstein–Scharlemann graphics.
//!
//! A *graphic* is a closed planar curve system drawn by the discriminant set
//! of a pair of Morse functions on a 3-manifold: one or more circles immersed
//! with cusps, every arc labeled as a definite or indefinite fold edge and
//! carrying a sheet-side annotation describing the local Reeb complex. This
//! crate models such graphics abstractly (as chains of cubic Bézier segments),
//! validates the local singularity axioms, and sweeps the projection angle
//! from one axis to the other to read off how the induced Heegaard splitting
//! changes:
//!
//! * [`validate`](fn@validate) checks the local axioms (fold alternation at cusps, tangent
//!   conditions, transversal crossings, nondegenerate segments, sheet-side
//!   compatibility).
//! * [`critical_census`] counts the horizontal tangencies of the rotated
//!   graphic by Morse index; [`genus_at`] turns a census into the genus of
//!   the induced splitting.
//! * [`event_schedule`] finds every angle at which the projection fails to be
//!   Morse (horizontal inflections, horizontal cusps, doubly tangent lines)
//!   and [`genus_trajectory`] tracks the genus across them.
//! * [`stable_genus_bound`] certifies the common-stabilization bound
//!   `(p + q + c) / 2`, where `p` and `q` are the end genera and `c` counts
//!   the negative-slope indefinite inflections and type-two cusps.
//! * [`slice`](mod@slice) gives the Euler-characteristic census of horizontal slices of
//!   the graphic (the Reeb graph of a level surface).
//! * [`stab`] is the stabilization-sequence calculus used to reduce a move
//!   sequence to monotone form.
//!
//! The crate is `no_std`-compatible (with `alloc`); enable the `libm` feature
//! when building without `std`.
//!
//! ```
//! use graphic_core::{geom, Component, FoldType, Graphic, Segment, SheetSide,
//!     Vertex, VertexKind};
//! use std::f64::consts::FRAC_PI_2;
//!
//! // A definite oval: four circular arcs, sheet side toward the interior.
//! let mut segments: Vec<Segment> = (0..4)
//!     .map(|i| {
//!         let a = i as f64 * FRAC_PI_2;
//!         let arc = geom::circle_arc(geom::Point::new(0.0, 0.0), 1.0, a, a + FRAC_PI_2);
//!         Segment::new(arc, FoldType::Definite, SheetSide::Left)
//!     })
//!     .collect();
//! let start = segments[0].bezier.p0;
//! segments[3].bezier.p3 = start; // weld the wrap-around vertex exactly
//! let vertices = vec![Vertex { kind: VertexKind::Smooth }; 4];
//! let graphic = Graphic::new(vec![Component { segments, vertices }]);
//!
//! assert!(graphic_core::validate(&graphic).passed());
//! let census = graphic_core::critical_census(&graphic, 0.7).unwrap();
//! assert_eq!(census.as_tuple(), (1, 0, 0, 1)); // one minimum, one maximum
//! assert_eq!(graphic_core::genus_at(&graphic, 0.7).unwrap(), 0);
//! assert!(graphic_core::genus_trajectory(&graphic).unwrap().events.is_empty());
//! ```

#![cfg_attr(not(feature = "std"), no_std)]

#[cfg(not(any(feature = "std", feature = "libm")))]
compile_error!("graphic-core requires either the `std` or `libm` feature");

extern crate alloc;

mod math;

pub mod features;
pub mod geom;
pub mod graphic;
pub mod intersect;
pub mod poly;
pub mod slice;
pub mod stab;
pub mod sweep;
pub mod validate;

#[cfg(any(test, feature = "synth"))]
pub mod synth;

pub use features::{classify_cusp, classify_cusp_germs, inflections, tangencies, Inflection};
pub use geom::{CubicBez, Point, Vec2};
pub use graphic::{
    Component, CrossingTag, CuspType, FoldType, Graphic, Segment, SegmentRef, SheetSide, Vertex,
    VertexKind, VertexRef,
};
pub use slice::{slice_census, slice_euler, slice_profile, SliceCensus, SliceProfile};
pub use slice::{BreakKind, SliceError, SliceEuler};
pub use stab::StabError;
pub use stab::{common_stab_genus, from_trajectory, reduce, MoveSequence, ReducedSequence};
pub use sweep::{
    bound_from_parts, classify_event, common_tangent_lines, count_c, critical_census,
    doubly_tangent_lines, event_schedule, genus_at, genus_trajectory, stable_genus_bound,
    tangency_points, trajectory_from_schedule, BitangentLine, CriticalCensus, Event,
    EventCandidate, EventKind, EventLocation, GenericityWarning, Schedule, SweepError, Tangency,
    Trajectory,
};
pub use validate::{double_points, validate, DoublePoint, ValidationReport, Violation};

/// Tolerance for coincidence of points, in coordinate units.
pub const TOL_GEOM: f64 = 1e-9;
/// Tolerance on unit-tangent dot products at vertices.
pub const TOL_ANGLE: f64 = 1e-9;
/// Threshold on the curvature-normalized side measure of a cusp germ.
pub const TOL_SIDE: f64 = 1e-7;
/// Arc-length offset at which cusp germ sides are probed.
pub const SIDE_OFFSET: f64 = 1e-4;
/// Tolerance for event-angle deduplication and tie detection, in radians.
pub const TOL_EVENT: f64 = 1e-8;
/// Parameter tolerance for root refinement.
pub const TOL_PARAM: f64 = 1e-12;
