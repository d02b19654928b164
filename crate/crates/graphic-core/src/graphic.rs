//! The abstract graphic: labeled cusped curve systems in the plane.

use alloc::vec::Vec;

use crate::geom::{CubicBez, Point, Vec2};

/// Fold type of a segment of the discriminant image.
///
/// Definite folds carry the local model `(u, x² + y²)`, indefinite folds the
/// local model `(u, x² − y²)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FoldType {
    Definite,
    Indefinite,
}

/// Which side of a segment, relative to its traversal direction, carries the
/// extra sheet structure of the Reeb complex: the unique 2-cell for a
/// definite edge, the two-sheet side for an indefinite edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SheetSide {
    Left,
    Right,
}

/// Kind of the vertex joining two consecutive segments of a component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexKind {
    /// The segments continue smoothly: equal unit tangents, equal fold type.
    Smooth,
    /// A cusp: anti-parallel unit tangents and opposite fold types.
    Cusp,
}

/// Classification of a cusp by the tangent line at its vertex: type one if
/// the line separates the two incident edge germs, type two if both germs
/// leave on the same side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CuspType {
    TypeOne,
    TypeTwo,
}

/// Crossing label carried by the input file; validated but not used by the
/// sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CrossingTag {
    Entangled,
    Unentangled,
}

/// One fold arc of a component: a cubic Bézier with fold and sheet labels.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Segment {
    pub bezier: CubicBez,
    pub fold: FoldType,
    pub sheet: SheetSide,
}

impl Segment {
    pub fn new(bezier: CubicBez, fold: FoldType, sheet: SheetSide) -> Segment {
        Segment {
            bezier,
            fold,
            sheet,
        }
    }

    /// Unit normal pointing toward the sheet side at parameter `s`.
    pub fn sheet_normal(&self, s: f64) -> Vec2 {
        let v = self.bezier.deriv(s).normalize();
        match self.sheet {
            SheetSide::Left => v.turn_left(),
            SheetSide::Right => -v.turn_left(),
        }
    }
}

/// Vertex between two consecutive segments. `vertices[i]` of a component
/// sits between `segments[i]` and `segments[(i + 1) % n]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub kind: VertexKind,
}

/// A closed chain of segments: the image of one circle of the discriminant
/// set.
#[derive(Clone, Debug, PartialEq)]
pub struct Component {
    pub segments: Vec<Segment>,
    pub vertices: Vec<Vertex>,
}

impl Component {
    /// Position of vertex `i` (the shared endpoint of segments `i` and
    /// `i + 1`).
    pub fn vertex_position(&self, i: usize) -> Point {
        self.segments[i].bezier.p3
    }

    /// The segments incident to vertex `i`: (incoming index, outgoing index).
    pub fn incident(&self, i: usize) -> (usize, usize) {
        (i, (i + 1) % self.segments.len())
    }
}

/// Reference to a segment within a graphic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SegmentRef {
    pub component: usize,
    pub segment: usize,
}

/// Reference to a vertex within a graphic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexRef {
    pub component: usize,
    pub vertex: usize,
}

/// An abstract Rubinstein–Scharlemann graphic.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Graphic {
    pub components: Vec<Component>,
    /// Optional crossing labels; their count must match the number of
    /// transversal double points of the drawing.
    pub crossings: Option<Vec<CrossingTag>>,
}

impl Graphic {
    pub fn new(components: Vec<Component>) -> Graphic {
        Graphic {
            components,
            crossings: None,
        }
    }

    pub fn segment(&self, r: SegmentRef) -> &Segment {
        &self.components[r.component].segments[r.segment]
    }

    /// Iterates over all segments with their references, in component order.
    pub fn segments(&self) -> impl Iterator<Item = (SegmentRef, &Segment)> {
        self.components.iter().enumerate().flat_map(|(ci, comp)| {
            comp.segments.iter().enumerate().map(move |(si, seg)| {
                (
                    SegmentRef {
                        component: ci,
                        segment: si,
                    },
                    seg,
                )
            })
        })
    }

    /// Iterates over all vertices with their references.
    pub fn vertices(&self) -> impl Iterator<Item = (VertexRef, &Vertex)> {
        self.components.iter().enumerate().flat_map(|(ci, comp)| {
            comp.vertices.iter().enumerate().map(move |(vi, v)| {
                (
                    VertexRef {
                        component: ci,
                        vertex: vi,
                    },
                    v,
                )
            })
        })
    }

    /// Iterates over cusp vertices only.
    pub fn cusps(&self) -> impl Iterator<Item = VertexRef> + '_ {
        self.vertices()
            .filter(|(_, v)| v.kind == VertexKind::Cusp)
            .map(|(r, _)| r)
    }

    pub fn segment_count(&self) -> usize {
        self.components.iter().map(|c| c.segments.len()).sum()
    }

    /// The incoming and outgoing segments at a vertex, as Béziers oriented
    /// away from the vertex (both germs leave the vertex point).
    pub fn vertex_germs(&self, r: VertexRef) -> (CubicBez, CubicBez) {
        let comp = &self.components[r.component];
        let (in_idx, out_idx) = comp.incident(r.vertex);
        let incoming = comp.segments[in_idx].bezier.reverse();
        let outgoing = comp.segments[out_idx].bezier;
        (incoming, outgoing)
    }

    /// Applies a point transform to every control point, keeping all labels.
    pub fn map_points(&self, mut f: impl FnMut(Point) -> Point) -> Graphic {
        let components = self
            .components
            .iter()
            .map(|c| Component {
                segments: c
                    .segments
                    .iter()
                    .map(|s| Segment {
                        bezier: s.bezier.map_points(&mut f),
                        ..*s
                    })
                    .collect(),
                vertices: c.vertices.clone(),
            })
            .collect();
        Graphic {
            components,
            crossings: self.crossings.clone(),
        }
    }

    /// The graphic rotated about the origin by `angle` radians,
    /// counterclockwise.
    pub fn rotate(&self, angle: f64) -> Graphic {
        self.map_points(|p| p.rotate(angle))
    }
}
