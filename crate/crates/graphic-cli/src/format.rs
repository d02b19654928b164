//! The graphic file format: a UTF-8 JSON document.
//!
//! ```json
//! { "components": [ { "segments": [ { "bezier": [[x,y],[x,y],[x,y],[x,y]],
//!                                     "fold": "definite" | "indefinite",
//!                                     "sheet": "left" | "right" }, ... ],
//!                     "vertices": [ { "kind": "smooth" | "cusp" }, ... ] } ],
//!   "crossings": [ { "tag": "entangled" | "unentangled" }, ... ] }
//! ```
//!
//! `vertices[i]` sits between `segments[i]` and `segments[(i+1) mod n]`; the
//! `crossings` list is optional. The writer emits coordinates with 17
//! significant digits, which round-trips `f64` exactly.

use std::fmt::Write as _;

use graphic_core::{
    Component, CrossingTag, CubicBez, FoldType, Graphic, Point, Segment, SheetSide, Vertex,
    VertexKind,
};
use serde::Deserialize;

#[derive(Debug)]
pub enum ParseError {
    /// Malformed document: bad JSON or schema shape.
    Schema(String),
    /// A component's segment chain is not closed.
    Chain {
        component: usize,
        vertex: usize,
        gap: f64,
    },
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ParseError::Schema(msg) => write!(f, "schema error: {msg}"),
            ParseError::Chain {
                component,
                vertex,
                gap,
            } => write!(
                f,
                "chain error: component {component} breaks at vertex {vertex} (gap {gap:.3e})"
            ),
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphicFile {
    components: Vec<ComponentFile>,
    #[serde(default)]
    crossings: Option<Vec<CrossingFile>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ComponentFile {
    segments: Vec<SegmentFile>,
    vertices: Vec<VertexFile>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SegmentFile {
    bezier: [[f64; 2]; 4],
    fold: FoldFile,
    sheet: SheetFile,
}

#[derive(Deserialize)]
#[serde(rename_all = "lowercase")]
enum FoldFile {
    Definite,
    Indefinite,
}

#[derive(Deserialize)]
#[serde(rename_all = "lowercase")]
enum SheetFile {
    Left,
    Right,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct VertexFile {
    kind: KindFile,
}

#[derive(Deserialize)]
#[serde(rename_all = "lowercase")]
enum KindFile {
    Smooth,
    Cusp,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CrossingFile {
    tag: TagFile,
}

#[derive(Deserialize)]
#[serde(rename_all = "lowercase")]
enum TagFile {
    Entangled,
    Unentangled,
}

/// Parses a graphic document, checking the schema shape and chain closure.
pub fn parse_graphic(text: &str) -> Result<Graphic, ParseError> {
    let file: GraphicFile =
        serde_json::from_str(text).map_err(|e| ParseError::Schema(e.to_string()))?;
    if file.components.is_empty() {
        return Err(ParseError::Schema("no components".into()));
    }
    let mut components = Vec::new();
    for (ci, comp) in file.components.iter().enumerate() {
        if comp.segments.is_empty() {
            return Err(ParseError::Schema(format!(
                "component {ci} has no segments"
            )));
        }
        if comp.segments.len() != comp.vertices.len() {
            return Err(ParseError::Schema(format!(
                "component {ci}: {} segments but {} vertices",
                comp.segments.len(),
                comp.vertices.len()
            )));
        }
        let segments: Vec<Segment> = comp
            .segments
            .iter()
            .map(|s| {
                let p = |i: usize| Point::new(s.bezier[i][0], s.bezier[i][1]);
                Segment::new(
                    CubicBez::new(p(0), p(1), p(2), p(3)),
                    match s.fold {
                        FoldFile::Definite => FoldType::Definite,
                        FoldFile::Indefinite => FoldType::Indefinite,
                    },
                    match s.sheet {
                        SheetFile::Left => SheetSide::Left,
                        SheetFile::Right => SheetSide::Right,
                    },
                )
            })
            .collect();
        // Closure: each segment must end where the next one starts.
        let n = segments.len();
        for i in 0..n {
            let end = segments[i].bezier.p3;
            let start = segments[(i + 1) % n].bezier.p0;
            let scale = 1.0 + end.to_vec2().length();
            let gap = end.distance(start);
            if gap > graphic_core::TOL_GEOM * scale {
                return Err(ParseError::Chain {
                    component: ci,
                    vertex: i,
                    gap,
                });
            }
        }
        let vertices: Vec<Vertex> = comp
            .vertices
            .iter()
            .map(|v| Vertex {
                kind: match v.kind {
                    KindFile::Smooth => VertexKind::Smooth,
                    KindFile::Cusp => VertexKind::Cusp,
                },
            })
            .collect();
        components.push(Component { segments, vertices });
    }
    let mut g = Graphic::new(components);
    g.crossings = file.crossings.map(|list| {
        list.iter()
            .map(|c| match c.tag {
                TagFile::Entangled => CrossingTag::Entangled,
                TagFile::Unentangled => CrossingTag::Unentangled,
            })
            .collect()
    });
    Ok(g)
}

fn num(x: f64) -> String {
    format!("{x:.16e}")
}

/// Writes the graphic in the file format, one segment per line, with 17
/// significant digits per coordinate. Output is byte-deterministic.
pub fn serialize(g: &Graphic) -> String {
    let mut out = String::new();
    out.push_str("{\n  \"components\": [\n");
    for (ci, comp) in g.components.iter().enumerate() {
        out.push_str("    {\n      \"segments\": [\n");
        for (si, seg) in comp.segments.iter().enumerate() {
            let b = seg.bezier;
            let fold = match seg.fold {
                FoldType::Definite => "definite",
                FoldType::Indefinite => "indefinite",
            };
            let sheet = match seg.sheet {
                SheetSide::Left => "left",
                SheetSide::Right => "right",
            };
            let _ = writeln!(
                out,
                "        {{\"bezier\": [[{}, {}], [{}, {}], [{}, {}], [{}, {}]], \"fold\": \"{}\", \"sheet\": \"{}\"}}{}",
                num(b.p0.x), num(b.p0.y), num(b.p1.x), num(b.p1.y),
                num(b.p2.x), num(b.p2.y), num(b.p3.x), num(b.p3.y),
                fold, sheet,
                if si + 1 < comp.segments.len() { "," } else { "" }
            );
        }
        out.push_str("      ],\n      \"vertices\": [");
        for (vi, v) in comp.vertices.iter().enumerate() {
            let kind = match v.kind {
                VertexKind::Smooth => "smooth",
                VertexKind::Cusp => "cusp",
            };
            let _ = write!(
                out,
                "{{\"kind\": \"{}\"}}{}",
                kind,
                if vi + 1 < comp.vertices.len() {
                    ", "
                } else {
                    ""
                }
            );
        }
        out.push_str("]\n    }");
        out.push_str(if ci + 1 < g.components.len() {
            ",\n"
        } else {
            "\n"
        });
    }
    out.push_str("  ]");
    if let Some(crossings) = &g.crossings {
        out.push_str(",\n  \"crossings\": [");
        for (i, c) in crossings.iter().enumerate() {
            let tag = match c {
                CrossingTag::Entangled => "entangled",
                CrossingTag::Unentangled => "unentangled",
            };
            let _ = write!(
                out,
                "{{\"tag\": \"{}\"}}{}",
                tag,
                if i + 1 < crossings.len() { ", " } else { "" }
            );
        }
        out.push(']');
    }
    out.push_str("\n}\n");
    out
}
