//! Structured, machine-readable reports with a stable schema.
//!
//! Reports are deterministic: identical inputs produce byte-identical
//! output. Angles are reported in radians rounded to 12 significant digits.

use graphic_core::{
    Event, EventLocation, Schedule, SliceCensus, SliceEuler, Trajectory, ValidationReport,
};
use serde::Serialize;

pub const SCHEMA: u32 = 1;

/// Rounds to 12 significant decimal digits so the JSON number is stable.
pub fn round_angle(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    let digits = 12 - 1 - x.abs().log10().floor() as i32;
    let scale = 10f64.powi(digits);
    (x * scale).round() / scale
}

#[derive(Serialize)]
pub struct ValidateReport {
    pub schema: u32,
    pub file: String,
    pub status: &'static str,
    pub violations: Vec<String>,
}

impl ValidateReport {
    pub fn new(file: &str, report: &ValidationReport) -> ValidateReport {
        ValidateReport {
            schema: SCHEMA,
            file: file.to_string(),
            status: if report.passed() {
                "pass"
            } else {
                "violations"
            },
            violations: report.violations.iter().map(|v| v.to_string()).collect(),
        }
    }

    pub fn text(&self) -> String {
        let mut out = format!("validate {}: {}\n", self.file, self.status);
        for v in &self.violations {
            out.push_str("  ");
            out.push_str(v);
            out.push('\n');
        }
        out
    }
}

#[derive(Serialize)]
pub struct EventRow {
    pub angle: f64,
    pub kind: String,
    pub location: String,
    pub genus_delta: i32,
}

impl EventRow {
    fn new(e: &Event) -> EventRow {
        let location = match &e.location {
            EventLocation::Inflection { seg, s, point } => format!(
                "inflection segment {}/{} s={:.6} at ({:.6}, {:.6})",
                seg.component, seg.segment, s, point.x, point.y
            ),
            EventLocation::Cusp { vertex, point } => format!(
                "cusp vertex {}/{} at ({:.6}, {:.6})",
                vertex.component, vertex.vertex, point.x, point.y
            ),
            EventLocation::DoubleTangency { touches } => {
                let touches = touches
                    .iter()
                    .map(|(seg, s)| format!("{}/{} s={:.6}", seg.component, seg.segment, s))
                    .collect::<Vec<_>>()
                    .join(", ");
                format!("doubly tangent line touching {touches}")
            }
        };
        EventRow {
            angle: round_angle(e.angle),
            kind: e.kind.to_string(),
            location,
            genus_delta: e.genus_delta,
        }
    }
}

#[derive(Serialize)]
pub struct SweepReport {
    pub schema: u32,
    pub file: String,
    pub events: Vec<EventRow>,
    pub breakpoints: Vec<f64>,
    pub genera: Vec<u32>,
    pub q: u32,
    pub p: u32,
    pub c: u32,
    pub bound: u32,
    pub warnings: Vec<String>,
}

impl SweepReport {
    pub fn new(
        file: &str,
        schedule: &Schedule,
        trajectory: &Trajectory,
        c: u32,
        bound: u32,
    ) -> SweepReport {
        SweepReport {
            schema: SCHEMA,
            file: file.to_string(),
            events: schedule.events.iter().map(EventRow::new).collect(),
            breakpoints: trajectory
                .breakpoints
                .iter()
                .map(|&a| round_angle(a))
                .collect(),
            genera: trajectory.genera.clone(),
            q: trajectory.q(),
            p: trajectory.p(),
            c,
            bound,
            warnings: schedule
                .warnings
                .iter()
                .map(|w| format!("events within {:.3e} rad near angle {:.12}", w.gap, w.angle))
                .collect(),
        }
    }

    pub fn text(&self) -> String {
        let mut out = format!("sweep {}\n", self.file);
        if self.events.is_empty() {
            out.push_str("events: none\n");
        } else {
            out.push_str("events:\n");
            out.push_str("  angle            kind                   delta  location\n");
            for e in &self.events {
                out.push_str(&format!(
                    "  {:<16} {:<22} {:>5}  {}\n",
                    format!("{:.12}", e.angle),
                    e.kind,
                    e.genus_delta,
                    e.location
                ));
            }
        }
        out.push_str(&format!("genera: {:?}\n", self.genera));
        out.push_str(&format!(
            "q = {}, p = {}, c = {}, stable genus bound (p+q+c)/2 = {}\n",
            self.q, self.p, self.c, self.bound
        ));
        for w in &self.warnings {
            out.push_str(&format!("warning: {w}\n"));
        }
        out
    }
}

#[derive(Serialize)]
pub struct SliceReport {
    pub schema: u32,
    pub file: String,
    pub angle: f64,
    pub level: f64,
    pub n_def: u32,
    pub m_indef: u32,
    pub vertices: u32,
    pub edges: u32,
    pub chi_reeb: i64,
    pub chi_sigma: i64,
}

impl SliceReport {
    pub fn new(file: &str, census: &SliceCensus, euler: &SliceEuler) -> SliceReport {
        SliceReport {
            schema: SCHEMA,
            file: file.to_string(),
            angle: round_angle(census.angle),
            level: census.level,
            n_def: census.n_def,
            m_indef: census.m_indef,
            vertices: euler.vertices,
            edges: euler.edges,
            chi_reeb: euler.chi_reeb,
            chi_sigma: euler.chi_sigma,
        }
    }

    pub fn text(&self) -> String {
        format!(
            "slice {} at angle {:.12}, level {}\n\
             crossings: {} definite, {} indefinite\n\
             Reeb graph: {} vertices, {} edges, chi = {}\n\
             level surface: chi = {}\n",
            self.file,
            self.angle,
            self.level,
            self.n_def,
            self.m_indef,
            self.vertices,
            self.edges,
            self.chi_reeb,
            self.chi_sigma
        )
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serialization");
    s.push('\n');
    s
}
