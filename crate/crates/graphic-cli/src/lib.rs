//! Support library for the `graphic` binary: file format, shipped example
//! graphics, report rendering and SVG plotting.

pub mod format;
pub mod report;
pub mod shipped;
pub mod svg;
