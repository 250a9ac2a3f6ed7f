//! Library side of the `k3nef` command-line tool: typed output
//! documents (shared with the integration tests for round-tripping),
//! plain-text rendering, and the SVG wall renderer.

pub mod output;
pub mod svg;
pub mod text;
