//! File formats, rendering and the verification harness around
//! [`syncset_core`].
//!
//! - [`json`]: automaton, graph, witness and gadget documents;
//! - [`dimacs`]: the DIMACS `p edge` graph format;
//! - [`dot`]: Graphviz rendering of automata;
//! - [`verify`]: seeded and exhaustive checks of every gadget prediction.

pub mod dimacs;
pub mod dot;
mod error;
pub mod json;
pub mod verify;

pub use error::FormatError;

/// Parses a graph in either supported format: JSON when the first
/// non-blank character is `{`, DIMACS otherwise.
pub fn parse_graph_any(text: &str) -> Result<syncset_core::Graph, FormatError> {
    if text.trim_start().starts_with('{') {
        json::parse_graph(text)
    } else {
        dimacs::parse_graph(text)
    }
}
