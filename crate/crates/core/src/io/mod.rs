//! Reading and writing graphs, and emitting reports and pictures.
//!
//! Parsers and emitters work on bytes and strings; the only file-system
//! access is [`named::load_named`].

pub mod dot;
pub mod edge_list;
pub mod graph6;
pub mod heatmap;
pub mod named;
pub mod report;

pub use dot::emit_dot;
pub use edge_list::{parse_edge_list, write_edge_list};
pub use graph6::{parse_graph6, write_graph6};
pub use heatmap::{emit_heatmap_csv, emit_heatmap_ppm};
pub use named::{load_named, NamedGraph, NAMED_GRAPHS};
pub use report::{emit_report_json, to_json_string};
