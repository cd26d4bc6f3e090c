//! Graphviz DOT output with vertices filled by sign: white for +1, black for
//! -1, gray for 0. Layout is left to the renderer.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::product::SignPattern;

fn fill(sign: i8) -> &'static str {
    match sign {
        1 => "white",
        -1 => "black",
        _ => "gray",
    }
}

pub fn emit_dot(g: &Graph, p: &SignPattern) -> Result<String> {
    if p.len() != g.n() {
        return Err(Error::LengthMismatch {
            expected: g.n(),
            actual: p.len(),
        });
    }
    let mut out = String::from("graph G {\n");
    out.push_str("  node [shape=circle, style=filled, label=\"\", width=0.15];\n");
    for (v, &s) in p.signs.iter().enumerate() {
        writeln!(out, "  {v} [fillcolor={}];", fill(s)).unwrap();
    }
    for &(u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}
