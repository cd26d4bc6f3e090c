//! Named graphs shipped as edge-list files.
//!
//! Files are looked up as `<dir>/<name>.txt`, where `<dir>` is
//! `$HFPROD_GRAPH_DIR` if set and the crate's `data/graphs` directory
//! otherwise. Each load is checked against the manifest below.

use std::path::PathBuf;

use super::edge_list::parse_edge_list;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const GRAPH_DIR_ENV: &str = "HFPROD_GRAPH_DIR";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NamedGraph {
    pub name: &'static str,
    pub vertices: usize,
    pub edges: Option<usize>,
    pub regular: Option<usize>,
}

pub const NAMED_GRAPHS: &[NamedGraph] = &[
    NamedGraph {
        name: "thomassen-94",
        vertices: 94,
        edges: Some(141),
        regular: Some(3),
    },
    NamedGraph {
        name: "thomassen-105",
        vertices: 105,
        edges: None,
        regular: None,
    },
    NamedGraph {
        name: "tutte",
        vertices: 46,
        edges: Some(69),
        regular: Some(3),
    },
    NamedGraph {
        name: "wiener-araya",
        vertices: 42,
        edges: Some(67),
        regular: None,
    },
    NamedGraph {
        name: "deltoidal-icositetrahedron",
        vertices: 26,
        edges: Some(48),
        regular: None,
    },
    NamedGraph {
        name: "small-rhombicuboctahedron",
        vertices: 24,
        edges: Some(48),
        regular: Some(4),
    },
];

pub fn graph_dir() -> PathBuf {
    std::env::var_os(GRAPH_DIR_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/data/graphs")))
}

pub fn manifest(name: &str) -> Option<&'static NamedGraph> {
    NAMED_GRAPHS.iter().find(|g| g.name == name)
}

/// Loads a registered graph. Unknown names and missing files are
/// [`Error::NotProvisioned`]; a file that parses but disagrees with the
/// manifest is [`Error::ManifestMismatch`].
pub fn load_named(name: &str) -> Result<Graph> {
    let entry = manifest(name).ok_or_else(|| Error::NotProvisioned {
        name: name.to_owned(),
        reason: "not in the named-graph registry".into(),
    })?;
    let path = graph_dir().join(format!("{name}.txt"));
    let text = match std::fs::read_to_string(&path) {
        Ok(text) => text,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => {
            return Err(Error::NotProvisioned {
                name: name.to_owned(),
                reason: format!("no data file at {}", path.display()),
            })
        }
        Err(e) => return Err(e.into()),
    };
    let g = parse_edge_list(&text)?;
    check_manifest(entry, &g)?;
    Ok(g)
}

fn check_manifest(entry: &NamedGraph, g: &Graph) -> Result<()> {
    let mismatch = |message: String| Error::ManifestMismatch {
        name: entry.name.to_owned(),
        message,
    };
    if g.n() != entry.vertices {
        return Err(mismatch(format!(
            "{} vertices, expected {}",
            g.n(),
            entry.vertices
        )));
    }
    if let Some(m) = entry.edges {
        if g.edge_count() != m {
            return Err(mismatch(format!("{} edges, expected {m}", g.edge_count())));
        }
    }
    if let Some(d) = entry.regular {
        if g.is_regular() != Some(d) {
            return Err(mismatch(format!("not {d}-regular")));
        }
    }
    Ok(())
}
