//! Plain-text edge lists.
//!
//! ```text
//! # comment
//! n 3
//! 0 1
//! 1 2
//! ```
//!
//! The `n <count>` header is mandatory and precedes the edges, so isolated
//! vertices survive a round trip. Vertices are 0-indexed.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = BTreeSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::parse_at_line(
                line_no,
                format!("expected two fields, got `{line}`"),
            ));
        }
        if fields[0] == "n" {
            if n.is_some() {
                return Err(Error::parse_at_line(line_no, "repeated `n` header"));
            }
            let count = fields[1].parse().map_err(|_| {
                Error::parse_at_line(line_no, format!("bad vertex count `{}`", fields[1]))
            })?;
            n = Some(count);
            continue;
        }
        let n =
            n.ok_or_else(|| Error::parse_at_line(line_no, "edge before the `n <count>` header"))?;
        let mut ends = [0usize; 2];
        for (slot, field) in ends.iter_mut().zip(&fields) {
            *slot = field
                .parse()
                .map_err(|_| Error::parse_at_line(line_no, format!("bad vertex `{field}`")))?;
            if *slot >= n {
                return Err(Error::parse_at_line(
                    line_no,
                    format!("vertex {slot} >= n = {n}"),
                ));
            }
        }
        let [u, v] = ends;
        if u == v {
            return Err(Error::parse_at_line(line_no, format!("self-loop at {u}")));
        }
        if !edges.insert((u.min(v), u.max(v))) {
            return Err(Error::parse_at_line(
                line_no,
                format!("duplicate edge {u} {v}"),
            ));
        }
    }
    let n = n.ok_or_else(|| Error::parse_at_line(1, "missing `n <count>` header"))?;
    Ok(Graph::from_edge_set(n, edges))
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, erdos_renyi, path};
    use proptest::prelude::*;

    #[test]
    fn parses_path() {
        assert_eq!(parse_edge_list("n 3\n0 1\n1 2").unwrap(), path(3).unwrap());
        let commented = "# P3\n\n  n 3\n# middle\n1 2\n0   1\n";
        assert_eq!(parse_edge_list(commented).unwrap(), path(3).unwrap());
    }

    #[test]
    fn round_trips_cycle() {
        let c5 = cycle(5).unwrap();
        let text = write_edge_list(&c5);
        assert_eq!(text, "n 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
        assert_eq!(parse_edge_list(&text).unwrap(), c5);
    }

    #[test]
    fn keeps_isolated_vertices() {
        let g = parse_edge_list("n 4\n0 1\n").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.degree(3), 0);
    }

    #[test]
    fn errors_report_lines() {
        let err = parse_edge_list("n 3\n0 1\n1 0\n").unwrap_err().to_string();
        assert!(err.contains("line 3") && err.contains("duplicate"), "{err}");
        let err = parse_edge_list("n 3\n0 3\n").unwrap_err().to_string();
        assert!(err.contains("line 2"), "{err}");
        assert!(parse_edge_list("0 1\n").is_err());
        assert!(parse_edge_list("n 3\n0 1 2\n").is_err());
        assert!(parse_edge_list("n 3\n1 1\n").is_err());
        assert!(parse_edge_list("n x\n").is_err());
        assert!(parse_edge_list("").is_err());
    }

    proptest! {
        #[test]
        fn round_trip(n in 0usize..200, p in 0.0f64..0.5, seed in any::<u64>()) {
            let g = erdos_renyi(n, p, seed).unwrap();
            prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
        }
    }
}
