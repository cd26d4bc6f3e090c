use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{ArgGroup, Args};
use hfprod::cycle::cycle_eigenbasis;
use hfprod::graph::{self, Bipartition, Graph};
use hfprod::io::{load_named, parse_edge_list, parse_graph6};
use hfprod::spectra::decompose_laplacian;
use hfprod::{EigenDecomposition, Error};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum FileFormat {
    Graph6,
    EdgeList,
}

/// Exactly one graph source.
#[derive(Debug, Args)]
#[command(group(ArgGroup::new("source").required(true).multiple(false)))]
pub struct InputArgs {
    /// Bundled named graph (see `HFPROD_GRAPH_DIR`)
    #[arg(long, group = "source")]
    pub named: Option<String>,

    /// Graph file; format from --format or the extension (.g6 / anything else)
    #[arg(long, group = "source")]
    pub file: Option<PathBuf>,

    #[arg(long, value_enum, requires = "file")]
    pub format: Option<FileFormat>,

    /// Cycle C_N
    #[arg(long, group = "source", value_name = "N")]
    pub cycle: Option<usize>,

    /// Complete bipartite K_{A,B}
    #[arg(long, group = "source", value_name = "A,B", value_parser = list::<usize, 2>)]
    pub complete_bipartite: Option<[usize; 2]>,

    /// Flower snark J_M (odd M >= 5)
    #[arg(long, group = "source", value_name = "M")]
    pub flower_snark: Option<usize>,

    /// d-regular graph on 2*HALF_N vertices with K edges inside the parts
    #[arg(long, group = "source", value_name = "HALF_N,D,K", value_parser = list::<usize, 3>)]
    pub mostly_bipartite: Option<[usize; 3]>,

    /// Erdős–Rényi G(N, P)
    #[arg(long, group = "source", value_name = "N,P", value_parser = parse_np)]
    pub erdos_renyi: Option<(usize, f64)>,
}

/// Parses exactly `N` comma-separated values.
fn list<T: std::str::FromStr, const N: usize>(text: &str) -> Result<[T; N], String> {
    let values: Vec<T> = text
        .split(',')
        .map(|s| s.trim().parse().map_err(|_| format!("bad value `{s}`")))
        .collect::<Result<_, _>>()?;
    let count = values.len();
    values
        .try_into()
        .map_err(|_| format!("expected {N} comma-separated values, got {count}"))
}

fn parse_np(text: &str) -> Result<(usize, f64), String> {
    let [n, p] = list::<String, 2>(text)?;
    Ok((
        n.parse().map_err(|_| format!("bad vertex count `{n}`"))?,
        p.parse().map_err(|_| format!("bad probability `{p}`"))?,
    ))
}

/// A resolved input graph.
pub struct Source {
    pub graph: Graph,
    pub description: String,
    /// Set when the graph is a cycle, whose eigenbasis has a closed form.
    pub cycle: Option<usize>,
    /// Partition known from the construction.
    pub partition: Option<Bipartition>,
}

pub enum Resolved {
    Ready(Source),
    /// Named graph whose data file is missing.
    Skipped(String),
}

impl InputArgs {
    pub fn resolve(&self, seed: u64) -> Result<Resolved> {
        let mut cycle = None;
        let mut partition = None;
        let (graph, description) = if let Some(name) = &self.named {
            match load_named(name) {
                Ok(g) => (g, name.clone()),
                Err(Error::NotProvisioned { name, reason }) => {
                    return Ok(Resolved::Skipped(format!("{name}: {reason}")))
                }
                Err(e) => return Err(e.into()),
            }
        } else if let Some(path) = &self.file {
            let bytes =
                std::fs::read(path).with_context(|| format!("reading {}", path.display()))?;
            let format =
                self.format
                    .unwrap_or_else(|| match path.extension().and_then(|e| e.to_str()) {
                        Some("g6") => FileFormat::Graph6,
                        _ => FileFormat::EdgeList,
                    });
            let g = match format {
                FileFormat::Graph6 => parse_graph6(&bytes)?,
                FileFormat::EdgeList => {
                    parse_edge_list(std::str::from_utf8(&bytes).context("edge list is not UTF-8")?)?
                }
            };
            (g, path.display().to_string())
        } else if let Some(n) = self.cycle {
            cycle = Some(n);
            (graph::cycle(n)?, format!("cycle n={n}"))
        } else if let Some(ab) = &self.complete_bipartite {
            let g = graph::complete_bipartite(ab[0], ab[1])?;
            partition = g.is_bipartite();
            (g, format!("complete-bipartite a={} b={}", ab[0], ab[1]))
        } else if let Some(m) = self.flower_snark {
            (graph::flower_snark(m)?, format!("flower-snark m={m}"))
        } else if let Some(p) = &self.mostly_bipartite {
            let (half_n, d, k) = (p[0], p[1], p[2]);
            let g = graph::mostly_bipartite_random(half_n, d, k, seed)?;
            partition = Some(Bipartition::from_sides(
                (0..2 * half_n).map(|v| v >= half_n).collect(),
            ));
            (
                g,
                format!("mostly-bipartite half_n={half_n} d={d} k={k} seed={seed}"),
            )
        } else if let Some((n, p)) = self.erdos_renyi {
            (
                graph::erdos_renyi(n, p, seed)?,
                format!("erdos-renyi n={n} p={p} seed={seed}"),
            )
        } else {
            bail!("no input graph given");
        };
        Ok(Resolved::Ready(Source {
            graph,
            description,
            cycle,
            partition,
        }))
    }
}

impl Source {
    /// Laplacian eigenbasis in descending order: closed forms for cycles,
    /// Jacobi otherwise.
    pub fn laplacian_basis(&self) -> Result<EigenDecomposition> {
        Ok(match self.cycle {
            Some(n) => cycle_eigenbasis(n)?,
            None => decompose_laplacian(&self.graph)?,
        })
    }
}

/// Parses a 1-based `I,J` pair and checks it against `n`.
pub fn parse_pair(text: &str, n: usize) -> Result<(usize, usize)> {
    let (i, j) = text
        .split_once(',')
        .with_context(|| format!("pair `{text}` is not of the form I,J"))?;
    let parse = |s: &str| -> Result<usize> {
        let k: usize = s
            .trim()
            .parse()
            .with_context(|| format!("bad index `{s}`"))?;
        if k == 0 || k > n {
            bail!("eigenvector index {k} outside 1..={n} (indices are 1-based, largest eigenvalue first)");
        }
        Ok(k)
    };
    Ok((parse(i)?, parse(j)?))
}

/// Parses `A..B` (inclusive) or a single value.
pub fn parse_range(text: &str) -> Result<Vec<usize>> {
    match text.split_once("..") {
        Some((a, b)) => {
            let a: usize = a
                .parse()
                .with_context(|| format!("bad range start `{a}`"))?;
            let b: usize = b
                .trim_start_matches('=')
                .parse()
                .with_context(|| format!("bad range end `{b}`"))?;
            if a > b {
                bail!("empty range {text}");
            }
            Ok((a..=b).collect())
        }
        None => Ok(vec![text
            .parse()
            .with_context(|| format!("bad value `{text}`"))?]),
    }
}
