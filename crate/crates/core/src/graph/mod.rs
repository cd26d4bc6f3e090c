//! Simple undirected graphs and the operators `A`, `D`, `D - A`, `D + A` and
//! the random-walk matrix `A D^{-1}`, all applied matrix-free.

mod generators;

use std::collections::{BTreeSet, VecDeque};
use std::ops::{Deref, Index};

use crate::error::{Error, Result};

pub use generators::{
    complete_bipartite, cycle, erdos_renyi, flower_snark, mostly_bipartite_random, path,
    MAX_ATTEMPTS,
};

/// A real value on every vertex.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct VertexFunction(Vec<f64>);

impl VertexFunction {
    pub fn new(values: Vec<f64>) -> Self {
        Self(values)
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![0.0; n])
    }

    pub fn constant(n: usize, value: f64) -> Self {
        Self(vec![value; n])
    }

    /// Indicator of a single vertex.
    pub fn delta(n: usize, vertex: usize) -> Self {
        let mut values = vec![0.0; n];
        values[vertex] = 1.0;
        Self(values)
    }

    pub fn from_fn(n: usize, f: impl FnMut(usize) -> f64) -> Self {
        Self((0..n).map(f).collect())
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.0
    }

    pub fn dot(&self, other: &Self) -> f64 {
        self.0.iter().zip(&other.0).fold(0.0, |s, (a, b)| s + a * b)
    }

    pub fn norm_sq(&self) -> f64 {
        self.0.iter().fold(0.0, |s, x| s + x * x)
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn norm_inf(&self) -> f64 {
        self.0.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    pub fn sum(&self) -> f64 {
        self.0.iter().fold(0.0, |s, x| s + x)
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self(self.0.iter().map(|x| x * factor).collect())
    }

    /// `self - other`, entrywise.
    pub fn minus(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// `self + factor * other`, entrywise.
    pub fn plus_scaled(&self, factor: f64, other: &Self) -> Self {
        Self(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + factor * b)
                .collect(),
        )
    }

    /// Returns the vector scaled to unit ℓ² norm; a zero vector is returned unchanged.
    pub fn normalized(&self) -> Self {
        let norm = self.norm();
        if norm == 0.0 {
            self.clone()
        } else {
            self.scaled(1.0 / norm)
        }
    }
}

impl Deref for VertexFunction {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        &self.0
    }
}

impl Index<usize> for VertexFunction {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl From<Vec<f64>> for VertexFunction {
    fn from(values: Vec<f64>) -> Self {
        Self(values)
    }
}

impl FromIterator<f64> for VertexFunction {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

/// A split of the vertex set into two sides, `false` = side A, `true` = side B.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    side: Vec<bool>,
}

impl Bipartition {
    pub fn from_sides(side: Vec<bool>) -> Self {
        Self { side }
    }

    /// Builds a bipartition from explicit vertex lists, which must cover
    /// `0..n` disjointly with both sides nonempty.
    pub fn from_parts(n: usize, part_a: &[usize], part_b: &[usize]) -> Result<Self> {
        if part_a.is_empty() || part_b.is_empty() {
            return Err(Error::InvalidPartition(
                "both sides must be nonempty".into(),
            ));
        }
        let mut assigned: Vec<Option<bool>> = vec![None; n];
        for (&v, in_b) in part_a
            .iter()
            .map(|v| (v, false))
            .chain(part_b.iter().map(|v| (v, true)))
        {
            if v >= n {
                return Err(Error::InvalidPartition(format!(
                    "vertex {v} out of range 0..{n}"
                )));
            }
            if assigned[v].is_some() {
                return Err(Error::InvalidPartition(format!("vertex {v} listed twice")));
            }
            assigned[v] = Some(in_b);
        }
        let side = assigned
            .into_iter()
            .enumerate()
            .map(|(v, s)| {
                s.ok_or_else(|| Error::InvalidPartition(format!("vertex {v} unassigned")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { side })
    }

    pub fn len(&self) -> usize {
        self.side.len()
    }

    pub fn is_empty(&self) -> bool {
        self.side.is_empty()
    }

    pub fn in_b(&self, v: usize) -> bool {
        self.side[v]
    }

    pub fn part_a(&self) -> Vec<usize> {
        (0..self.side.len()).filter(|&v| !self.side[v]).collect()
    }

    pub fn part_b(&self) -> Vec<usize> {
        (0..self.side.len()).filter(|&v| self.side[v]).collect()
    }

    /// +1 on side A, -1 on side B.
    pub fn cut_vector(&self) -> VertexFunction {
        self.side
            .iter()
            .map(|&b| if b { -1.0 } else { 1.0 })
            .collect()
    }

    /// Number of edges with both endpoints on the same side.
    pub fn within_edges(&self, g: &Graph) -> usize {
        g.edges()
            .iter()
            .filter(|&&(u, v)| self.side[u] == self.side[v])
            .count()
    }
}

/// Simple undirected graph on vertices `0..n`.
///
/// Edges are stored once as `(u, v)` with `u < v`, sorted; adjacency lists are
/// sorted and derived from the edge list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from unordered pairs. Self-loops, duplicate edges and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            if !set.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({u}, {v})")));
            }
        }
        Ok(Self::from_edge_set(n, set))
    }

    pub(crate) fn from_edge_set(n: usize, set: BTreeSet<(usize, usize)>) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &set {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Self {
            n,
            edges: set.into_iter().collect(),
            adjacency,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// The common degree, if every vertex has the same one.
    pub fn is_regular(&self) -> Option<usize> {
        let first = self.adjacency.first()?.len();
        self.adjacency
            .iter()
            .all(|a| a.len() == first)
            .then_some(first)
    }

    /// BFS two-coloring; `None` when an odd cycle exists. Each component's
    /// lowest vertex goes to side A.
    pub fn is_bipartite(&self) -> Option<Bipartition> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(false);
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &w in &self.adjacency[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(Bipartition::from_sides(
            color.into_iter().map(Option::unwrap).collect(),
        ))
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adjacency[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    pub(crate) fn check_len(&self, f: &VertexFunction) -> Result<()> {
        if f.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                actual: f.len(),
            });
        }
        Ok(())
    }

    fn neighbor_sum(&self, f: &[f64], v: usize) -> f64 {
        self.adjacency[v].iter().fold(0.0, |s, &w| s + f[w])
    }

    /// `(A f)(i) = Σ_{j ~ i} f(j)`.
    pub fn apply_adjacency(&self, f: &VertexFunction) -> Result<VertexFunction> {
        self.check_len(f)?;
        Ok((0..self.n).map(|i| self.neighbor_sum(f, i)).collect())
    }

    pub fn apply_degree(&self, f: &VertexFunction) -> Result<VertexFunction> {
        self.check_len(f)?;
        Ok((0..self.n).map(|i| self.degree(i) as f64 * f[i]).collect())
    }

    /// `((D - A) f)(i) = deg(i) f(i) - Σ_{j ~ i} f(j)`.
    pub fn apply_laplacian(&self, f: &VertexFunction) -> Result<VertexFunction> {
        self.check_len(f)?;
        Ok((0..self.n)
            .map(|i| self.degree(i) as f64 * f[i] - self.neighbor_sum(f, i))
            .collect())
    }

    /// `((D + A) f)(i) = deg(i) f(i) + Σ_{j ~ i} f(j)`.
    pub fn apply_signless(&self, f: &VertexFunction) -> Result<VertexFunction> {
        self.check_len(f)?;
        Ok((0..self.n)
            .map(|i| self.degree(i) as f64 * f[i] + self.neighbor_sum(f, i))
            .collect())
    }

    /// One step of the random walk, `(A D^{-1} f)(i) = Σ_{j ~ i} f(j) / deg(j)`.
    ///
    /// Column-stochastic: a probability distribution maps to a probability
    /// distribution.
    pub fn apply_walk(&self, f: &VertexFunction) -> Result<VertexFunction> {
        self.check_len(f)?;
        if let Some(v) = self.adjacency.iter().position(Vec::is_empty) {
            return Err(Error::DegenerateDegree { vertex: v });
        }
        Ok((0..self.n)
            .map(|i| {
                self.adjacency[i]
                    .iter()
                    .fold(0.0, |s, &j| s + f[j] / self.adjacency[j].len() as f64)
            })
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn edge_sum(g: &Graph, f: &VertexFunction, sign: f64) -> f64 {
        g.edges()
            .iter()
            .map(|&(i, j)| (f[i] + sign * f[j]).powi(2))
            .sum()
    }

    #[test]
    fn rejects_self_loops_and_duplicates() {
        assert!(matches!(
            Graph::from_edges(3, [(1, 1)]),
            Err(Error::InvalidGraph(_))
        ));
        assert!(matches!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(Error::InvalidGraph(_))
        ));
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::InvalidGraph(_))
        ));
    }

    #[test]
    fn adjacency_matches_edges() {
        let g = Graph::from_edges(5, [(3, 1), (0, 4), (1, 2), (4, 3)]).unwrap();
        assert_eq!(g.edges(), &[(0, 4), (1, 2), (1, 3), (3, 4)]);
        let rebuilt: BTreeSet<_> = (0..g.n())
            .flat_map(|u| g.neighbors(u).iter().map(move |&v| (u.min(v), u.max(v))))
            .collect();
        assert_eq!(rebuilt.into_iter().collect::<Vec<_>>(), g.edges());
        assert_eq!(g.degrees(), vec![1, 2, 1, 2, 2]);
    }

    #[test]
    fn structural_predicates() {
        let c4 = cycle(4).unwrap();
        assert_eq!(c4.is_regular(), Some(2));
        assert!(c4.is_bipartite().is_some());
        assert!(c4.is_connected());

        let c5 = cycle(5).unwrap();
        assert_eq!(c5.is_regular(), Some(2));
        assert!(c5.is_bipartite().is_none());

        let two_edges = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_connected());
        assert_eq!(path(3).unwrap().is_regular(), None);
    }

    #[test]
    fn bipartition_is_proper_coloring() {
        let k = complete_bipartite(3, 4).unwrap();
        let part = k.is_bipartite().unwrap();
        assert_eq!(part.part_a(), vec![0, 1, 2]);
        assert_eq!(part.part_b(), vec![3, 4, 5, 6]);
        assert_eq!(part.within_edges(&k), 0);
    }

    #[test]
    fn from_parts_validation() {
        assert!(Bipartition::from_parts(3, &[0], &[1, 2]).is_ok());
        assert!(matches!(
            Bipartition::from_parts(3, &[], &[0, 1, 2]),
            Err(Error::InvalidPartition(_))
        ));
        assert!(matches!(
            Bipartition::from_parts(3, &[0, 1], &[1, 2]),
            Err(Error::InvalidPartition(_))
        ));
        assert!(matches!(
            Bipartition::from_parts(3, &[0], &[1]),
            Err(Error::InvalidPartition(_))
        ));
    }

    #[test]
    fn laplacian_annihilates_constants() {
        let g = flower_snark(5).unwrap();
        let lf = g
            .apply_laplacian(&VertexFunction::constant(g.n(), 1.0))
            .unwrap();
        assert!(lf.iter().all(|&x| x == 0.0));
    }

    #[test]
    fn cut_vector_is_signless_kernel() {
        let k33 = complete_bipartite(3, 3).unwrap();
        let chi = k33.is_bipartite().unwrap().cut_vector();
        let out = k33.apply_signless(&chi).unwrap();
        assert!(out.iter().all(|&x| x == 0.0));
    }

    #[test]
    fn walk_from_delta_on_c4() {
        let c4 = cycle(4).unwrap();
        let w = c4.apply_walk(&VertexFunction::delta(4, 0)).unwrap();
        assert_eq!(w.as_slice(), &[0.0, 0.5, 0.0, 0.5]);
    }

    #[test]
    fn walk_rejects_isolated_vertex() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert!(matches!(
            g.apply_walk(&VertexFunction::zeros(3)),
            Err(Error::DegenerateDegree { vertex: 2 })
        ));
    }

    #[test]
    fn length_mismatch_is_reported() {
        let g = cycle(5).unwrap();
        assert!(matches!(
            g.apply_laplacian(&VertexFunction::zeros(4)),
            Err(Error::LengthMismatch {
                expected: 5,
                actual: 4
            })
        ));
    }

    fn graph_and_vector() -> impl Strategy<Value = (Graph, VertexFunction)> {
        (2usize..25, any::<u64>(), 0.05f64..0.9).prop_flat_map(|(n, seed, p)| {
            let g = erdos_renyi(n, p, seed).unwrap();
            let len = g.n();
            (Just(g), prop::collection::vec(-10.0f64..10.0, len))
                .prop_map(|(g, v)| (g, VertexFunction::new(v)))
        })
    }

    proptest! {
        #[test]
        fn quadratic_forms_match_edge_sums((g, f) in graph_and_vector()) {
            let lap = f.dot(&g.apply_laplacian(&f).unwrap());
            let sl = f.dot(&g.apply_signless(&f).unwrap());
            let scale = 1.0 + f.norm_sq() * (1 + g.max_degree()) as f64;
            prop_assert!((lap - edge_sum(&g, &f, -1.0)).abs() <= 1e-12 * scale);
            prop_assert!((sl - edge_sum(&g, &f, 1.0)).abs() <= 1e-12 * scale);
        }

        #[test]
        fn laplacian_plus_twice_adjacency_is_signless((g, f) in graph_and_vector()) {
            let lap = g.apply_laplacian(&f).unwrap();
            let adj = g.apply_adjacency(&f).unwrap();
            let sl = g.apply_signless(&f).unwrap();
            for i in 0..g.n() {
                let lhs = lap[i] + 2.0 * adj[i];
                prop_assert!((lhs - sl[i]).abs() <= 1e-12 * (1.0 + sl[i].abs() + adj[i].abs()));
            }
        }

        #[test]
        fn walk_preserves_mass(n in 3usize..40, seed in any::<u64>(), raw in prop::collection::vec(0.0f64..5.0, 40)) {
            let g = cycle(n).unwrap();
            let f = VertexFunction::new(raw[..n].to_vec());
            let w = g.apply_walk(&f).unwrap();
            prop_assert!((w.sum() - f.sum()).abs() <= 1e-12 * (1.0 + f.sum()));
            let er = erdos_renyi(n, 0.5, seed).unwrap();
            if er.degrees().iter().all(|&d| d > 0) {
                let w = er.apply_walk(&f).unwrap();
                prop_assert!((w.sum() - f.sum()).abs() <= 1e-12 * (1.0 + f.sum()));
            }
        }
    }
}
