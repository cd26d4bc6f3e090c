//! Deterministic and seeded random graph families.
//!
//! Randomness comes from ChaCha8 seeded with `seed_from_u64(seed)`, so every
//! generator is a pure function of its arguments.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::error::{Error, Result};

/// Rejection-sampling cap per matching or per swap.
pub const MAX_ATTEMPTS: usize = 1000;

/// The cycle `C_n` with edges `(i, i + 1 mod n)`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycle needs n >= 3, got {n}"
        )));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// The path `P_n` with edges `(i, i + 1)`.
pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter("path needs n >= 1".into()));
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidParameter(format!(
            "complete bipartite graph needs a, b >= 1, got ({a}, {b})"
        )));
    }
    Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

/// Isaacs' flower snark `J_m` for odd `m >= 5`.
///
/// Vertex `i` is the star center `c_i`; `m + i`, `2m + i` and `3m + i` are its
/// leaves `t_i`, `u_i`, `v_i`. The `t_i` form an m-cycle and
/// `u_0 .. u_{m-1} v_0 .. v_{m-1}` a 2m-cycle.
pub fn flower_snark(m: usize) -> Result<Graph> {
    if m < 5 || m.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "flower snark needs odd m >= 5, got {m}"
        )));
    }
    let (t, u, v) = (m, 2 * m, 3 * m);
    let mut edges = Vec::with_capacity(6 * m);
    for i in 0..m {
        edges.extend([(i, t + i), (i, u + i), (i, v + i)]);
        edges.push((t + i, t + (i + 1) % m));
    }
    // the 2m-cycle runs through the u's then the v's
    let outer: Vec<usize> = (u..u + m).chain(v..v + m).collect();
    for i in 0..outer.len() {
        edges.push((outer[i], outer[(i + 1) % outer.len()]));
    }
    Graph::from_edges(4 * m, edges)
}

/// A `d`-regular graph on `2 * half_n` vertices with parts `A = 0..half_n`,
/// `B = half_n..2*half_n` and exactly `k` edges inside the parts.
///
/// Built as the union of `d` random perfect matchings between A and B
/// (a matching that hits an existing edge is redrawn), followed by `k / 2`
/// degree-preserving swaps `(a1,b1),(a2,b2) -> (a1,a2),(b1,b2)`.
pub fn mostly_bipartite_random(half_n: usize, d: usize, k: usize, seed: u64) -> Result<Graph> {
    if half_n == 0 || d == 0 || d > half_n {
        return Err(Error::InvalidParameter(format!(
            "need 1 <= d <= half_n, got d = {d}, half_n = {half_n}"
        )));
    }
    if !k.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "within-part edge count k must be even, got {k}"
        )));
    }
    if k > d * half_n / 2 {
        return Err(Error::InvalidParameter(format!(
            "k = {k} exceeds d * half_n / 2 = {}",
            d * half_n / 2
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = BTreeSet::new();
    let mut perm: Vec<usize> = (0..half_n).collect();
    for round in 0..d {
        let mut placed = false;
        for _ in 0..MAX_ATTEMPTS {
            perm.shuffle(&mut rng);
            if (0..half_n).all(|a| !edges.contains(&(a, half_n + perm[a]))) {
                edges.extend((0..half_n).map(|a| (a, half_n + perm[a])));
                placed = true;
                break;
            }
        }
        if !placed {
            return Err(Error::ConstructionFailure(format!(
                "no collision-free matching for round {round} after {MAX_ATTEMPTS} attempts"
            )));
        }
    }

    let mut cross: Vec<(usize, usize)> = edges.iter().copied().collect();
    for swap in 0..k / 2 {
        let mut done = false;
        for _ in 0..MAX_ATTEMPTS {
            let i = rng.random_range(0..cross.len());
            let j = rng.random_range(0..cross.len());
            let ((a1, b1), (a2, b2)) = (cross[i], cross[j]);
            if a1 == a2 || b1 == b2 {
                continue;
            }
            let in_a = (a1.min(a2), a1.max(a2));
            let in_b = (b1.min(b2), b1.max(b2));
            if edges.contains(&in_a) || edges.contains(&in_b) {
                continue;
            }
            edges.remove(&cross[i]);
            edges.remove(&cross[j]);
            edges.insert(in_a);
            edges.insert(in_b);
            cross.swap_remove(i.max(j));
            cross.swap_remove(i.min(j));
            done = true;
            break;
        }
        if !done {
            return Err(Error::ConstructionFailure(format!(
                "swap {swap} found no valid edge pair after {MAX_ATTEMPTS} attempts"
            )));
        }
    }
    Ok(Graph::from_edge_set(2 * half_n, edges))
}

/// `G(n, p)`: every pair `i < j` in lexicographic order is kept when a
/// uniform draw from `[0, 1)` is below `p`.
pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!(
            "probability {p} outside [0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = BTreeSet::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random::<f64>() < p {
                edges.insert((i, j));
            }
        }
    }
    Ok(Graph::from_edge_set(n, edges))
}
