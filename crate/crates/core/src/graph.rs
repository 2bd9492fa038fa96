//! Graph and partition data model.
//!
//! Vertices are 1-based (`1..=n`) everywhere inside the library. The file
//! formats in [`crate::io`] are 0-based and convert at the boundary.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::degseq::DegreeSequence;
use crate::error::{Error, Result};

/// Simple undirected graph on the ordered vertices `v_1, ..., v_n`.
#[derive(Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    n: usize,
    /// Sorted, deduplicated, `u < v`.
    edges: Vec<(usize, usize)>,
    /// `adj[v - 1]` is the sorted neighbour list of `v`.
    adj: Vec<Vec<usize>>,
}

impl LabeledGraph {
    /// Graph on `n` vertices without edges.
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from 1-based endpoint pairs. Duplicate and reversed
    /// pairs collapse; self-loops and out-of-range endpoints are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            for x in [u, v] {
                if x == 0 || x > n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(Self::from_sorted_edges(n, set.into_iter().collect()))
    }

    fn from_sorted_edges(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u - 1].push(v);
            adj[v - 1].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Self { n, edges, adj }
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let edges = (1..=n)
            .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
            .collect();
        Self::from_sorted_edges(n, edges)
    }

    /// Cycle `v_1 v_2 ... v_n v_1` (needs `n >= 3`).
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Precondition(format!("cycle needs n >= 3, got {n}")));
        }
        Self::new(n, (1..=n).map(|i| (i, i % n + 1)))
    }

    /// Path `v_1 v_2 ... v_n`.
    pub fn path(n: usize) -> Self {
        Self::from_sorted_edges(n, (1..n).map(|i| (i, i + 1)).collect())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].len()
    }

    /// Degrees in vertex order `d(v_1), ..., d(v_n)`.
    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u >= 1 && u <= self.n && self.adj[u - 1].binary_search(&v).is_ok()
    }

    /// Number of vertices with at least one neighbour.
    pub fn non_isolated_count(&self) -> usize {
        self.adj.iter().filter(|l| !l.is_empty()).count()
    }
}

impl fmt::Debug for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LabeledGraph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// One of the two sides of a bipartition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    One,
    Two,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::One => Side::Two,
            Side::Two => Side::One,
        }
    }
}

/// Total assignment of vertices `v_1..v_n` to [`Side::One`] / [`Side::Two`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bipartition {
    sides: Vec<Side>,
}

impl Bipartition {
    pub fn from_sides(sides: Vec<Side>) -> Self {
        Self { sides }
    }

    /// Vertices listed in `v1` go to side one, all others to side two.
    pub fn from_side_one(n: usize, v1: &[usize]) -> Result<Self> {
        let mut sides = vec![Side::Two; n];
        for &v in v1 {
            if v == 0 || v > n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            sides[v - 1] = Side::One;
        }
        Ok(Self { sides })
    }

    /// Bit `i` of `mask` set means vertex `i + 1` is on side two.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        let sides = (0..n)
            .map(|i| if mask >> i & 1 == 1 { Side::Two } else { Side::One })
            .collect();
        Self { sides }
    }

    pub fn len(&self) -> usize {
        self.sides.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sides.is_empty()
    }

    pub fn side(&self, v: usize) -> Side {
        self.sides[v - 1]
    }

    pub fn sides(&self) -> &[Side] {
        &self.sides
    }

    pub fn members(&self, side: Side) -> Vec<usize> {
        (1..=self.sides.len())
            .filter(|&v| self.sides[v - 1] == side)
            .collect()
    }

    pub fn size(&self, side: Side) -> usize {
        self.sides.iter().filter(|&&s| s == side).count()
    }

    pub fn swapped(&self) -> Self {
        Self {
            sides: self.sides.iter().map(|s| s.other()).collect(),
        }
    }

    pub fn is_balanced(&self) -> bool {
        self.size(Side::One).abs_diff(self.size(Side::Two)) <= 1
    }
}

/// A balanced bipartition together with the edge set of its bipartite
/// spanning subgraph `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bisection {
    bipartition: Bipartition,
    cross_edges: Vec<(usize, usize)>,
}

impl Bisection {
    /// The maximum bisection on a balanced bipartition: every host edge
    /// between the two sides.
    pub fn induced(graph: &LabeledGraph, bipartition: Bipartition) -> Result<Self> {
        check_total(graph, &bipartition)?;
        check_balanced(&bipartition)?;
        let cross_edges = graph
            .edges()
            .iter()
            .copied()
            .filter(|&(u, v)| bipartition.side(u) != bipartition.side(v))
            .collect();
        Ok(Self {
            bipartition,
            cross_edges,
        })
    }

    /// A bisection with an explicit cross-edge set, which may be any subset
    /// of the host edges joining the two sides.
    pub fn with_cross_edges(
        graph: &LabeledGraph,
        bipartition: Bipartition,
        cross_edges: Vec<(usize, usize)>,
    ) -> Result<Self> {
        check_total(graph, &bipartition)?;
        check_balanced(&bipartition)?;
        let mut normalized: Vec<(usize, usize)> =
            cross_edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        normalized.sort_unstable();
        normalized.dedup();
        for &(u, v) in &normalized {
            if !graph.has_edge(u, v) || bipartition.side(u) == bipartition.side(v) {
                return Err(Error::BadCrossEdge(u, v));
            }
        }
        Ok(Self {
            bipartition,
            cross_edges: normalized,
        })
    }

    pub fn bipartition(&self) -> &Bipartition {
        &self.bipartition
    }

    pub fn cross_edges(&self) -> &[(usize, usize)] {
        &self.cross_edges
    }

    /// `d_H(v)` for every vertex, in vertex order.
    pub fn cross_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.bipartition.len()];
        for &(u, v) in &self.cross_edges {
            deg[u - 1] += 1;
            deg[v - 1] += 1;
        }
        deg
    }
}

fn check_total(graph: &LabeledGraph, p: &Bipartition) -> Result<()> {
    if p.len() != graph.vertex_count() {
        return Err(Error::PartialAssignment {
            expected: graph.vertex_count(),
            got: p.len(),
        });
    }
    Ok(())
}

fn check_balanced(p: &Bipartition) -> Result<()> {
    if !p.is_balanced() {
        return Err(Error::Unbalanced {
            v1: p.size(Side::One),
            v2: p.size(Side::Two),
        });
    }
    Ok(())
}

/// Exact edge counts of a bipartition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionStats {
    pub e1: u64,
    pub e2: u64,
    pub cut: u64,
}

impl PartitionStats {
    pub fn max_side(&self) -> u64 {
        self.e1.max(self.e2)
    }

    pub fn total(&self) -> u64 {
        self.e1 + self.e2 + self.cut
    }
}

/// Convenience wrapper around [`LabeledGraph::new`].
pub fn build_graph(n: usize, edges: &[(usize, usize)]) -> Result<LabeledGraph> {
    LabeledGraph::new(n, edges.iter().copied())
}

/// The bisection with `V_i = { v_j : j ≡ i (mod 2) }` and every host edge
/// between the classes.
pub fn parity_bisection(graph: &LabeledGraph) -> Bisection {
    let sides = (1..=graph.vertex_count())
        .map(|v| if v % 2 == 1 { Side::One } else { Side::Two })
        .collect();
    Bisection::induced(graph, Bipartition::from_sides(sides))
        .expect("parity classes are always balanced")
}

/// Counts `e(V_1)`, `e(V_2)` and `e(V_1, V_2)`.
pub fn evaluate_bipartition(graph: &LabeledGraph, p: &Bipartition) -> Result<PartitionStats> {
    check_total(graph, p)?;
    let mut stats = PartitionStats { e1: 0, e2: 0, cut: 0 };
    for &(u, v) in graph.edges() {
        match (p.side(u), p.side(v)) {
            (Side::One, Side::One) => stats.e1 += 1,
            (Side::Two, Side::Two) => stats.e2 += 1,
            _ => stats.cut += 1,
        }
    }
    Ok(stats)
}

/// Per-vertex `2 d_H(v) - (d_G(v) - 1)`. The bisection is good iff every
/// entry is nonnegative.
pub fn bisection_slack(graph: &LabeledGraph, bisection: &Bisection) -> Vec<i64> {
    bisection
        .cross_degrees()
        .into_iter()
        .zip(graph.degrees())
        .map(|(dh, dg)| 2 * dh as i64 - (dg as i64 - 1))
        .collect()
}

pub fn is_good_bisection(graph: &LabeledGraph, bisection: &Bisection) -> bool {
    bisection_slack(graph, bisection).iter().all(|&s| s >= 0)
}

/// Degrees sorted nonincreasing.
pub fn degree_sequence(graph: &LabeledGraph) -> DegreeSequence {
    let mut d = graph.degrees();
    d.sort_unstable_by(|a, b| b.cmp(a));
    DegreeSequence::new(d).expect("sorted degrees are nonincreasing")
}

/// Join of a clique on `k` vertices (`v_1..v_k`) and an independent set on
/// the remaining `n - k` vertices.
pub fn clique_join_independent(k: usize, n: usize) -> Result<LabeledGraph> {
    if k > n {
        return Err(Error::Precondition(format!("clique size {k} exceeds n = {n}")));
    }
    let edges = (1..=k).flat_map(|u| (u + 1..=n).map(move |v| (u, v)));
    LabeledGraph::new(n, edges)
}
