//! Test-side oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashSet;

use judicious::graph::LabeledGraph;

/// Vertex pairs `(i, j)`, `i < j`, in column order: (0,1), (0,2), (1,2), ...
fn column_pairs(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

/// Stable coloring by iterated neighbor-color refinement. Colors are ranks
/// of sorted signatures, so they do not depend on the vertex order.
fn refine(adj: &[u32]) -> Vec<usize> {
    let n = adj.len();
    let mut colors: Vec<usize> = vec![0; n];
    let mut classes = 1;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n).filter(|&u| adj[v] >> u & 1 == 1).map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        colors = sigs.iter().map(|s| distinct.binary_search(s).unwrap()).collect();
        if distinct.len() == classes {
            return colors;
        }
        classes = distinct.len();
    }
}

/// Canonical code: the lexicographically least upper-triangle bit string
/// over all vertex orders that list the refined color classes in order.
pub fn canonical_code(adj: &[u32]) -> u64 {
    let n = adj.len();
    let colors = refine(adj);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| colors[v]);
    let cell_of: Vec<usize> = order.iter().map(|&v| colors[v]).collect();
    struct Search<'a> {
        adj: &'a [u32],
        colors: &'a [usize],
        cell_of: Vec<usize>,
        placed: Vec<usize>,
        used: u32,
        best: Option<u64>,
    }
    impl Search<'_> {
        fn go(&mut self, code: u64, bits: u32) {
            let p = self.placed.len();
            if p == self.adj.len() {
                if self.best.is_none_or(|b| code < b) {
                    self.best = Some(code);
                }
                return;
            }
            let total_bits = (self.adj.len() * (self.adj.len() - 1) / 2) as u32;
            for v in 0..self.adj.len() {
                if self.used >> v & 1 == 1 || self.colors[v] != self.cell_of[p] {
                    continue;
                }
                let mut c = code;
                for &u in &self.placed {
                    c = c << 1 | (self.adj[v] >> u & 1) as u64;
                }
                let nb = bits + p as u32;
                if let Some(b) = self.best {
                    if c > b >> (total_bits - nb) {
                        continue;
                    }
                }
                self.placed.push(v);
                self.used |= 1 << v;
                self.go(c, nb);
                self.used &= !(1 << v);
                self.placed.pop();
            }
        }
    }
    let mut s = Search {
        adj,
        colors: &colors,
        cell_of,
        placed: Vec::new(),
        used: 0,
        best: None,
    };
    s.go(0, 0);
    s.best.unwrap_or(0)
}

fn decode(n: usize, code: u64) -> Vec<u32> {
    let pairs = column_pairs(n);
    let mut adj = vec![0u32; n];
    for (b, &(i, j)) in pairs.iter().enumerate() {
        if code >> (pairs.len() - 1 - b) & 1 == 1 {
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
    }
    adj
}

fn to_graph(adj: &[u32]) -> LabeledGraph {
    let n = adj.len();
    let edges = (0..n).flat_map(|u| (u + 1..n).filter(move |&v| adj[u] >> v & 1 == 1).map(move |v| (u + 1, v + 1)));
    LabeledGraph::new(n, edges).unwrap()
}

/// One graph per isomorphism class on `n ≤ 9` vertices.
pub fn nonisomorphic_graphs(n: usize) -> Vec<LabeledGraph> {
    assert!(n <= 9);
    let mut codes: Vec<u64> = vec![0];
    for k in 1..n {
        let mut next = HashSet::new();
        for &c in &codes {
            let base = decode(k, c);
            for nb in 0u32..1 << k {
                let mut adj = base.clone();
                adj.push(nb);
                for (u, a) in adj.iter_mut().enumerate().take(k) {
                    *a |= (nb >> u & 1) << k;
                }
                next.insert(canonical_code(&adj));
            }
        }
        codes = next.into_iter().collect();
    }
    codes.sort_unstable();
    if n == 0 {
        return vec![LabeledGraph::empty(0)];
    }
    codes.into_iter().map(|c| to_graph(&decode(n, c))).collect()
}

/// Every labeled graph on `n` vertices, indexed by an edge mask.
pub fn labeled_graph(n: usize, mask: u64) -> LabeledGraph {
    let pairs = column_pairs(n);
    let edges = pairs
        .iter()
        .enumerate()
        .filter(|&(b, _)| mask >> b & 1 == 1)
        .map(|(_, &(i, j))| (i + 1, j + 1));
    LabeledGraph::new(n, edges).unwrap()
}

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Erdős–Gallai test for a nonincreasing sequence.
pub fn erdos_gallai(d: &[usize]) -> bool {
    let n = d.len();
    if d.iter().sum::<usize>() % 2 == 1 {
        return false;
    }
    (1..=n).all(|k| {
        let lhs: usize = d[..k].iter().sum();
        let rhs = k * (k - 1) + d[k..].iter().map(|&x| x.min(k)).sum::<usize>();
        lhs <= rhs
    })
}

/// All nonincreasing sequences of length `n` with entries below `n`.
pub fn nonincreasing_sequences(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for d in (0..=max).rev() {
            cur.push(d);
            rec(n, d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        out.push(Vec::new());
    } else {
        rec(n, n - 1, &mut Vec::new(), &mut out);
    }
    out
}

/// All compositions of `total` into positive parts.
pub fn compositions(total: usize) -> Vec<Vec<usize>> {
    if total == 0 {
        return vec![Vec::new()];
    }
    (0u32..1 << (total - 1))
        .map(|cuts| {
            let mut parts = Vec::new();
            let mut run = 1;
            for i in 0..total - 1 {
                if cuts >> i & 1 == 1 {
                    parts.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            parts.push(run);
            parts
        })
        .collect()
}

/// `min over bipartitions of e1^p + e2^p` by direct enumeration of every
/// side assignment.
pub fn brute_min_norm(g: &LabeledGraph, p: u32) -> u128 {
    let n = g.vertex_count();
    (0u64..1 << n)
        .map(|mask| {
            let (mut e1, mut e2) = (0u128, 0u128);
            for &(u, v) in g.edges() {
                match (mask >> (u - 1) & 1, mask >> (v - 1) & 1) {
                    (0, 0) => e1 += 1,
                    (1, 1) => e2 += 1,
                    _ => {}
                }
            }
            e1.pow(p) + e2.pow(p)
        })
        .min()
        .unwrap_or(0)
}

/// Partitions of `total` into positive parts, each listed nondecreasing.
pub fn partitions(total: usize) -> Vec<Vec<usize>> {
    fn rec(left: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for p in min..=left {
            cur.push(p);
            rec(left - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(total, 1, &mut Vec::new(), &mut out);
    out
}
