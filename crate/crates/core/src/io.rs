//! Text formats. Vertices are 0-based in files and 1-based in memory.
//!
//! Graph file: a header line `n m`, then `m` lines `u v`. Lines starting
//! with `#` are ignored. Degree-sequence file: whitespace-separated
//! nonnegative integers.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::degseq::DegreeSequence;
use crate::error::{Error, Result};
use crate::graph::{evaluate_bipartition, Bipartition, LabeledGraph, Side};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_pair(line_no: usize, line: &str) -> Result<(usize, usize)> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    let [a, b] = fields[..] else {
        return Err(Error::Parse(format!("line {line_no}: expected two integers, got {line:?}")));
    };
    let num = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| Error::Parse(format!("line {line_no}: {s:?} is not a nonnegative integer")))
    };
    Ok((num(a)?, num(b)?))
}

pub fn parse_graph(text: &str) -> Result<LabeledGraph> {
    let mut lines = content_lines(text);
    let (line_no, header) = lines
        .next()
        .ok_or_else(|| Error::Parse("missing `n m` header".into()))?;
    let (n, m) = parse_pair(line_no, header)?;
    let mut seen = BTreeSet::new();
    for (line_no, line) in lines {
        let (u, v) = parse_pair(line_no, line)?;
        if u >= n || v >= n {
            return Err(Error::Parse(format!("line {line_no}: vertex out of range for n = {n}")));
        }
        if u == v {
            return Err(Error::Parse(format!("line {line_no}: self-loop at {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::Parse(format!("line {line_no}: repeated edge {u} {v}")));
        }
    }
    if seen.len() != m {
        return Err(Error::Parse(format!("header declares {m} edges, found {}", seen.len())));
    }
    LabeledGraph::new(n, seen.into_iter().map(|(u, v)| (u + 1, v + 1)))
}

pub fn write_graph(g: &LabeledGraph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        writeln!(out, "{} {}", u - 1, v - 1).expect("writing to a String");
    }
    out
}

/// Parses a degree sequence, sorting it if needed. The flag reports
/// whether the input had to be reordered.
pub fn parse_degree_sequence(text: &str) -> Result<(DegreeSequence, bool)> {
    let values = text
        .split_whitespace()
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| Error::Parse(format!("{s:?} is not a nonnegative integer")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DegreeSequence::from_unsorted(values))
}

/// Bipartition with its edge counts, as written to JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionRecord {
    #[serde(rename = "V1")]
    pub v1: Vec<usize>,
    #[serde(rename = "V2")]
    pub v2: Vec<usize>,
    pub e1: u64,
    pub e2: u64,
    pub cut: u64,
}

impl PartitionRecord {
    pub fn new(g: &LabeledGraph, p: &Bipartition) -> Result<Self> {
        let stats = evaluate_bipartition(g, p)?;
        let zero_based = |side| p.members(side).into_iter().map(|v| v - 1).collect();
        Ok(Self {
            v1: zero_based(Side::One),
            v2: zero_based(Side::Two),
            e1: stats.e1,
            e2: stats.e2,
            cut: stats.cut,
        })
    }

    /// Rebuilds the bipartition, checking that the sides cover `0..n`
    /// exactly once and that the stored counts are right.
    pub fn to_bipartition(&self, g: &LabeledGraph) -> Result<Bipartition> {
        let n = g.vertex_count();
        if self.v1.len() + self.v2.len() != n {
            return Err(Error::PartialAssignment {
                expected: n,
                got: self.v1.len() + self.v2.len(),
            });
        }
        let v1: Vec<usize> = self.v1.iter().map(|&v| v + 1).collect();
        let p = Bipartition::from_side_one(n, &v1)?;
        let mut members: Vec<usize> = self.v1.iter().chain(&self.v2).copied().collect();
        members.sort_unstable();
        if members.iter().copied().ne(0..n) {
            return Err(Error::InvalidWitness("sides do not cover every vertex exactly once".into()));
        }
        let stats = evaluate_bipartition(g, &p)?;
        if (stats.e1, stats.e2, stats.cut) != (self.e1, self.e2, self.cut) {
            return Err(Error::InvalidWitness(format!(
                "stored counts ({}, {}, {}) differ from recomputed {stats:?}",
                self.e1, self.e2, self.cut
            )));
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_format() {
        let g = parse_graph("# triangle\n3 3\n0 1\n1 2\n\n# last\n2 0\n").unwrap();
        assert_eq!(g, LabeledGraph::complete(3));
        assert_eq!(write_graph(&g), "3 3\n0 1\n0 2\n1 2\n");
        assert_eq!(parse_graph("0 0").unwrap().vertex_count(), 0);
    }

    #[test]
    fn graph_format_errors() {
        for bad in ["", "3", "2 1\n0 2", "2 1\n0 0", "2 2\n0 1\n1 0", "2 2\n0 1", "2 1\n0 x", "2 1\n0 1 1"] {
            assert!(matches!(parse_graph(bad), Err(Error::Parse(_))), "{bad:?}");
        }
    }

    #[test]
    fn degree_sequence_format() {
        let (s, reordered) = parse_degree_sequence("1 3\n2\n").unwrap();
        assert_eq!(s.values(), &[3, 2, 1]);
        assert!(reordered);
        assert!(parse_degree_sequence("1 -1").is_err());
    }

    #[test]
    fn partition_record() {
        let g = LabeledGraph::complete(4);
        let p = Bipartition::from_side_one(4, &[1, 3]).unwrap();
        let r = PartitionRecord::new(&g, &p).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(json, r#"{"V1":[0,2],"V2":[1,3],"e1":1,"e2":1,"cut":4}"#);
        let back: PartitionRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_bipartition(&g).unwrap(), p);
        let mut wrong = back.clone();
        wrong.cut = 3;
        assert!(wrong.to_bipartition(&g).is_err());
        wrong = back;
        wrong.v2 = vec![1, 1];
        assert!(wrong.to_bipartition(&g).is_err());
    }
}
