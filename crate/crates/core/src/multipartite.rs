//! Good bisections of complete multipartite graphs `K_{r_1,...,r_k}`.
//!
//! Vertices within a part are interchangeable, so a bisection is determined
//! up to automorphism by its count vector `x_i = |X_i ∩ V_1|`. Part `i`
//! (0-based) occupies the consecutive vertex labels after parts `0..i`, and
//! a count vector puts the first `x_i` vertices of each part on side one.
//!
//! Part indices in this module's API are 0-based.

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Bipartition, Bisection, LabeledGraph, Side};

/// Count vectors beyond this many are not enumerated.
pub const ORACLE_CAP: u128 = 10_000_000;

/// Part sizes `(r_1, ..., r_k)`, all positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MultipartiteSpec {
    parts: Vec<usize>,
}

impl MultipartiteSpec {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidSpec("at least one part is required".into()));
        }
        if let Some(i) = parts.iter().position(|&r| r == 0) {
            return Err(Error::InvalidSpec(format!("part {i} is empty")));
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    pub fn order(&self) -> usize {
        self.parts.iter().sum()
    }

    /// First vertex label of part `i`.
    pub fn offset(&self, i: usize) -> usize {
        self.parts[..i].iter().sum::<usize>() + 1
    }

    /// Bipartition placing the first `x_i` vertices of part `i` on side one.
    pub fn bipartition_from_counts(&self, counts: &CrossingCounts) -> Bipartition {
        let mut sides = Vec::with_capacity(self.order());
        for (&r, &x) in self.parts.iter().zip(&counts.x) {
            sides.extend(std::iter::repeat_n(Side::One, x));
            sides.extend(std::iter::repeat_n(Side::Two, r - x));
        }
        Bipartition::from_sides(sides)
    }

    fn bisection_from_counts(&self, counts: &CrossingCounts) -> Result<Bisection> {
        let g = complete_multipartite(self);
        Bisection::induced(&g, self.bipartition_from_counts(counts))
    }

    fn enumeration_size(&self) -> u128 {
        self.parts.iter().map(|&r| r as u128 + 1).product()
    }
}

/// `x_i = |X_i ∩ V_1|` for every part.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CrossingCounts {
    pub x: Vec<usize>,
}

/// A good subset `𝒜` with `𝒜' ⊆ 𝒜` and the count `n` of even parts
/// outside `𝒜` that take a surplus of two.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GoodSubsetWitness {
    pub a: Vec<usize>,
    pub a_prime: Vec<usize>,
    pub n: usize,
}

/// The per-vertex requirement checked by the oracles.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Criterion {
    /// `2 d_H(v) ≥ d_G(v) - 1`.
    Good,
    /// `d_H(v) ≥ ⌊(d_G(v) - 1) / 2⌋`.
    Floor,
}

impl Criterion {
    fn holds(self, dh: usize, dg: usize) -> bool {
        match self {
            Criterion::Good => 2 * dh + 1 >= dg,
            Criterion::Floor => dg == 0 || dh >= (dg - 1) / 2,
        }
    }
}

/// `K_{r_1,...,r_k}` with edges exactly between distinct parts.
pub fn complete_multipartite(spec: &MultipartiteSpec) -> LabeledGraph {
    let mut part_of = Vec::with_capacity(spec.order());
    for (i, &r) in spec.parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, r));
    }
    let n = part_of.len();
    let edges = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .filter(|&(u, v)| part_of[u - 1] != part_of[v - 1])
        .collect::<Vec<_>>();
    LabeledGraph::new(n, edges).expect("generated edges are valid")
}

/// For even order: split every part as evenly as possible, handing the
/// surplus vertex of odd parts alternately to the two sides.
pub fn even_order_good_bisection(spec: &MultipartiteSpec) -> Result<Bisection> {
    if !spec.order().is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "order {} is odd; use the good-subset search",
            spec.order()
        )));
    }
    spec.bisection_from_counts(&balanced_counts(spec))
}

/// Even splits, odd surpluses alternating V1, V2, V1, ... so that the sides
/// differ by at most one.
fn balanced_counts(spec: &MultipartiteSpec) -> CrossingCounts {
    let mut surplus_to_one = true;
    let x = spec
        .parts
        .iter()
        .map(|&r| {
            if r % 2 == 0 {
                r / 2
            } else {
                let x = if surplus_to_one { r.div_ceil(2) } else { r / 2 };
                surplus_to_one = !surplus_to_one;
                x
            }
        })
        .collect();
    CrossingCounts { x }
}

/// Lexicographically smallest subset of `items` (part indices) whose sizes
/// sum to `target`.
fn lex_least_subset_sum(spec: &MultipartiteSpec, items: &[usize], target: usize) -> Option<Vec<usize>> {
    // reach[j][t]: some subset of items[j..] sums to t.
    let m = items.len();
    let mut reach = vec![vec![false; target + 1]; m + 1];
    reach[m][0] = true;
    for j in (0..m).rev() {
        let r = spec.parts[items[j]];
        for t in 0..=target {
            reach[j][t] = reach[j + 1][t] || (t >= r && reach[j + 1][t - r]);
        }
    }
    if !reach[0][target] {
        return None;
    }
    let mut chosen = Vec::new();
    let mut t = target;
    let mut j = 0;
    while t > 0 {
        // Smallest next element that still completes the sum.
        let next = (j..m)
            .find(|&i| spec.parts[items[i]] <= t && reach[i + 1][t - spec.parts[items[i]]])
            .expect("reachability table guarantees a completion");
        chosen.push(items[next]);
        t -= spec.parts[items[next]];
        j = next + 1;
    }
    Some(chosen)
}

/// Searches for a good subset. Subsets `𝒜` are tried by increasing size
/// then lexicographically, `n` ascending, and `𝒜'` is the lexicographically
/// least solution of the subset-sum equation.
pub fn good_subset_search(spec: &MultipartiteSpec) -> Result<Option<GoodSubsetWitness>> {
    if spec.order().is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "order {} is even; use the even-order construction",
            spec.order()
        )));
    }
    if spec.k() > 30 {
        return Err(Error::Refused(format!("{} parts exceed the subset enumeration limit", spec.k())));
    }
    let k = spec.k();
    for size in 0..=k {
        for a in (0..k).combinations(size) {
            if let Some(w) = witness_for(spec, &a) {
                return Ok(Some(w));
            }
        }
    }
    Ok(None)
}

fn witness_for(spec: &MultipartiteSpec, a: &[usize]) -> Option<GoodSubsetWitness> {
    let s_a: usize = a.iter().map(|&i| spec.parts[i]).sum();
    let outside = (0..spec.k()).filter(|i| !a.contains(i));
    let (odd_out, even_out) = outside.fold((0, 0), |(o, e), i| {
        if spec.parts[i] % 2 == 1 {
            (o + 1, e)
        } else {
            (o, e + 1)
        }
    });
    for n in 0..=even_out {
        // s(𝒜') = (s(𝒜) + m + 2n - 1) / 2 must be a nonnegative integer.
        let numerator = s_a + odd_out + 2 * n;
        if numerator == 0 || !(numerator - 1).is_multiple_of(2) {
            continue;
        }
        let target = (numerator - 1) / 2;
        if target > s_a {
            continue;
        }
        if let Some(a_prime) = lex_least_subset_sum(spec, a, target) {
            return Some(GoodSubsetWitness {
                a: a.to_vec(),
                a_prime,
                n,
            });
        }
    }
    None
}

/// Checks that `w` satisfies the good-subset equation for `spec`.
pub fn validate_witness(spec: &MultipartiteSpec, w: &GoodSubsetWitness) -> Result<()> {
    let k = spec.k();
    let bad = |msg: String| Err(Error::InvalidWitness(msg));
    if w.a.iter().any(|&i| i >= k) || !w.a.windows(2).all(|p| p[0] < p[1]) {
        return bad(format!("𝒜 = {:?} must be strictly increasing part indices below {k}", w.a));
    }
    if !w.a_prime.windows(2).all(|p| p[0] < p[1]) || w.a_prime.iter().any(|i| !w.a.contains(i)) {
        return bad(format!("𝒜' = {:?} is not a subset of 𝒜", w.a_prime));
    }
    let s_a: usize = w.a.iter().map(|&i| spec.parts[i]).sum();
    let s_ap: usize = w.a_prime.iter().map(|&i| spec.parts[i]).sum();
    let outside: Vec<usize> = (0..k).filter(|i| !w.a.contains(i)).collect();
    let m = outside.iter().filter(|&&i| spec.parts[i] % 2 == 1).count();
    let even_out = outside.len() - m;
    if w.n > even_out {
        return bad(format!("n = {} exceeds the {even_out} even parts outside 𝒜", w.n));
    }
    if 2 * s_ap + 1 != s_a + m + 2 * w.n {
        return bad(format!(
            "s(𝒜') = {s_ap} but s(𝒜)/2 + (m + 2n - 1)/2 = ({s_a} + {m} + {} - 1)/2",
            2 * w.n
        ));
    }
    Ok(())
}

/// Count vector of the bisection a witness describes: odd parts outside
/// `𝒜` with surplus one on side one, the first `n` even parts outside `𝒜`
/// with surplus two, the remaining even parts split evenly, `𝒜 \ 𝒜'`
/// entirely on side one and `𝒜'` entirely on side two.
pub fn witness_counts(spec: &MultipartiteSpec, w: &GoodSubsetWitness) -> Result<CrossingCounts> {
    validate_witness(spec, w)?;
    let mut surplus_two = w.n;
    let x = (0..spec.k())
        .map(|i| {
            let r = spec.parts[i];
            if w.a_prime.contains(&i) {
                0
            } else if w.a.contains(&i) {
                r
            } else if r % 2 == 1 {
                r.div_ceil(2)
            } else if surplus_two > 0 {
                surplus_two -= 1;
                r / 2 + 1
            } else {
                r / 2
            }
        })
        .collect();
    Ok(CrossingCounts { x })
}

/// Turns a good-subset witness into a good bisection with `|V1| = |V2| + 1`.
pub fn good_bisection_from_witness(spec: &MultipartiteSpec, w: &GoodSubsetWitness) -> Result<Bisection> {
    let counts = witness_counts(spec, w)?;
    spec.bisection_from_counts(&counts)
}

/// Whether the count vector `x` (with `Σx` already balanced) meets the
/// criterion at every vertex.
pub fn counts_satisfy(spec: &MultipartiteSpec, x: &[usize], criterion: Criterion) -> bool {
    let total = spec.order();
    let v1: usize = x.iter().sum();
    let v2 = total - v1;
    spec.parts.iter().zip(x).all(|(&r, &xi)| {
        let dg = total - r;
        // A side-one vertex of this part sees the other parts' side-two vertices.
        let one_ok = xi == 0 || criterion.holds(v2 - (r - xi), dg);
        let two_ok = xi == r || criterion.holds(v1 - xi, dg);
        one_ok && two_ok
    })
}

fn check_cap(spec: &MultipartiteSpec) -> Result<()> {
    let size = spec.enumeration_size();
    if size > ORACLE_CAP {
        return Err(Error::Refused(format!(
            "{size} count vectors exceed the oracle cap of {ORACLE_CAP}"
        )));
    }
    Ok(())
}

/// Depth-first walk over count vectors in lexicographic order, restricted
/// to balanced totals. Returns the first vector accepted by `visit`.
fn first_balanced<F>(parts: &[usize], prefix: &mut Vec<usize>, lo: usize, hi: usize, visit: &F) -> Option<Vec<usize>>
where
    F: Fn(&[usize]) -> bool,
{
    let depth = prefix.len();
    if depth == parts.len() {
        let s: usize = prefix.iter().sum();
        return (s >= lo && s <= hi && visit(prefix)).then(|| prefix.clone());
    }
    let so_far: usize = prefix.iter().sum();
    let rest: usize = parts[depth + 1..].iter().sum();
    for xi in 0..=parts[depth] {
        if so_far + xi > hi {
            break;
        }
        if so_far + xi + rest < lo {
            continue;
        }
        prefix.push(xi);
        let found = first_balanced(parts, prefix, lo, hi, visit);
        prefix.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

fn all_balanced<F>(parts: &[usize], prefix: &mut Vec<usize>, lo: usize, hi: usize, visit: &mut F)
where
    F: FnMut(&[usize]),
{
    let depth = prefix.len();
    if depth == parts.len() {
        let s: usize = prefix.iter().sum();
        if s >= lo && s <= hi {
            visit(prefix);
        }
        return;
    }
    let so_far: usize = prefix.iter().sum();
    let rest: usize = parts[depth + 1..].iter().sum();
    for xi in 0..=parts[depth] {
        if so_far + xi > hi {
            break;
        }
        if so_far + xi + rest < lo {
            continue;
        }
        prefix.push(xi);
        all_balanced(parts, prefix, lo, hi, visit);
        prefix.pop();
    }
}

/// Exhaustive search over balanced count vectors for one meeting
/// `criterion`; returns the lexicographically least. The first coordinate
/// is split across worker threads.
pub fn oracle_search(spec: &MultipartiteSpec, criterion: Criterion) -> Result<Option<CrossingCounts>> {
    check_cap(spec)?;
    let total = spec.order();
    let (lo, hi) = (total / 2, total.div_ceil(2));
    let parts = &spec.parts;
    let visit = |x: &[usize]| counts_satisfy(spec, x, criterion);
    let found = (0..=parts[0]).into_par_iter().find_map_first(|x0| {
        let mut prefix = vec![x0];
        first_balanced(parts, &mut prefix, lo, hi, &visit)
    });
    Ok(found.map(|x| CrossingCounts { x }))
}

/// Independent exhaustive verifier: the lexicographically least balanced
/// count vector whose induced bisection is good, if any.
pub fn good_bisection_oracle(spec: &MultipartiteSpec) -> Result<Option<CrossingCounts>> {
    oracle_search(spec, Criterion::Good)
}

/// Every balanced count vector meeting `criterion`, in lexicographic order.
pub fn enumerate_counts(spec: &MultipartiteSpec, criterion: Criterion) -> Result<Vec<CrossingCounts>> {
    check_cap(spec)?;
    let total = spec.order();
    let mut out = Vec::new();
    all_balanced(&spec.parts, &mut Vec::new(), total / 2, total.div_ceil(2), &mut |x| {
        if counts_satisfy(spec, x, criterion) {
            out.push(CrossingCounts { x: x.to_vec() });
        }
    });
    Ok(out)
}

/// A bisection with `d_H(v) ≥ ⌊(d_G(v) - 1)/2⌋` everywhere: the balanced
/// split when it works, otherwise the oracle under the floor criterion.
pub fn floor_good_bisection(spec: &MultipartiteSpec) -> Result<Bisection> {
    let direct = balanced_counts(spec);
    if counts_satisfy(spec, &direct.x, Criterion::Floor) {
        return spec.bisection_from_counts(&direct);
    }
    match oracle_search(spec, Criterion::Floor)? {
        Some(counts) => spec.bisection_from_counts(&counts),
        None => Err(Error::InvariantBreach(format!(
            "no floor-good bisection of K{:?}",
            spec.parts
        ))),
    }
}

/// Whether `(r1, r2, r3)` are pairwise distinct odd integers none of which
/// is 1, `⌊Σ/2⌋` or `⌈Σ/2⌉`.
pub fn check_bs3_hypothesis(r1: usize, r2: usize, r3: usize) -> bool {
    let rs = [r1, r2, r3];
    let sum = r1 + r2 + r3;
    let excluded = [1, sum / 2, sum.div_ceil(2)];
    rs.iter().all(|r| r % 2 == 1 && !excluded.contains(r)) && r1 != r2 && r2 != r3 && r1 != r3
}

/// A good bisection of `K_{r_1..r_k}` minus the edge `uw`, where `u` is the
/// first vertex of part `i` and `w` the first vertex of part `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinusEdgeWitness {
    pub u: usize,
    pub w: usize,
    pub bipartition: Bipartition,
}

/// The graph `K_{r_1..r_k} - uw` used by [`minus_edge_oracle`].
pub fn complete_multipartite_minus_edge(spec: &MultipartiteSpec, parts: (usize, usize)) -> Result<(LabeledGraph, usize, usize)> {
    let (i, j) = parts;
    if i == j || i >= spec.k() || j >= spec.k() {
        return Err(Error::Precondition(format!(
            "parts ({i}, {j}) must be distinct indices below {}",
            spec.k()
        )));
    }
    let g = complete_multipartite(spec);
    let (u, w) = (spec.offset(i), spec.offset(j));
    let (a, b) = (u.min(w), u.max(w));
    let edges: Vec<(usize, usize)> = g.edges().iter().copied().filter(|&e| e != (a, b)).collect();
    Ok((LabeledGraph::new(g.vertex_count(), edges)?, u, w))
}

/// Exhaustive search for a good bisection of `G - uw`. Symmetry inside a
/// part survives except at `u` and `w`, so their sides are enumerated
/// separately from the bulk counts of their parts.
pub fn minus_edge_oracle(spec: &MultipartiteSpec, parts: (usize, usize)) -> Result<Option<MinusEdgeWitness>> {
    let (i, j) = parts;
    let (_, u, w) = complete_multipartite_minus_edge(spec, parts)?;
    check_cap(spec)?;
    let total = spec.order();
    let (lo, hi) = (total / 2, total.div_ceil(2));
    let r = &spec.parts;
    // Bulk parts: part i and j lose their special vertex.
    let bulk: Vec<usize> = (0..spec.k())
        .map(|p| if p == i || p == j { r[p] - 1 } else { r[p] })
        .collect();
    for (u_one, w_one) in [(true, true), (true, false), (false, true), (false, false)] {
        let special = u_one as usize + w_one as usize;
        if special > hi {
            continue;
        }
        let check = |x: &[usize]| {
            let v1 = x.iter().sum::<usize>() + special;
            let v2 = total - v1;
            // side-one and side-two counts per part including u and w
            let one = |p: usize| x[p] + usize::from(p == i && u_one) + usize::from(p == j && w_one);
            let two = |p: usize| r[p] - one(p);
            let good = |dh: usize, dg: usize| 2 * dh + 1 >= dg;
            // Bulk vertices of every part; u's and w's neighbours lose one
            // degree only through the missing edge, which bulk vertices
            // never touch.
            for p in 0..spec.k() {
                let dg = total - r[p];
                if x[p] > 0 && !good(v2 - two(p), dg) {
                    return false;
                }
                if bulk[p] - x[p] > 0 && !good(v1 - one(p), dg) {
                    return false;
                }
            }
            let special_ok = |p: usize, side_one: bool, other_side_one: bool| {
                let dg = total - r[p] - 1;
                let mut dh = if side_one { v2 - two(p) } else { v1 - one(p) };
                if side_one != other_side_one {
                    dh -= 1;
                }
                good(dh, dg)
            };
            special_ok(i, u_one, w_one) && special_ok(j, w_one, u_one)
        };
        let (lo_b, hi_b) = (lo.saturating_sub(special), hi - special);
        if let Some(x) = first_balanced(&bulk, &mut Vec::new(), lo_b, hi_b, &check) {
            let mut sides = Vec::with_capacity(total);
            for p in 0..spec.k() {
                let mut rest = x[p];
                for q in 0..r[p] {
                    let v = spec.offset(p) + q;
                    let side = if v == u {
                        u_one
                    } else if v == w {
                        w_one
                    } else if rest > 0 {
                        rest -= 1;
                        true
                    } else {
                        false
                    };
                    sides.push(if side { Side::One } else { Side::Two });
                }
            }
            return Ok(Some(MinusEdgeWitness {
                u,
                w,
                bipartition: Bipartition::from_sides(sides),
            }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{bisection_slack, is_good_bisection};

    fn spec(p: &[usize]) -> MultipartiteSpec {
        MultipartiteSpec::new(p.to_vec()).unwrap()
    }

    #[test]
    fn spec_validation() {
        assert!(MultipartiteSpec::new(vec![]).is_err());
        assert!(MultipartiteSpec::new(vec![2, 0]).is_err());
    }

    #[test]
    fn generator_examples() {
        assert_eq!(complete_multipartite(&spec(&[1, 1, 1])), LabeledGraph::complete(3));
        assert_eq!(complete_multipartite(&spec(&[2, 3])).edge_count(), 6);
        let g = complete_multipartite(&spec(&[3, 5, 11]));
        assert_eq!((g.vertex_count(), g.edge_count()), (19, 103));
        assert_eq!(g.degree(1), 16);
        assert_eq!(g.degree(19), 8);
    }

    #[test]
    fn even_order_examples() {
        for p in [&[2, 2][..], &[1, 3], &[3, 5], &[1, 1, 1, 1, 2, 4]] {
            let s = spec(p);
            let h = even_order_good_bisection(&s).unwrap();
            let g = complete_multipartite(&s);
            assert!(is_good_bisection(&g, &h), "{p:?}");
            assert_eq!(h.bipartition().size(Side::One), s.order() / 2);
        }
        assert!(even_order_good_bisection(&spec(&[1, 1, 1])).is_err());
    }

    #[test]
    fn good_subset_examples() {
        let w = good_subset_search(&spec(&[1, 1, 1])).unwrap().unwrap();
        // The search tries 𝒜 = ∅ first: m = 3, target (0 + 3 + 2n - 1)/2 = 1 > 0.
        // Next 𝒜 = {X_1}: m = 2, target (1 + 2 - 1)/2 = 1 = s({X_1}).
        assert_eq!(w, GoodSubsetWitness { a: vec![0], a_prime: vec![0], n: 0 });

        let w = good_subset_search(&spec(&[1, 2, 2])).unwrap().unwrap();
        assert_eq!(w, GoodSubsetWitness { a: vec![], a_prime: vec![], n: 0 });

        assert_eq!(good_subset_search(&spec(&[3, 5, 11])).unwrap(), None);
        assert!(good_subset_search(&spec(&[2, 2])).is_err());
    }

    #[test]
    fn witness_to_bisection() {
        let s = spec(&[1, 1, 1]);
        let w = good_subset_search(&s).unwrap().unwrap();
        let h = good_bisection_from_witness(&s, &w).unwrap();
        assert_eq!(h.bipartition().size(Side::One), 2);
        assert!(is_good_bisection(&complete_multipartite(&s), &h));

        let s = spec(&[1, 2, 2]);
        let w = good_subset_search(&s).unwrap().unwrap();
        assert_eq!(witness_counts(&s, &w).unwrap().x, vec![1, 1, 1]);
        let h = good_bisection_from_witness(&s, &w).unwrap();
        assert_eq!(h.bipartition().size(Side::One), 3);

        let s = spec(&[1, 1, 1, 2]);
        let w = good_subset_search(&s).unwrap().unwrap();
        let h = good_bisection_from_witness(&s, &w).unwrap();
        let g = complete_multipartite(&s);
        assert!(bisection_slack(&g, &h).iter().all(|&x| x >= 0));
    }

    #[test]
    fn invalid_witness_rejected() {
        let s = spec(&[1, 1, 1]);
        let bogus = GoodSubsetWitness { a: vec![0, 1], a_prime: vec![], n: 0 };
        assert!(matches!(good_bisection_from_witness(&s, &bogus), Err(Error::InvalidWitness(_))));
        let not_subset = GoodSubsetWitness { a: vec![0], a_prime: vec![1], n: 0 };
        assert!(validate_witness(&s, &not_subset).is_err());
        let too_many = GoodSubsetWitness { a: vec![0], a_prime: vec![0], n: 1 };
        assert!(validate_witness(&s, &too_many).is_err());
    }

    #[test]
    fn oracle_examples() {
        let c = good_bisection_oracle(&spec(&[1, 1, 1])).unwrap().unwrap();
        assert_eq!(c.x.iter().sum::<usize>() % 3, 1);
        assert_eq!(good_bisection_oracle(&spec(&[3, 5, 11])).unwrap(), None);
        assert_eq!(good_bisection_oracle(&spec(&[2, 2])).unwrap().unwrap().x.iter().sum::<usize>(), 2);
        assert!(enumerate_counts(&spec(&[2, 2]), Criterion::Good).unwrap().contains(&CrossingCounts { x: vec![1, 1] }));
    }

    #[test]
    fn oracle_refuses_large() {
        let s = spec(&[20; 6]);
        assert!(matches!(good_bisection_oracle(&s), Err(Error::Refused(_))));
    }

    #[test]
    fn floor_examples() {
        for p in [&[3, 5, 11][..], &[1, 1, 1], &[7, 7, 7]] {
            let s = spec(p);
            let h = floor_good_bisection(&s).unwrap();
            let g = complete_multipartite(&s);
            for (dh, dg) in h.cross_degrees().into_iter().zip(g.degrees()) {
                assert!(dg == 0 || dh >= (dg - 1) / 2, "{p:?}");
            }
        }
    }

    #[test]
    fn bs3_examples() {
        assert!(check_bs3_hypothesis(3, 5, 11));
        assert!(!check_bs3_hypothesis(3, 5, 7));
        assert!(!check_bs3_hypothesis(1, 3, 5));
        assert!(!check_bs3_hypothesis(3, 3, 11));
        assert!(!check_bs3_hypothesis(3, 5, 12));
    }

    #[test]
    fn minus_edge_examples() {
        let s = spec(&[7, 9, 11]);
        assert_eq!(good_subset_search(&s).unwrap(), None);
        for pair in [(0, 1), (0, 2), (1, 2)] {
            assert_eq!(minus_edge_oracle(&s, pair).unwrap(), None, "{pair:?}");
        }

        let s = spec(&[1, 1, 1]);
        let w = minus_edge_oracle(&s, (0, 1)).unwrap().unwrap();
        let (g, _, _) = complete_multipartite_minus_edge(&s, (0, 1)).unwrap();
        let h = Bisection::induced(&g, w.bipartition).unwrap();
        assert!(is_good_bisection(&g, &h));

        let s = spec(&[2, 2]);
        let w = minus_edge_oracle(&s, (0, 1)).unwrap().unwrap();
        let (g, _, _) = complete_multipartite_minus_edge(&s, (0, 1)).unwrap();
        assert!(is_good_bisection(&g, &Bisection::induced(&g, w.bipartition).unwrap()));

        assert!(minus_edge_oracle(&s, (1, 1)).is_err());
    }
}
