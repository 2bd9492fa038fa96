//! `t(m)` bounds, minimum-norm bipartitions and judicious bipartitions.
//!
//! Bipartitions are enumerated as masks over vertices `v_2..v_n` with `v_1`
//! pinned to side one (a bipartition and its complement have the same
//! norm). Among minimizers the smallest mask wins, so results do not depend
//! on how the work is split between threads.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{cmp_power_sum_to_bound, cmp_power_sums, compare_to_t, power_sum_exact, power_sum_f64, t_of_m, Comparison, Lambda, Surd};
use crate::graph::{evaluate_bipartition, Bipartition, LabeledGraph, PartitionStats, Side};

/// Largest vertex count for exhaustive bipartition search.
pub const EXHAUSTIVE_LIMIT: usize = 24;
/// Exhaustive k-partition search runs while `k^n` stays below this.
pub const KPART_EXHAUSTIVE_CAP: u64 = 10_000_000;

/// The quantity `t(m)` for a fixed edge count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EdwardsBound {
    pub m: u64,
}

impl EdwardsBound {
    pub fn new(m: u64) -> Self {
        Self { m }
    }

    pub fn t(&self) -> f64 {
        t_of_m(self.m)
    }

    pub fn t_exact(&self) -> Surd {
        Surd::t_of_m(self.m)
    }

    /// Smallest integer cut `c` with `c ≥ m/2 + t/2`.
    pub fn min_cut(&self) -> u64 {
        (0..=self.m)
            .find(|&c| cut_ok(c, self.m))
            .unwrap_or(self.m)
    }

    /// Largest integer `e` with `e ≤ m/4 + t/4`.
    pub fn max_side(&self) -> u64 {
        (0..=self.m)
            .rev()
            .find(|&e| side_ok(e, self.m))
            .unwrap_or(0)
    }
}

fn int(x: i128) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// `cut ≥ m/2 + t/2` iff `2·cut - m ≥ t`.
fn cut_ok(cut: u64, m: u64) -> bool {
    compare_to_t(&int(2 * cut as i128 - m as i128), m) != Ordering::Less
}

/// `e ≤ m/4 + t/4` iff `4e - m ≤ t`.
fn side_ok(e: u64, m: u64) -> bool {
    compare_to_t(&int(4 * e as i128 - m as i128), m) != Ordering::Greater
}

/// `Σ terms_i^λ`, kept as its integer terms so comparisons stay exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormValue {
    pub terms: Vec<u64>,
    pub lambda: Lambda,
}

impl NormValue {
    pub fn new(terms: Vec<u64>, lambda: Lambda) -> Self {
        Self { terms, lambda }
    }

    /// The exact value, available for integral `λ`.
    pub fn exact(&self) -> Option<BigUint> {
        power_sum_exact(&self.terms, self.lambda)
    }

    pub fn to_f64(&self) -> f64 {
        power_sum_f64(&self.terms, self.lambda)
    }

    pub fn compare(&self, other: &NormValue) -> Comparison {
        cmp_power_sums(&self.terms, &other.terms, self.lambda)
    }
}

impl fmt::Display for NormValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exact() {
            Some(v) => write!(f, "{v}"),
            None => write!(f, "{}", self.to_f64()),
        }
    }
}

impl Serialize for NormValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Minimum of `e₁^λ + e₂^λ` with a bipartition attaining it.
#[derive(Clone, Debug)]
pub struct NormResult {
    pub lambda: Lambda,
    pub value: NormValue,
    pub stats: PartitionStats,
    pub argmin: Bipartition,
    /// False when two candidate values could not be separated within the
    /// interval precision cap and were treated as equal.
    pub decided: bool,
}

fn adjacency_masks(g: &LabeledGraph) -> Vec<u64> {
    (1..=g.vertex_count())
        .map(|v| g.neighbors(v).iter().fold(0u64, |acc, &u| acc | 1 << (u - 1)))
        .collect()
}

fn side_counts(adj: &[u64], mask: u64, full: u64) -> (u32, u32) {
    let mut e1 = 0;
    let mut e2 = 0;
    for (v, &a) in adj.iter().enumerate() {
        if mask >> v & 1 == 1 {
            e2 += (a & mask).count_ones();
        } else {
            e1 += (a & !mask & full).count_ones();
        }
    }
    (e1 / 2, e2 / 2)
}

/// For every `(e₁, e₂)` pair realized by some bipartition, the smallest mask
/// realizing it.
fn split_profile(g: &LabeledGraph) -> HashMap<(u32, u32), u64> {
    let n = g.vertex_count();
    if n <= 1 {
        return HashMap::from([((0, 0), 0)]);
    }
    let adj = adjacency_masks(g);
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let free = n - 1;
    // Small instances are not worth splitting across threads.
    let chunk_bits = if free <= 14 { 0 } else { free.min(22) - 14 };
    let low = free - chunk_bits;
    (0u64..1 << chunk_bits)
        .into_par_iter()
        .map(|chunk| profile_chunk(&adj, full, chunk << (1 + low), low))
        .reduce(HashMap::new, |mut a, b| {
            for (k, m) in b {
                a.entry(k).and_modify(|x| *x = (*x).min(m)).or_insert(m);
            }
            a
        })
}

/// Gray-code walk over the `low` bits above bit 0, starting from `start`.
fn profile_chunk(adj: &[u64], full: u64, start: u64, low: usize) -> HashMap<(u32, u32), u64> {
    let mut mask = start;
    let (mut e1, mut e2) = side_counts(adj, mask, full);
    let mut seen: HashMap<(u32, u32), u64> = HashMap::new();
    let mut record = |key: (u32, u32), mask: u64| {
        seen.entry(key).and_modify(|m| *m = (*m).min(mask)).or_insert(mask);
    };
    record((e1, e2), mask);
    for i in 1u64..1 << low {
        let v = 1 + i.trailing_zeros() as usize;
        let a = adj[v];
        let in_one = (a & !mask & full).count_ones();
        let in_two = (a & mask).count_ones();
        if mask >> v & 1 == 0 {
            e1 -= in_one;
            e2 += in_two;
        } else {
            e2 -= in_two;
            e1 += in_one;
        }
        mask ^= 1 << v;
        record((e1, e2), mask);
    }
    seen
}

fn check_exhaustive(g: &LabeledGraph, limit: usize) -> Result<()> {
    let n = g.vertex_count();
    if n > limit.min(64) {
        return Err(Error::Refused(format!(
            "{n} vertices exceed the exhaustive limit of {limit}; use the local search"
        )));
    }
    Ok(())
}

/// Picks the minimum of `Σ terms^λ` from candidates, ties broken by `key`.
/// Floating point only prunes; survivors are compared exactly.
fn exact_argmin<T: Clone, K: Ord>(
    candidates: Vec<(Vec<u64>, K, T)>,
    lambda: Lambda,
) -> Option<(Vec<u64>, T, bool)> {
    let best_f = candidates
        .iter()
        .map(|(t, _, _)| power_sum_f64(t, lambda))
        .fold(f64::INFINITY, f64::min);
    let slack = best_f.abs() * 1e-9 + 1e-9;
    let mut decided = true;
    let mut best: Option<(Vec<u64>, K, T)> = None;
    for (terms, key, payload) in candidates {
        if power_sum_f64(&terms, lambda) > best_f + slack {
            continue;
        }
        best = Some(match best {
            None => (terms, key, payload),
            Some(cur) => {
                let c = cmp_power_sums(&terms, &cur.0, lambda);
                decided &= c.exact;
                match c.ordering.then_with(|| key.cmp(&cur.1)) {
                    Ordering::Less => (terms, key, payload),
                    _ => cur,
                }
            }
        });
    }
    best.map(|(t, _, p)| (t, p, decided))
}

/// Global minimum of `e₁^λ + e₂^λ` over all bipartitions.
pub fn exact_min_norm(g: &LabeledGraph, lambda: Lambda) -> Result<NormResult> {
    exact_min_norm_with_limit(g, lambda, EXHAUSTIVE_LIMIT)
}

pub fn exact_min_norm_with_limit(g: &LabeledGraph, lambda: Lambda, limit: usize) -> Result<NormResult> {
    check_exhaustive(g, limit)?;
    let candidates = split_profile(g)
        .into_iter()
        .map(|((e1, e2), mask)| (vec![e1 as u64, e2 as u64], mask, mask))
        .collect();
    let (terms, mask, decided) = exact_argmin(candidates, lambda).expect("at least one bipartition");
    let argmin = Bipartition::from_mask(g.vertex_count(), mask);
    let stats = evaluate_bipartition(g, &argmin)?;
    Ok(NormResult {
        lambda,
        value: NormValue::new(terms, lambda),
        stats,
        argmin,
        decided,
    })
}

/// `C(t,2)^λ + C(t+1,2)^λ` with `t = t(m)`, as a float for display.
///
/// For `m ≤ 2` the first binomial is negative, which only has a real power
/// for integral `λ`.
pub fn norm_bound(m: u64, lambda: Lambda) -> Result<f64> {
    if m == 0 {
        return Err(Error::Precondition("the bound needs m ≥ 1".into()));
    }
    let t = t_of_m(m);
    let lo = t * (t - 1.0) / 2.0;
    let hi = t * (t + 1.0) / 2.0;
    match lambda.as_integer() {
        Some(p) => Ok(lo.powi(p as i32) + hi.powi(p as i32)),
        None if lo < 0.0 => Err(Error::Precondition(format!(
            "C(t({m}), 2) is negative and has no real power {lambda}"
        ))),
        None => Ok(lo.powf(lambda.to_f64()) + hi.powf(lambda.to_f64())),
    }
}

/// Exact comparison of a norm value with `norm_bound(m, λ)`.
pub fn compare_with_bound(value: &NormValue, m: u64) -> Result<Comparison> {
    cmp_power_sum_to_bound(&value.terms, m, value.lambda)
}

/// Whether the graph without its isolated vertices is a complete graph on
/// an odd number (at least three) of vertices.
pub fn is_odd_clique_with_isolated(g: &LabeledGraph) -> bool {
    let k = g.non_isolated_count();
    k % 2 == 1 && k >= 3 && g.edge_count() == k * (k - 1) / 2
}

/// How a judicious bipartition was found.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    Exhaustive,
    LocalSearch { restart: usize, moves: u64 },
}

/// A bipartition meeting both the cut and the max-side targets.
#[derive(Clone, Debug)]
pub struct JudiciousCertificate {
    pub bipartition: Bipartition,
    pub stats: PartitionStats,
    pub m: u64,
    pub strategy: Strategy,
}

/// Local search parameters.
#[derive(Clone, Copy, Debug)]
pub struct SearchConfig {
    /// Total single-vertex moves across all restarts.
    pub budget: u64,
    pub restarts: usize,
    pub plateau: usize,
    pub seed: u64,
    pub exhaustive_limit: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            budget: 200_000,
            restarts: 20,
            plateau: 50,
            seed: 0x6a75_6469,
            exhaustive_limit: EXHAUSTIVE_LIMIT,
        }
    }
}

/// Checks both targets exactly: `cut ≥ m/2 + t/2` and
/// `max(e₁, e₂) ≤ m/4 + t/4`.
pub fn satisfies_judicious(stats: &PartitionStats) -> bool {
    let m = stats.total();
    cut_ok(stats.cut, m) && side_ok(stats.max_side(), m)
}

/// Recomputes the statistics of a certificate and checks both targets.
pub fn verify_judicious(g: &LabeledGraph, cert: &JudiciousCertificate) -> Result<bool> {
    let stats = evaluate_bipartition(g, &cert.bipartition)?;
    Ok(stats == cert.stats && stats.total() == cert.m && satisfies_judicious(&stats))
}

/// Finds a bipartition with `cut ≥ m/2 + t/2` and
/// `max(e₁, e₂) ≤ m/4 + t/4`.
///
/// Exhaustive up to `config.exhaustive_limit` vertices (preferring the
/// smallest max side, then the largest cut, then the smallest mask), local
/// search above. Failure is reported as
/// [`Error::PotentialCounterexample`].
pub fn find_judicious_bipartition(g: &LabeledGraph, config: &SearchConfig) -> Result<JudiciousCertificate> {
    let m = g.edge_count() as u64;
    let bound = EdwardsBound::new(m);
    let (cut_min, side_max) = (bound.min_cut(), bound.max_side());
    let found = if g.vertex_count() <= config.exhaustive_limit.min(64) {
        split_profile(g)
            .into_iter()
            .filter(|&((e1, e2), _)| {
                let (e1, e2) = (e1 as u64, e2 as u64);
                m - e1 - e2 >= cut_min && e1.max(e2) <= side_max
            })
            .min_by_key(|&((e1, e2), mask)| (e1.max(e2), e1 + e2, mask))
            .map(|(_, mask)| (Bipartition::from_mask(g.vertex_count(), mask), Strategy::Exhaustive))
    } else {
        local_search(g, cut_min, side_max, config)
    };
    let Some((bipartition, strategy)) = found else {
        return Err(Error::PotentialCounterexample(format!(
            "no bipartition with cut ≥ {cut_min} and max side ≤ {side_max} found ({} vertices, {m} edges)",
            g.vertex_count()
        )));
    };
    let stats = evaluate_bipartition(g, &bipartition)?;
    if !satisfies_judicious(&stats) {
        return Err(Error::InvariantBreach(format!(
            "search returned {stats:?}, which fails the exact check"
        )));
    }
    Ok(JudiciousCertificate {
        bipartition,
        stats,
        m,
        strategy,
    })
}

struct MoveState<'a> {
    g: &'a LabeledGraph,
    two: Vec<bool>,
    /// Neighbors of each vertex on side two.
    nb_two: Vec<u64>,
    e1: u64,
    e2: u64,
    cut: u64,
}

impl<'a> MoveState<'a> {
    fn new(g: &'a LabeledGraph, two: Vec<bool>) -> Self {
        let n = g.vertex_count();
        let mut nb_two = vec![0; n];
        let (mut e1, mut e2, mut cut) = (0, 0, 0);
        for &(u, v) in g.edges() {
            match (two[u - 1], two[v - 1]) {
                (false, false) => e1 += 1,
                (true, true) => e2 += 1,
                _ => cut += 1,
            }
            nb_two[u - 1] += two[v - 1] as u64;
            nb_two[v - 1] += two[u - 1] as u64;
        }
        Self { g, two, nb_two, e1, e2, cut }
    }

    /// `(e₁, e₂, cut)` after moving `v` (0-based) across.
    fn after_move(&self, v: usize) -> (u64, u64, u64) {
        let deg = self.g.degree(v + 1) as u64;
        let on_two = self.nb_two[v];
        let on_one = deg - on_two;
        if self.two[v] {
            (self.e1 + on_one, self.e2 - on_two, self.cut + on_two - on_one)
        } else {
            (self.e1 - on_one, self.e2 + on_two, self.cut + on_one - on_two)
        }
    }

    fn apply(&mut self, v: usize) {
        let (e1, e2, cut) = self.after_move(v);
        self.e1 = e1;
        self.e2 = e2;
        self.cut = cut;
        let was_two = self.two[v];
        self.two[v] = !was_two;
        for &u in self.g.neighbors(v + 1) {
            if was_two {
                self.nb_two[u - 1] -= 1;
            } else {
                self.nb_two[u - 1] += 1;
            }
        }
    }
}

/// Lexicographic objective: total violation, then max side, then larger cut.
fn score(e1: u64, e2: u64, cut: u64, cut_min: u64, side_max: u64) -> (u64, u64, i64) {
    let violation = cut_min.saturating_sub(cut) + e1.max(e2).saturating_sub(side_max);
    (violation, e1.max(e2), -(cut as i64))
}

fn local_search(g: &LabeledGraph, cut_min: u64, side_max: u64, config: &SearchConfig) -> Option<(Bipartition, Strategy)> {
    let n = g.vertex_count();
    let restarts = config.restarts.max(1);
    let per_restart = (config.budget / restarts as u64).max(1);
    (0..restarts).into_par_iter().find_map_first(|r| {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed.wrapping_add(r as u64));
        let mut st = MoveState::new(g, (0..n).map(|_| rng.random::<bool>()).collect());
        let mut plateau = 0;
        let mut moves = 0;
        loop {
            let current = score(st.e1, st.e2, st.cut, cut_min, side_max);
            if current.0 == 0 {
                let sides = st.two.iter().map(|&t| if t { Side::Two } else { Side::One }).collect();
                return Some((Bipartition::from_sides(sides), Strategy::LocalSearch { restart: r, moves }));
            }
            if moves >= per_restart {
                return None;
            }
            let scored: Vec<_> = (0..n)
                .map(|v| {
                    let (e1, e2, cut) = st.after_move(v);
                    (score(e1, e2, cut, cut_min, side_max), v)
                })
                .collect();
            let best = scored.iter().map(|&(s, _)| s).min()?;
            let choice = match best.cmp(&current) {
                Ordering::Less => {
                    plateau = 0;
                    scored.iter().find(|&&(s, _)| s == best).map(|&(_, v)| v)
                }
                Ordering::Equal if plateau < config.plateau => {
                    plateau += 1;
                    let ties: Vec<usize> = scored.iter().filter(|&&(s, _)| s == best).map(|&(_, v)| v).collect();
                    ties.choose(&mut rng).copied()
                }
                _ => None,
            };
            let v = choice?;
            st.apply(v);
            moves += 1;
        }
    })
}

/// A k-partition and its `Σ e(V_i)^λ`.
#[derive(Clone, Debug)]
pub struct KPartitionResult {
    pub value: NormValue,
    /// Part index (0-based) of each vertex `v_1..v_n`.
    pub parts: Vec<usize>,
    /// `e(V_i)` for each part.
    pub edge_counts: Vec<u64>,
    /// True when the value is a proven minimum.
    pub exhaustive: bool,
    pub decided: bool,
}

fn part_edge_counts(g: &LabeledGraph, parts: &[usize], k: usize) -> Vec<u64> {
    let mut counts = vec![0; k];
    for &(u, v) in g.edges() {
        if parts[u - 1] == parts[v - 1] {
            counts[parts[u - 1]] += 1;
        }
    }
    counts
}

/// Minimum of `Σ e(V_i)^λ` over k-partitions (parts may be empty).
///
/// Exhaustive over set partitions into at most `k` blocks when
/// `k^n ≤ 10⁷`; otherwise greedy placement followed by improving
/// single-vertex moves.
pub fn k_partition_min_norm(g: &LabeledGraph, k: usize, lambda: Lambda) -> Result<KPartitionResult> {
    if k < 2 {
        return Err(Error::Precondition(format!("k = {k} must be at least 2")));
    }
    let n = g.vertex_count();
    let small = (k as u64).checked_pow(n as u32).is_some_and(|x| x <= KPART_EXHAUSTIVE_CAP);
    if small && n <= 64 {
        return Ok(kpart_exhaustive(g, k, lambda));
    }
    Ok(kpart_heuristic(g, k, lambda))
}

fn kpart_exhaustive(g: &LabeledGraph, k: usize, lambda: Lambda) -> KPartitionResult {
    let n = g.vertex_count();
    // Neighbors with smaller index, as a bitmask.
    let earlier: Vec<u64> = (1..=n)
        .map(|v| g.neighbors(v).iter().filter(|&&u| u < v).fold(0u64, |acc, &u| acc | 1 << (u - 1)))
        .collect();
    struct Walk<'a> {
        earlier: &'a [u64],
        k: usize,
        blocks: Vec<u64>,
        counts: Vec<u64>,
        assign: Vec<usize>,
        order: u64,
        seen: BTreeMap<Vec<u64>, (u64, Vec<usize>)>,
    }
    impl Walk<'_> {
        fn go(&mut self, v: usize, used: usize) {
            if v == self.earlier.len() {
                let mut key = self.counts.clone();
                key.sort_unstable_by(|a, b| b.cmp(a));
                let order = self.order;
                self.order += 1;
                self.seen.entry(key).or_insert_with(|| (order, self.assign.clone()));
                return;
            }
            for b in 0..self.k.min(used + 1) {
                let add = (self.earlier[v] & self.blocks[b]).count_ones() as u64;
                self.counts[b] += add;
                self.blocks[b] |= 1 << v;
                self.assign[v] = b;
                self.go(v + 1, used.max(b + 1));
                self.blocks[b] &= !(1 << v);
                self.counts[b] -= add;
            }
        }
    }
    let mut walk = Walk {
        earlier: &earlier,
        k,
        blocks: vec![0; k],
        counts: vec![0; k],
        assign: vec![0; n],
        order: 0,
        seen: BTreeMap::new(),
    };
    walk.go(0, 0);
    let candidates = walk
        .seen
        .into_iter()
        .map(|(terms, (order, assign))| (terms, order, assign))
        .collect();
    let (_, parts, decided) = exact_argmin(candidates, lambda).expect("at least one partition");
    let edge_counts = part_edge_counts(g, &parts, k);
    KPartitionResult {
        value: NormValue::new(edge_counts.clone(), lambda),
        parts,
        edge_counts,
        exhaustive: true,
        decided,
    }
}

fn kpart_heuristic(g: &LabeledGraph, k: usize, lambda: Lambda) -> KPartitionResult {
    let n = g.vertex_count();
    let l = lambda.to_f64();
    let mut parts = vec![usize::MAX; n];
    let mut sizes = vec![0usize; k];
    for v in 0..n {
        let mut inside = vec![0u64; k];
        for &u in g.neighbors(v + 1) {
            if parts[u - 1] != usize::MAX {
                inside[parts[u - 1]] += 1;
            }
        }
        let b = (0..k).min_by_key(|&b| (inside[b], sizes[b], b)).expect("k ≥ 2");
        parts[v] = b;
        sizes[b] += 1;
    }
    let mut counts = part_edge_counts(g, &parts, k);
    let pw = |x: u64| (x as f64).powf(l);
    loop {
        let mut best: Option<(f64, usize, usize, Vec<u64>)> = None;
        for v in 0..n {
            let from = parts[v];
            let mut links = vec![0u64; k];
            for &u in g.neighbors(v + 1) {
                links[parts[u - 1]] += 1;
            }
            for to in (0..k).filter(|&b| b != from) {
                let gain = pw(counts[from]) + pw(counts[to]) - pw(counts[from] - links[from]) - pw(counts[to] + links[to]);
                if gain > 1e-9 && best.as_ref().is_none_or(|b| gain > b.0) {
                    best = Some((gain, v, to, links.clone()));
                }
            }
        }
        let Some((_, v, to, links)) = best else { break };
        let from = parts[v];
        counts[from] -= links[from];
        counts[to] += links[to];
        parts[v] = to;
    }
    KPartitionResult {
        value: NormValue::new(counts.clone(), lambda),
        parts,
        edge_counts: counts,
        exhaustive: false,
        decided: true,
    }
}

/// `⌊k/2⌋·C(s+1,2)^λ + ⌈k/2⌉·C(s,2)^λ` when `m = C(ks + ⌊k/2⌋, 2)` for
/// some integer `s ≥ 0`.
pub fn f_lambda_k(m: u64, k: u64, lambda: Lambda) -> Option<NormValue> {
    let c2 = |x: u64| x * x.saturating_sub(1) / 2;
    let s = (0..).map(|s| (s, c2(k * s + k / 2))).take_while(|&(_, c)| c <= m).find(|&(_, c)| c == m)?.0;
    let mut terms = vec![c2(s + 1); (k / 2) as usize];
    terms.extend(std::iter::repeat_n(c2(s), k.div_ceil(2) as usize));
    Some(NormValue::new(terms, lambda))
}

/// `e ≤ m/k² + (k-1)t(m)/k²`, checked as `(k²e - m)/(k-1) ≤ t(m)`.
pub fn part_bound_holds(e: u64, m: u64, k: u64) -> bool {
    let u = BigRational::new(
        BigInt::from(k as i128 * k as i128 * e as i128 - m as i128),
        BigInt::from(k - 1),
    );
    compare_to_t(&u, m) != Ordering::Greater
}

/// The two leading terms `m^λ/k^(2λ-1) - (k-1)λ m^(λ-1) t(m)/k^(2λ-1)` of
/// the k-partition norm bound. The lower-order slack has no explicit
/// constant, so this is only a diagnostic.
pub fn kpart_leading_terms(m: u64, k: u64, lambda: Lambda) -> f64 {
    let l = lambda.to_f64();
    let (m, k) = (m as f64, k as f64);
    let scale = k.powf(2.0 * l - 1.0);
    (m.powf(l) - (k - 1.0) * l * m.powf(l - 1.0) * t_of_m(m as u64)) / scale
}
