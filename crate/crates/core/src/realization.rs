//! Realizations of graphic sequences whose parity bisection is good.
//!
//! Given a graphic `π = (d_1 ≥ ... ≥ d_n)`, [`build_realization`] produces a
//! graph with `d(v_i) = d_i` whose parity bisection `H` satisfies
//! `2 d_H(v_i) ≥ d_i - 1` for every `i`.
//!
//! The construction peels two equal consecutive entries `d_ℓ = d_{ℓ+1} = k`
//! off the sequence with two ordered layoffs, realizes the shorter sequence
//! `ω''`, then re-inserts the two vertices. The bookkeeping of which entries
//! lost one (`X_1`) or two (`X_2`) degrees is captured by
//! [`Claim1Decomposition`], and the way the two new vertices are wired
//! depends on the parity imbalance of `X_1` (see [`ConstructionCase`]).
//!
//! Every step re-checks the counting identities the construction relies on.
//! A failure is reported as [`Error::InvariantBreach`] with the offending
//! sequence and step; it is never repaired silently.

use std::fmt;

use serde::Serialize;

use crate::degseq::{is_graphic, lay_off_with_order_slice, DegreeSequence};
use crate::error::{Error, Result};
use crate::graph::{bisection_slack, parity_bisection, Bisection, LabeledGraph};

/// Which of the four size regimes of the Claim-1 bookkeeping applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Subcase {
    /// `K = 0`: nothing was laid off from `ω`.
    Degenerate,
    /// `|C| ≥ |B| + |D|`.
    TiesAbsorbAll,
    /// `|D| ≤ |C| < |B| + |D|`.
    TiesAbsorbPart,
    /// `|C| < |D| ≤ |C| + |E|`.
    SpillIntoLower,
    /// `|D| > |C| + |E|`.
    SpillPastLower,
}

/// Index sets (1-based positions in `ω`) describing how `ω''` differs
/// from `ω`.
///
/// `X1 = R1p ∪ R2p`, `X2 = R1 ∪ R2`, the sequence `R1, R1p, Q, R2p` is
/// consecutive starting at 1, `R2` is empty or equal to `Q`, and
/// `f''_i = f''_j + 1` for `i ∈ R1p`, `j ∈ R2p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim1Decomposition {
    pub x1: Vec<usize>,
    pub x2: Vec<usize>,
    pub r1: Vec<usize>,
    pub r2: Vec<usize>,
    pub r1p: Vec<usize>,
    pub r2p: Vec<usize>,
    pub q: Vec<usize>,
    /// Entries decremented by each of the two layoffs.
    pub k_total: usize,
    /// Minimum of the `K` largest entries of `ω`.
    pub s: Option<usize>,
    pub subcase: Subcase,
}

impl Claim1Decomposition {
    fn empty() -> Self {
        Self {
            x1: Vec::new(),
            x2: Vec::new(),
            r1: Vec::new(),
            r2: Vec::new(),
            r1p: Vec::new(),
            r2p: Vec::new(),
            q: Vec::new(),
            k_total: 0,
            s: None,
            subcase: Subcase::Degenerate,
        }
    }
}

/// How the two re-inserted vertices are wired, decided by
/// `|X1 ∩ I1| - |X1 ∩ I2|` where `I1`/`I2` are the odd/even positions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ConstructionCase {
    /// Difference 0: no pivot needed.
    Balanced,
    /// Difference -2: a pivot `z ∈ X1 ∩ I2` moves from `a` to `b`.
    EvenSurplus,
    /// Difference +2: a pivot `z ∈ X1 ∩ I1` moves from `b` to `a`.
    OddSurplus,
}

impl ConstructionCase {
    fn pivot_parity(self) -> Option<usize> {
        match self {
            ConstructionCase::Balanced => None,
            ConstructionCase::EvenSurplus => Some(0),
            ConstructionCase::OddSurplus => Some(1),
        }
    }
}

/// Record of one reduction step, kept for inspection and testing.
#[derive(Clone, Debug, Serialize)]
pub struct StepRecord {
    /// Length of the sequence being reduced.
    pub n: usize,
    pub ell: usize,
    pub k: usize,
    pub epsilon: bool,
    pub decomposition: Claim1Decomposition,
    pub case: ConstructionCase,
    /// Pivot position in `ω`, when the case needs one.
    pub pivot: Option<usize>,
    pub x1_odd: usize,
    pub x1_even: usize,
    pub x2_odd: usize,
    pub x2_even: usize,
}

/// A realization together with its parity bisection and slacks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealizationCertificate {
    pub graph: LabeledGraph,
    pub bisection: Bisection,
    pub slacks: Vec<i64>,
}

impl RealizationCertificate {
    pub fn from_graph(graph: LabeledGraph) -> Self {
        let bisection = parity_bisection(&graph);
        let slacks = bisection_slack(&graph, &bisection);
        Self {
            graph,
            bisection,
            slacks,
        }
    }

    pub fn is_ok(&self) -> bool {
        self.slacks.iter().all(|&s| s >= 0)
    }
}

struct Diagnostic<'a> {
    pi: &'a [usize],
    ell: usize,
    what: String,
}

impl fmt::Display for Diagnostic<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (sequence {:?}, ell = {})", self.what, self.pi, self.ell)
    }
}

fn breach(pi: &[usize], ell: usize, what: impl Into<String>) -> Error {
    Error::InvariantBreach(
        Diagnostic {
            pi,
            ell,
            what: what.into(),
        }
        .to_string(),
    )
}

fn is_consecutive_run(sets: &[&[usize]]) -> bool {
    let mut expected: Option<usize> = None;
    for set in sets {
        for &x in *set {
            match expected {
                None => {
                    if x != 1 {
                        return false;
                    }
                }
                Some(e) if e != x => return false,
                _ => {}
            }
            expected = Some(x + 1);
        }
    }
    true
}

fn last(v: &[usize], count: usize) -> (Vec<usize>, Vec<usize>) {
    let split = v.len() - count;
    (v[..split].to_vec(), v[split..].to_vec())
}

fn union(parts: &[&[usize]]) -> Vec<usize> {
    let mut out: Vec<usize> = parts.iter().flat_map(|p| p.iter().copied()).collect();
    out.sort_unstable();
    out
}

/// Decomposes the differences between `ω`, `ω'` and `ω''` into the index
/// sets of [`Claim1Decomposition`].
///
/// `omega_p` must arise from `omega` by decrementing exactly `k_total`
/// entries and `omega_pp` from `omega_p` likewise, as happens in the double
/// ordered layoff. Every structural property is checked; a mismatch yields
/// [`Error::InvariantBreach`].
pub fn claim1_decompose(
    omega: &[usize],
    omega_p: &[usize],
    omega_pp: &[usize],
    k_total: usize,
) -> Result<Claim1Decomposition> {
    let len = omega.len();
    let fail = |what: String| Error::InvariantBreach(format!("{what}: ω={omega:?} ω'={omega_p:?} ω''={omega_pp:?} K={k_total}"));
    if omega_p.len() != len || omega_pp.len() != len {
        return Err(fail("length mismatch".into()));
    }
    let mut first = Vec::new();
    let mut second = Vec::new();
    for i in 0..len {
        match omega[i].checked_sub(omega_p[i]) {
            Some(0) => {}
            Some(1) => first.push(i + 1),
            _ => return Err(fail(format!("position {} not a unit layoff in ω'", i + 1))),
        }
        match omega_p[i].checked_sub(omega_pp[i]) {
            Some(0) => {}
            Some(1) => second.push(i + 1),
            _ => return Err(fail(format!("position {} not a unit layoff in ω''", i + 1))),
        }
    }
    if first.len() != k_total || second.len() != k_total {
        return Err(fail(format!(
            "layoffs decrement {} and {} entries",
            first.len(),
            second.len()
        )));
    }
    if k_total == 0 {
        return Ok(Claim1Decomposition::empty());
    }

    let s = omega[k_total - 1];
    let dec1 = |i: usize| omega_p[i - 1] + 1 == omega[i - 1];
    let (mut a, mut b, mut c, mut d, mut e) = (vec![], vec![], vec![], vec![], vec![]);
    for i in 1..=len {
        let f = omega[i - 1];
        if f >= s + 2 {
            a.push(i);
        } else if f == s + 1 {
            b.push(i);
        } else if f == s {
            if dec1(i) {
                d.push(i);
            } else {
                c.push(i);
            }
        } else if f + 1 == s {
            e.push(i);
        }
    }
    if union(&[&a, &b, &d]) != first {
        return Err(fail("first layoff does not decrement exactly A ∪ B ∪ D".into()));
    }

    let (subcase, r1, r2, r1p, r2p, q, y) = if c.len() >= b.len() + d.len() {
        let (c1, c2) = last(&c, b.len() + d.len());
        let y = union(&[&a, &c2]);
        (Subcase::TiesAbsorbAll, a.clone(), vec![], b.clone(), union(&[&c2, &d]), c1, y)
    } else if d.len() <= c.len() {
        let (b1, b2) = last(&b, b.len() + d.len() - c.len());
        let y = union(&[&a, &b2, &c]);
        (Subcase::TiesAbsorbPart, a.clone(), b2.clone(), b1, union(&[&c, &d]), b2, y)
    } else if d.len() <= c.len() + e.len() {
        let (e1, e2) = last(&e, d.len() - c.len());
        let y = union(&[&a, &b, &c, &e2]);
        (Subcase::SpillIntoLower, union(&[&a, &b]), vec![], union(&[&c, &d]), e2, e1, y)
    } else {
        let (d1, d2) = last(&d, d.len() - c.len() - e.len());
        let y = union(&[&a, &b, &c, &d2, &e]);
        (Subcase::SpillPastLower, union(&[&a, &b]), d2.clone(), union(&[&c, &d1]), e.clone(), d2, y)
    };
    if y != second {
        return Err(fail(format!("second layoff hit {second:?}, expected {y:?} ({subcase:?})")));
    }

    let x1: Vec<usize> = (1..=len).filter(|&i| omega_pp[i - 1] + 1 == omega[i - 1]).collect();
    let x2: Vec<usize> = (1..=len).filter(|&i| omega_pp[i - 1] + 2 == omega[i - 1]).collect();
    let decomposition = Claim1Decomposition {
        x1,
        x2,
        r1,
        r2,
        r1p,
        r2p,
        q,
        k_total,
        s: Some(s),
        subcase,
    };
    check_decomposition(&decomposition, omega_pp).map_err(fail)?;
    Ok(decomposition)
}

fn check_decomposition(dc: &Claim1Decomposition, omega_pp: &[usize]) -> std::result::Result<(), String> {
    if union(&[&dc.r1p, &dc.r2p]) != dc.x1 {
        return Err("X1 ≠ R1' ∪ R2'".into());
    }
    if union(&[&dc.r1, &dc.r2]) != dc.x2 {
        return Err("X2 ≠ R1 ∪ R2".into());
    }
    if !is_consecutive_run(&[&dc.r1, &dc.r1p, &dc.q, &dc.r2p]) {
        return Err("R1, R1', Q, R2' is not consecutive".into());
    }
    if !dc.r2.is_empty() && dc.r2 != dc.q {
        return Err("R2 is neither empty nor Q".into());
    }
    for &i in &dc.r1p {
        for &j in &dc.r2p {
            if omega_pp[i - 1] != omega_pp[j - 1] + 1 {
                return Err(format!("f''_{i} ≠ f''_{j} + 1"));
            }
        }
    }
    if dc.x1.len() + 2 * dc.x2.len() != 2 * dc.k_total {
        return Err("|X1| + 2|X2| ≠ 2K".into());
    }
    Ok(())
}

/// Picks the pivot `z` for the unbalanced cases: the smallest position of
/// the required parity in `R1'` if `2 d_J(w) ≥ d_F(w)` there, otherwise the
/// smallest such position in `R2'`.
///
/// `j_degrees` and `f_degrees` are indexed by `ω` position minus one. The
/// two candidates have `d_F` differing by one, so one of them always
/// qualifies when `J` is good; if neither does this returns
/// [`Error::InvariantBreach`].
pub fn select_pivot_z(
    decomposition: &Claim1Decomposition,
    j_degrees: &[usize],
    f_degrees: &[usize],
    case: ConstructionCase,
) -> Result<usize> {
    let parity = case.pivot_parity().ok_or_else(|| {
        Error::Precondition("the balanced case has no pivot".into())
    })?;
    let pick = |set: &[usize]| set.iter().copied().find(|&i| i % 2 == parity);
    let qualifies = |i: usize| 2 * j_degrees[i - 1] >= f_degrees[i - 1];
    let x = pick(&decomposition.r1p);
    let y = pick(&decomposition.r2p);
    if let Some(x) = x.filter(|&x| qualifies(x)) {
        return Ok(x);
    }
    if let Some(y) = y.filter(|&y| qualifies(y)) {
        return Ok(y);
    }
    Err(Error::InvariantBreach(format!(
        "no pivot: x = {x:?}, y = {y:?}, d_J = {j_degrees:?}, d_F = {f_degrees:?}, decomposition = {decomposition:?}"
    )))
}

/// Graph under construction, with degrees and parity-bisection degrees
/// indexed by final vertex label.
struct Growing {
    edges: Vec<(usize, usize)>,
    deg: Vec<usize>,
    cross: Vec<usize>,
}

impl Growing {
    fn new(n: usize) -> Self {
        Self {
            edges: Vec::new(),
            deg: vec![0; n + 1],
            cross: vec![0; n + 1],
        }
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        self.edges.push((u, v));
        self.deg[u] += 1;
        self.deg[v] += 1;
        if u % 2 != v % 2 {
            self.cross[u] += 1;
            self.cross[v] += 1;
        }
    }
}

/// One reduction step as stored between the descent and the re-insertion.
struct PendingStep {
    record: StepRecord,
    a_label: usize,
    b_label: usize,
    /// `(ω position, final vertex label)` for every position in `X1 ∪ X2`.
    labels: Vec<(usize, usize)>,
}

impl PendingStep {
    fn label(&self, pos: usize) -> usize {
        let i = self
            .labels
            .binary_search_by_key(&pos, |&(p, _)| p)
            .expect("labels cover X1 ∪ X2");
        self.labels[i].1
    }
}

/// Builds a realization of `π` whose parity bisection is good.
pub fn build_realization(pi: &DegreeSequence) -> Result<RealizationCertificate> {
    build_realization_traced(pi).map(|(cert, _)| cert)
}

/// As [`build_realization`], also returning the per-step records from the
/// outermost step inwards.
pub fn build_realization_traced(
    pi: &DegreeSequence,
) -> Result<(RealizationCertificate, Vec<StepRecord>)> {
    if !is_graphic(pi) {
        return Err(Error::NotGraphic);
    }
    let n = pi.len();
    let root = pi.values();

    // Descent. Positions keep their parity from level to level (two
    // adjacent positions are removed), so `labels[p]` is the final vertex
    // of the current position `p + 1` and shares its parity.
    let mut current: Vec<usize> = root.to_vec();
    let mut labels: Vec<usize> = (1..=n).collect();
    let mut steps: Vec<PendingStep> = Vec::new();
    while current.len() > 2 {
        let len = current.len();
        let ell = current
            .windows(2)
            .position(|w| w[0] == w[1])
            .map(|p| p + 1)
            .ok_or_else(|| breach(&current, 0, "graphic sequence with all entries distinct"))?;
        let k = current[ell - 1];
        let first = lay_off_with_order_slice(&current, ell + 1)
            .map_err(|e| breach(&current, ell, format!("first layoff failed: {e}")))?;
        let pi_p = first.reduced.values();
        let k_total = pi_p[ell - 1];
        let second = lay_off_with_order_slice(pi_p, ell)
            .map_err(|e| breach(&current, ell, format!("second layoff failed: {e}")))?;
        let epsilon = match k - k_total {
            0 => false,
            1 => true,
            _ => return Err(breach(&current, ell, "d'_ℓ differs from k by more than one")),
        };

        let omega: Vec<usize> = current
            .iter()
            .enumerate()
            .filter(|&(p, _)| p + 1 != ell && p + 1 != ell + 1)
            .map(|(_, &x)| x)
            .collect();
        let omega_p: Vec<usize> = pi_p
            .iter()
            .enumerate()
            .filter(|&(p, _)| p + 1 != ell)
            .map(|(_, &x)| x)
            .collect();
        let omega_pp = second.reduced.into_vec();
        let decomposition = claim1_decompose(&omega, &omega_p, &omega_pp, k_total)
            .map_err(|e| breach(&current, ell, e.to_string()))?;

        let (a_pos, b_pos) = if ell % 2 == 1 { (ell, ell + 1) } else { (ell + 1, ell) };
        let a_label = labels[a_pos - 1];
        let b_label = labels[b_pos - 1];
        let next_labels: Vec<usize> = labels
            .iter()
            .enumerate()
            .filter(|&(p, _)| p + 1 != ell && p + 1 != ell + 1)
            .map(|(_, &l)| l)
            .collect();
        let pos_labels: Vec<(usize, usize)> = union(&[&decomposition.x1, &decomposition.x2])
            .into_iter()
            .map(|p| (p, next_labels[p - 1]))
            .collect();

        let count = |set: &[usize], parity: usize| set.iter().filter(|&&i| i % 2 == parity).count();
        let x1_odd = count(&decomposition.x1, 1);
        let x1_even = count(&decomposition.x1, 0);
        let x2_odd = count(&decomposition.x2, 1);
        let x2_even = count(&decomposition.x2, 0);
        let case = match x1_odd as i64 - x1_even as i64 {
            0 => {
                if x2_odd.abs_diff(x2_even) > 1 {
                    return Err(breach(&current, ell, "balanced X1 but X2 parity classes differ by more than one"));
                }
                ConstructionCase::Balanced
            }
            -2 => {
                let diff = x2_even as i64 - x2_odd as i64;
                if !(-2..=-1).contains(&diff) {
                    return Err(breach(&current, ell, format!("even-surplus case with |X2∩I2| - |X2∩I1| = {diff}")));
                }
                ConstructionCase::EvenSurplus
            }
            2 => {
                let diff = x2_even as i64 - x2_odd as i64;
                if !(0..=1).contains(&diff) {
                    return Err(breach(&current, ell, format!("odd-surplus case with |X2∩I2| - |X2∩I1| = {diff}")));
                }
                ConstructionCase::OddSurplus
            }
            other => {
                return Err(breach(&current, ell, format!("|X1∩I1| - |X1∩I2| = {other}")));
            }
        };

        steps.push(PendingStep {
            record: StepRecord {
                n: len,
                ell,
                k,
                epsilon,
                decomposition,
                case,
                pivot: None,
                x1_odd,
                x1_even,
                x2_odd,
                x2_even,
            },
            a_label,
            b_label,
            labels: pos_labels,
        });
        current = omega_pp;
        labels = next_labels;
    }

    // Base graph on the (at most two) surviving labels.
    let mut built = Growing::new(n);
    match current.as_slice() {
        [] | [0] | [0, 0] => {}
        [1, 1] => built.add_edge(labels[0], labels[1]),
        other => return Err(breach(root, 0, format!("base sequence {other:?} is not graphic"))),
    }

    // Re-insertion, innermost step first.
    let mut records = Vec::with_capacity(steps.len());
    for mut step in steps.into_iter().rev() {
        let dc = &step.record.decomposition;
        let case = step.record.case;
        let pivot = match case {
            ConstructionCase::Balanced => None,
            _ => {
                // Degrees of the relevant F vertices, indexed by ω position.
                let len = step.record.n - 2;
                let mut j_deg = vec![0; len];
                let mut f_deg = vec![0; len];
                for &p in dc.r1p.iter().chain(&dc.r2p) {
                    let l = step.label(p);
                    j_deg[p - 1] = built.cross[l];
                    f_deg[p - 1] = built.deg[l];
                }
                Some(
                    select_pivot_z(dc, &j_deg, &f_deg, case)
                        .map_err(|e| breach(root, step.record.ell, e.to_string()))?,
                )
            }
        };
        let mut a_side: Vec<usize> = dc.x2.clone();
        let mut b_side: Vec<usize> = dc.x2.clone();
        for &p in &dc.x1 {
            let to_a = match (p % 2 == 0, pivot == Some(p)) {
                (even, false) => even,
                (even, true) => !even,
            };
            if to_a {
                a_side.push(p);
            } else {
                b_side.push(p);
            }
        }
        let (a, b) = (step.a_label, step.b_label);
        for &p in &a_side {
            built.add_edge(a, step.label(p));
        }
        for &p in &b_side {
            built.add_edge(b, step.label(p));
        }
        if step.record.epsilon {
            built.add_edge(a, b);
        }
        if built.deg[a] != step.record.k || built.deg[b] != step.record.k {
            return Err(breach(
                root,
                step.record.ell,
                format!(
                    "re-inserted vertices have degrees {} and {}, expected {}",
                    built.deg[a], built.deg[b], step.record.k
                ),
            ));
        }
        step.record.pivot = pivot;
        records.push(step.record);
    }
    records.reverse();

    let graph = LabeledGraph::new(n, built.edges)?;
    if graph.degrees() != root {
        return Err(breach(root, 0, "constructed graph does not realize the sequence"));
    }
    let cert = RealizationCertificate::from_graph(graph);
    if !cert.is_ok() {
        return Err(breach(root, 0, format!("parity bisection has negative slack: {:?}", cert.slacks)));
    }
    Ok((cert, records))
}

/// True iff the certificate's graph has `d(v_i) = π_i` for every `i`, its
/// stored bisection is the parity bisection, the stored slacks match a
/// recomputation, and all of them are nonnegative.
pub fn verify_certificate(cert: &RealizationCertificate, pi: &DegreeSequence) -> bool {
    if cert.graph.degrees() != pi.values() {
        return false;
    }
    let parity = parity_bisection(&cert.graph);
    if parity != cert.bisection {
        return false;
    }
    let slacks = bisection_slack(&cert.graph, &parity);
    slacks == cert.slacks && slacks.iter().all(|&s| s >= 0)
}
