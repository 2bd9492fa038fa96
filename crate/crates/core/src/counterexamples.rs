//! Graphs made of three disjoint odd cliques whose every bipartition has a
//! side with more than `C(n,2) + 5n/48` edges, where the graph has
//! `C(2n,2)` edges.
//!
//! The admissible clique sizes come from the integer pairs `(n_i, t_i)` with
//! `n_i(n_i-1) = 3t_i(t_i-1)`, generated by the recurrence
//! `x_{i+1} = 4x_i - x_{i-1} - 1` from `(36, 21)` and `(133, 77)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::LabeledGraph;

/// Largest clique size accepted by [`min_max_side`].
pub const ENUMERATION_CAP: u64 = 2000;

/// Consecutive pairs `(n_i, t_i)` of the recurrence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairSeq {
    pub pairs: Vec<(BigInt, BigInt)>,
}

/// `n(n-1) - 3t(t-1)`.
pub fn alpha(n: &BigInt, t: &BigInt) -> BigInt {
    n * (n - 1) - 3 * t * (t - 1)
}

/// `2n n' - n - n' - 6t t' + 3t + 3t' + 1` for consecutive pairs.
pub fn beta(cur: &(BigInt, BigInt), prev: &(BigInt, BigInt)) -> BigInt {
    let (n, t) = cur;
    let (np, tp) = prev;
    2 * n * np - n - np - 6 * t * tp + 3 * t + 3 * tp + 1
}

fn seven_twelfths_ok(n: &BigInt, t: &BigInt) -> bool {
    12 * t <= 7 * n
}

/// The first `count` pairs, each checked for `α = 0`, `β = 0` and
/// `t ≤ 7n/12`.
pub fn pair_sequence(count: usize) -> Result<PairSeq> {
    if count == 0 {
        return Err(Error::Precondition("count must be at least 1".into()));
    }
    let mut pairs = vec![(BigInt::from(36), BigInt::from(21)), (BigInt::from(133), BigInt::from(77))];
    while pairs.len() < count {
        let (cur, prev) = (&pairs[pairs.len() - 1], &pairs[pairs.len() - 2]);
        let next = (4 * &cur.0 - &prev.0 - 1, 4 * &cur.1 - &prev.1 - 1);
        pairs.push(next);
    }
    pairs.truncate(count);
    for (i, p) in pairs.iter().enumerate() {
        if !alpha(&p.0, &p.1).is_zero() {
            return Err(Error::InvariantBreach(format!("α_{i} ≠ 0 at {p:?}")));
        }
        if i > 0 && !beta(p, &pairs[i - 1]).is_zero() {
            return Err(Error::InvariantBreach(format!("β_{i} ≠ 0 at {p:?}")));
        }
        if !seven_twelfths_ok(&p.0, &p.1) {
            return Err(Error::InvariantBreach(format!("t > 7n/12 at index {i}")));
        }
    }
    Ok(PairSeq { pairs })
}

/// Whether index `i` has the expected parities: `n_i` even iff
/// `i ≡ 0, 3 (mod 4)`, `t_i` odd iff `i ≡ 0, 1 (mod 4)`.
pub fn parity_matches(i: usize, n: &BigInt, t: &BigInt) -> bool {
    n.is_even() == matches!(i % 4, 0 | 3) && t.is_odd() == matches!(i % 4, 0 | 1)
}

/// An even `a` and odd `b` with `3b(b-1) = a(a-1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbPair {
    #[serde(serialize_with = "as_string")]
    pub a: BigInt,
    #[serde(serialize_with = "as_string")]
    pub b: BigInt,
}

fn as_string<S: serde::Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

impl AbPair {
    pub fn new(a: BigInt, b: BigInt) -> Result<Self> {
        if 3 * &b * (&b - 1) != &a * (&a - 1) {
            return Err(Error::InvalidWitness(format!("3b(b-1) ≠ a(a-1) for ({a}, {b})")));
        }
        if a.is_odd() || b.is_even() {
            return Err(Error::InvalidWitness(format!("({a}, {b}) needs a even and b odd")));
        }
        Ok(Self { a, b })
    }
}

/// `(a_j, b_j) = (n_{4j}, t_{4j})` for `j < count`.
pub fn ab_pairs(count: usize) -> Result<Vec<AbPair>> {
    if count == 0 {
        return Err(Error::Precondition("count must be at least 1".into()));
    }
    let seq = pair_sequence(4 * (count - 1) + 1)?;
    for (i, (n, t)) in seq.pairs.iter().enumerate() {
        if !parity_matches(i, n, t) {
            return Err(Error::InvariantBreach(format!("parity pattern broken at index {i}")));
        }
    }
    seq.pairs
        .into_iter()
        .step_by(4)
        .map(|(n, t)| AbPair::new(n, t))
        .collect()
}

/// Three disjoint copies of `K_t` on vertices `1..=3t`, clique `j` on
/// `jt+1..=(j+1)t`.
pub fn triple_clique(t: usize) -> Result<LabeledGraph> {
    if t.is_multiple_of(2) {
        return Err(Error::Precondition(format!("t = {t} must be odd")));
    }
    let edges = (0..3).flat_map(|j| {
        let base = j * t;
        (1..=t).flat_map(move |u| (u + 1..=t).map(move |v| (base + u, base + v)))
    });
    LabeledGraph::new(3 * t, edges)
}

/// Smallest possible `max(e(V₁), e(V₂))` for the triple clique, with the
/// per-clique counts on the larger side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MinMaxSide {
    pub value: u64,
    pub counts: (u64, u64, u64),
}

fn c2(x: u64) -> u64 {
    x * x.saturating_sub(1) / 2
}

/// Exact minimum of `max(e(V₁), e(V₂))` over all bipartitions of the triple
/// clique on `K_t`.
///
/// By symmetry `V₁` is taken to be the larger side and its per-clique
/// counts `a ≥ b ≥ c`; the reported counts are the lexicographically least
/// such triple attaining the minimum.
pub fn min_max_side(t: u64) -> Result<MinMaxSide> {
    min_max_side_with_cap(t, ENUMERATION_CAP)
}

pub fn min_max_side_with_cap(t: u64, cap: u64) -> Result<MinMaxSide> {
    if t == 0 {
        return Err(Error::Precondition("t must be at least 1".into()));
    }
    if t > cap {
        return Err(Error::Refused(format!("t = {t} exceeds the enumeration cap {cap}")));
    }
    let half = (3 * t).div_ceil(2);
    let eval = |a: u64, b: u64, c: u64| {
        let e1 = c2(a) + c2(b) + c2(c);
        let e2 = c2(t - a) + c2(t - b) + c2(t - c);
        e1.max(e2)
    };
    (0..=t)
        .into_par_iter()
        .filter_map(|a| {
            let mut best: Option<(u64, (u64, u64, u64))> = None;
            for b in 0..=a {
                let lo = half.saturating_sub(a + b);
                if lo > b {
                    continue;
                }
                // e(V₁) grows and e(V₂) shrinks with c: the optimum sits
                // at the first c where e(V₁) ≥ e(V₂), or just before it.
                let (mut l, mut r) = (lo, b + 1);
                while l < r {
                    let mid = (l + r) / 2;
                    let e1 = c2(a) + c2(b) + c2(mid);
                    let e2 = c2(t - a) + c2(t - b) + c2(t - mid);
                    if e1 >= e2 {
                        r = mid;
                    } else {
                        l = mid + 1;
                    }
                }
                for c in [l.saturating_sub(1), l] {
                    if c < lo || c > b {
                        continue;
                    }
                    let cand = (eval(a, b, c), (a, b, c));
                    if best.is_none_or(|x| cand < x) {
                        best = Some(cand);
                    }
                }
            }
            best
        })
        .min()
        .map(|(value, counts)| MinMaxSide { value, counts })
        .ok_or_else(|| Error::InvariantBreach("no bipartition enumerated".into()))
}

/// Which kind of evidence backs a verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evidence {
    /// The exact minimum was enumerated.
    Enumerated { value: u64 },
    /// Checked through the chain
    /// `(3t²-4t+1)/8 = (4n²-2n-t+1)/8 ≥ C(n,2) + 5n/48` with `t ≤ 7n/6`.
    Algebraic { lower: BigRational },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub bound: BigRational,
    pub evidence: Evidence,
}

/// `C(p,2) + C(q,2) - C(p-1,2) - C(q+1,2)`, which equals `p - q - 1`.
pub fn binomial_exchange_gain(p: &BigInt, q: &BigInt) -> BigInt {
    let c = |x: &BigInt| x * (x - 1) / 2;
    c(p) + c(q) - c(&(p - 1)) - c(&(q + 1))
}

/// Checks that the triple clique on `K_b` has no bipartition with both
/// sides at most `C(a/2, 2) + 5(a/2)/48` edges.
pub fn verify_thm_2n(pair: &AbPair) -> Result<Verdict> {
    verify_thm_2n_with_cap(pair, ENUMERATION_CAP)
}

pub fn verify_thm_2n_with_cap(pair: &AbPair, cap: u64) -> Result<Verdict> {
    let pair = AbPair::new(pair.a.clone(), pair.b.clone())?;
    let n = &pair.a / 2;
    let t = &pair.b;
    let r = |x: BigInt| BigRational::from_integer(x);
    let bound = r(&n * (&n - 1) / 2) + BigRational::new(5 * &n, BigInt::from(48));
    if let Some(tt) = u64::try_from(t).ok().filter(|&x| x <= cap) {
        let found = min_max_side_with_cap(tt, cap)?;
        return Ok(Verdict {
            holds: r(BigInt::from(found.value)) >= bound,
            bound,
            evidence: Evidence::Enumerated { value: found.value },
        });
    }
    let eight = BigInt::from(8);
    let half_up = (t + 1) / 2;
    let half_down = (t - 1) / 2;
    let c = |x: &BigInt| x * (x - 1) / 2;
    let balanced = r(2 * c(&half_up) + c(&half_down));
    let lower = BigRational::new(3 * t * t - 4 * t + 1, eight.clone());
    let via_n = BigRational::new(4 * &n * &n - 2 * &n - t + 1, eight);
    let holds = balanced == lower
        && lower == via_n
        && 6 * t <= 7 * &n
        && via_n >= bound
        && binomial_exchange_gain(&half_up, &(&half_down - 1)).is_one();
    Ok(Verdict {
        holds,
        bound,
        evidence: Evidence::Algebraic { lower },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational_string;

    fn pair(n: i64, t: i64) -> (BigInt, BigInt) {
        (BigInt::from(n), BigInt::from(t))
    }

    #[test]
    fn first_pairs() {
        let s = pair_sequence(2).unwrap();
        assert_eq!(s.pairs, vec![pair(36, 21), pair(133, 77)]);
        let s = pair_sequence(5).unwrap();
        assert_eq!(s.pairs[2], pair(495, 286));
        assert_eq!(s.pairs[4], pair(6888, 3977));
        assert!(pair_sequence(0).is_err());
    }

    #[test]
    fn beta_one_is_zero() {
        assert!(beta(&pair(133, 77), &pair(36, 21)).is_zero());
        assert!(!beta(&pair(133, 77), &pair(36, 20)).is_zero());
    }

    #[test]
    fn ab_examples() {
        let p = ab_pairs(2).unwrap();
        assert_eq!((p[0].a.clone(), p[0].b.clone()), pair(36, 21));
        assert_eq!((p[1].a.clone(), p[1].b.clone()), pair(6888, 3977));
        assert!(AbPair::new(BigInt::from(36), BigInt::from(20)).is_err());
        assert!(AbPair::new(BigInt::from(1), BigInt::from(1)).is_err());
    }

    #[test]
    fn triple_clique_sizes() {
        let g = triple_clique(21).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (63, 630));
        let g = triple_clique(1).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (3, 0));
        let g = triple_clique(3).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (9, 9));
        assert!(triple_clique(4).is_err());
    }

    #[test]
    fn min_max_side_examples() {
        let r = min_max_side(21).unwrap();
        assert_eq!(r.value, 155);
        assert_eq!(r.counts, (11, 11, 10));
        assert_eq!(min_max_side(1).unwrap().value, 0);
        // t = 3: counts (2,1,1) or similar give e₁ = 1, e₂ = 1 + 1 + 0.
        assert_eq!(min_max_side(3).unwrap().value, 2);
        assert!(min_max_side(2001).is_err());
    }

    #[test]
    fn min_max_side_matches_brute_force() {
        for t in 1..=25u64 {
            let mut best = u64::MAX;
            for a in 0..=t {
                for b in 0..=t {
                    for c in 0..=t {
                        let e1 = c2(a) + c2(b) + c2(c);
                        let e2 = c2(t - a) + c2(t - b) + c2(t - c);
                        best = best.min(e1.max(e2));
                    }
                }
            }
            assert_eq!(min_max_side(t).unwrap().value, best, "t = {t}");
        }
    }

    #[test]
    fn verdicts() {
        let p = ab_pairs(2).unwrap();
        let v = verify_thm_2n(&p[0]).unwrap();
        assert!(v.holds);
        assert_eq!(v.evidence, Evidence::Enumerated { value: 155 });
        assert_eq!(rational_string(&v.bound), "1239/8");
        let v = verify_thm_2n(&p[1]).unwrap();
        assert!(v.holds);
        assert!(matches!(v.evidence, Evidence::Algebraic { .. }));
        // Forcing the algebraic route on the first pair agrees.
        assert!(verify_thm_2n_with_cap(&p[0], 0).unwrap().holds);
        let bad = AbPair { a: BigInt::from(36), b: BigInt::from(19) };
        assert!(verify_thm_2n(&bad).is_err());
    }

    #[test]
    fn exchange_gain() {
        assert_eq!(binomial_exchange_gain(&BigInt::from(7), &BigInt::from(3)), BigInt::from(3));
    }
}
