//! The integer pairs and the triple-clique bound over many terms.

use judicious::counterexamples::{
    ab_pairs, alpha, beta, min_max_side, pair_sequence, parity_matches, triple_clique, verify_thm_2n, Evidence,
};
use num_bigint::BigInt;
use num_rational::BigRational;

#[test]
fn recurrence_invariants_over_many_terms() {
    let s = pair_sequence(40).unwrap();
    for (i, p) in s.pairs.iter().enumerate() {
        assert_eq!(alpha(&p.0, &p.1), BigInt::from(0));
        if i > 0 {
            assert_eq!(beta(p, &s.pairs[i - 1]), BigInt::from(0));
        }
        assert!(parity_matches(i, &p.0, &p.1), "index {i}");
        assert!(12 * &p.1 <= 7 * &p.0);
    }
    // Later terms are far beyond 64 bits.
    assert!(s.pairs[39].0 > BigInt::from(u64::MAX));
}

#[test]
fn every_ab_pair_verifies() {
    let pairs = ab_pairs(6).unwrap();
    for (j, p) in pairs.iter().enumerate() {
        let v = verify_thm_2n(p).unwrap();
        assert!(v.holds, "pair {j}");
        if j == 0 {
            assert!(matches!(v.evidence, Evidence::Enumerated { .. }));
        } else {
            assert!(matches!(v.evidence, Evidence::Algebraic { .. }));
        }
    }
}

#[test]
fn min_max_side_respects_the_balanced_lower_bound() {
    for t in (3..=99u64).step_by(2) {
        let r = min_max_side(t).unwrap();
        let lower = BigRational::new(BigInt::from(3 * t * t - 4 * t + 1), BigInt::from(8));
        assert!(BigRational::from_integer(BigInt::from(r.value)) >= lower, "t = {t}");
        let (a, b, c) = r.counts;
        assert!(a >= b && b >= c && a + b + c >= (3 * t).div_ceil(2));
    }
}

#[test]
fn min_max_side_matches_graph_enumeration_for_small_cliques() {
    // Small enough to scan every bipartition of the actual graph.
    for t in [1usize, 3, 5, 7] {
        let g = triple_clique(t).unwrap();
        let by_counts = min_max_side(t as u64).unwrap().value;
        let n = g.vertex_count();
        let mut best = u64::MAX;
        for mask in 0u64..1 << (n - 1) {
            let (mut e1, mut e2) = (0, 0);
            for &(u, v) in g.edges() {
                match (mask >> (u - 1) & 1, mask >> (v - 1) & 1) {
                    (0, 0) => e1 += 1,
                    (1, 1) => e2 += 1,
                    _ => {}
                }
            }
            best = best.min(u64::max(e1, e2));
        }
        assert_eq!(by_counts, best, "t = {t}");
    }
}
