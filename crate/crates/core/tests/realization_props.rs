//! Exhaustive and randomized checks of graphicality and of the parity-good
//! realization builder.

use std::collections::BTreeSet;

use judicious::degseq::{is_graphic, lay_off, lay_off_with_order, DegreeSequence};
use judicious::realization::{build_realization, build_realization_traced, verify_certificate, ConstructionCase};
use proptest::prelude::*;

/// Degree sequences of every labeled graph on `n` vertices (brute force).
fn graphic_by_enumeration(n: usize) -> BTreeSet<Vec<usize>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut out = BTreeSet::new();
    for mask in 0u64..(1 << pairs.len()) {
        let mut deg = vec![0; n];
        for (b, &(u, v)) in pairs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                deg[u] += 1;
                deg[v] += 1;
            }
        }
        deg.sort_unstable_by(|a, b| b.cmp(a));
        out.insert(deg);
    }
    out
}

/// All nonincreasing sequences of length `n` with entries in `0..n`.
fn candidate_sequences(n: usize) -> Vec<Vec<usize>> {
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

#[test]
fn is_graphic_matches_enumeration_up_to_seven() {
    for n in 0..=7 {
        let truth = graphic_by_enumeration(n);
        for cand in candidate_sequences(n) {
            let seq = DegreeSequence::new(cand.clone()).unwrap();
            assert_eq!(is_graphic(&seq), truth.contains(&cand), "{cand:?}");
            if is_graphic(&seq) {
                assert_eq!(seq.sum() % 2, 0);
            }
        }
    }
    // Entries beyond n - 1 are never graphic.
    assert!(!is_graphic(&DegreeSequence::new(vec![4, 1, 1, 1]).unwrap()));
}

#[test]
fn every_graphic_sequence_up_to_seven_is_realized() {
    let mut seen_cases = BTreeSet::new();
    for n in 0..=7 {
        for pi in graphic_by_enumeration(n) {
            let pi = DegreeSequence::new(pi).unwrap();
            let (cert, steps) = build_realization_traced(&pi).unwrap();
            assert!(verify_certificate(&cert, &pi), "{pi:?}");
            for s in &steps {
                let dc = &s.decomposition;
                assert_eq!(dc.x1.len() + 2 * dc.x2.len(), 2 * dc.k_total);
                assert_eq!(s.epsilon, dc.k_total + 1 == s.k);
                let diff = s.x1_odd as i64 - s.x1_even as i64;
                assert!([-2, 0, 2].contains(&diff));
                let x2diff = s.x2_even as i64 - s.x2_odd as i64;
                match s.case {
                    ConstructionCase::Balanced => assert!(x2diff.abs() <= 1),
                    ConstructionCase::EvenSurplus => assert!((-2..=-1).contains(&x2diff)),
                    ConstructionCase::OddSurplus => assert!((0..=1).contains(&x2diff)),
                }
                seen_cases.insert(format!("{:?}/{:?}", s.case, dc.subcase));
            }
        }
    }
    // The small sequences already exercise all three wiring cases.
    for case in ["Balanced", "EvenSurplus", "OddSurplus"] {
        assert!(seen_cases.iter().any(|c| c.starts_with(case)), "{case} never seen: {seen_cases:?}");
    }
}

fn random_graphic(max_n: usize) -> impl Strategy<Value = Vec<usize>> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut deg = vec![0; n];
            let mut b = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[b] {
                        deg[u] += 1;
                        deg[v] += 1;
                    }
                    b += 1;
                }
            }
            deg.sort_unstable_by(|a, b| b.cmp(a));
            deg
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn realization_is_certified(pi in random_graphic(16)) {
        let pi = DegreeSequence::new(pi).unwrap();
        let cert = build_realization(&pi).unwrap();
        prop_assert!(verify_certificate(&cert, &pi));
    }

    #[test]
    fn ordered_layoff_is_a_sorted_permutation(pi in random_graphic(12), pick in any::<prop::sample::Index>()) {
        let seq = DegreeSequence::new(pi).unwrap();
        let i = pick.index(seq.len()) + 1;
        let plain = lay_off(&seq, i);
        let ordered = lay_off_with_order(&seq, i);
        match (plain, ordered) {
            (Ok(mut p), Ok(o)) => {
                p.sort_unstable_by(|a, b| b.cmp(a));
                prop_assert_eq!(p, o.reduced.values().to_vec());
                prop_assert_eq!(o.affected.len(), seq.get(i));
                prop_assert!(!o.affected.contains(&i));
            }
            (Err(_), Err(_)) => {}
            (p, o) => prop_assert!(false, "disagreement: {:?} vs {:?}", p, o),
        }
    }
}
