//! Degree-sequence tests and realizers checked against exhaustive enumeration.

use std::collections::HashSet;

use treecover::oracle::{enumerate_digraphs, enumerate_graphs};
use treecover::{erdos_gallai, fulkerson_chen_anstee, havel_hakimi, kleitman_wang};

/// All sequences of length `n` with entries in `0..=max`.
fn sequences(n: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..=max).map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

fn pair_sequences(n: usize, max: usize) -> Vec<Vec<(usize, usize)>> {
    sequences(2 * n, max)
        .into_iter()
        .map(|flat| flat.chunks(2).map(|c| (c[0], c[1])).collect())
        .collect()
}

#[test]
fn erdos_gallai_matches_enumeration_up_to_six_vertices() {
    for n in 0..=6 {
        let realized: HashSet<Vec<usize>> = enumerate_graphs(n).unwrap().map(|g| g.degree_sequence()).collect();
        let max = n.saturating_sub(1) + 1;
        let mut accepted = 0;
        for d in sequences(n, max) {
            let ok = erdos_gallai(&d).is_ok();
            assert_eq!(ok, realized.contains(&d), "n = {n}, d = {d:?}");
            if ok {
                accepted += 1;
                assert_eq!(havel_hakimi(&d).unwrap().degree_sequence(), d);
            }
        }
        assert_eq!(accepted, realized.len(), "n = {n}");
    }
}

#[test]
fn fulkerson_chen_anstee_matches_enumeration_up_to_four_vertices() {
    for n in 0..=4 {
        let realized: HashSet<Vec<(usize, usize)>> = enumerate_digraphs(n).unwrap().map(|d| d.bidegrees()).collect();
        for p in pair_sequences(n, 3) {
            let ok = fulkerson_chen_anstee(&p).is_ok();
            assert_eq!(ok, realized.contains(&p), "n = {n}, pairs = {p:?}");
            if ok {
                assert_eq!(kleitman_wang(&p).unwrap().bidegrees(), p);
            }
        }
    }
}

#[test]
fn every_harvested_bidegree_sequence_is_accepted_and_realized() {
    for d in enumerate_digraphs(4).unwrap() {
        let p = d.bidegrees();
        assert_eq!(fulkerson_chen_anstee(&p), Ok(()), "{p:?}");
        let built = kleitman_wang(&p).unwrap();
        assert_eq!(built.bidegrees(), p);
        assert!(built.arcs().all(|(u, v)| u != v));
    }
}

#[test]
fn doubly_oriented_triangle() {
    let p = [(2, 2), (2, 2), (2, 2)];
    let exists = enumerate_digraphs(3).unwrap().any(|d| d.bidegrees() == p);
    assert!(exists);
    assert!(fulkerson_chen_anstee(&p).is_ok());
}

#[test]
fn sequence_3331_has_no_graph() {
    assert!(!enumerate_graphs(4)
        .unwrap()
        .any(|g| g.degree_sequence() == [3, 3, 3, 1]));
    assert!(erdos_gallai(&[3, 3, 3, 1]).is_err());
}

#[test]
fn havel_hakimi_on_six_vertex_example() {
    let d = [3, 3, 2, 2, 1, 1];
    assert!(enumerate_graphs(6).unwrap().any(|g| g.degree_sequence() == d));
    assert_eq!(havel_hakimi(&d).unwrap().degree_sequence(), d);
}
