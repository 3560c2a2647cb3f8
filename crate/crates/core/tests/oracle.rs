//! Cross-checks against the exhaustive oracles on the small-graph corpus.

mod common;

use std::collections::BTreeSet;

use fatchroma_core::graph::emit_graph6;
use fatchroma_core::solver::{
    brute_force_fat_colorings, candidate_alphas, fat_spectrum, SolveOptions,
};

#[test]
fn corpus_has_every_isomorphism_class() {
    let counts: Vec<usize> = (1..=6)
        .map(|n| common::nonisomorphic_graphs(n).len())
        .collect();
    assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
}

#[test]
fn candidate_alphas_cover_every_witness() {
    for g in common::oracle_corpus()
        .iter()
        .filter(|g| !g.is_edgeless() && g.vertex_count() <= 8)
    {
        for w in brute_force_fat_colorings(g).unwrap() {
            if w.k() < 2 {
                continue;
            }
            let alphas = candidate_alphas(g, w.k()).unwrap();
            assert!(
                alphas.contains(&w.alpha()),
                "{}: alpha {} missing from {alphas:?} at k = {}",
                emit_graph6(g),
                w.alpha(),
                w.k()
            );
            assert!(alphas.windows(2).all(|p| p[0] < p[1]));
        }
    }
}

#[test]
fn spectrum_matches_enumeration() {
    for g in common::oracle_corpus()
        .iter()
        .filter(|g| g.vertex_count() <= 7)
    {
        let expected: BTreeSet<usize> = brute_force_fat_colorings(g)
            .unwrap()
            .iter()
            .map(|w| w.k())
            .collect();
        let s = fat_spectrum(g, &SolveOptions::default()).unwrap();
        let got: BTreeSet<usize> = s.feasible.keys().copied().collect();
        assert_eq!(got, expected, "{}", emit_graph6(g));
    }
}
