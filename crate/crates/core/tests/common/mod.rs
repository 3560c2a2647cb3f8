#![allow(dead_code)]

use fatchroma_core::Graph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const CORPUS_SEED: u64 = 0x00fa_7c01;

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, left: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..left.len() {
            let v = left.remove(i);
            prefix.push(v);
            go(prefix, left, out);
            prefix.pop();
            left.insert(i, v);
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut (0..n).collect(), &mut out);
    out
}

/// One representative of every isomorphism class of graphs on `n` vertices,
/// found by marking the orbit of each unseen edge mask under all vertex
/// permutations.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    let pairs = pairs(n);
    let index = |u: usize, v: usize| {
        pairs
            .iter()
            .position(|&p| p == (u.min(v), u.max(v)))
            .unwrap()
    };
    let perms = permutations(n);
    // image of each pair bit under each permutation
    let maps: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| pairs.iter().map(|&(u, v)| index(p[u], p[v])).collect())
        .collect();
    let total = 1usize << pairs.len();
    let mut seen = vec![false; total];
    let mut out = Vec::new();
    for mask in 0..total {
        if seen[mask] {
            continue;
        }
        for map in &maps {
            let mut image = 0usize;
            for (bit, &target) in map.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    image |= 1 << target;
                }
            }
            seen[image] = true;
        }
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &e)| e);
        out.push(Graph::from_edges(n, edges).unwrap());
    }
    out
}

/// Uniform `G(n, m)`: `m` distinct edges out of all pairs.
pub fn gnm(rng: &mut impl Rng, n: usize, m: usize) -> Graph {
    let mut all = pairs(n);
    all.shuffle(rng);
    all.truncate(m);
    Graph::from_edges(n, all).unwrap()
}

/// `count` seeded random graphs with `n` in `lo..=hi` and `m` uniform in
/// `0..=C(n, 2)`.
pub fn random_graphs(seed: u64, count: usize, lo: usize, hi: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(lo..=hi);
            let m = rng.gen_range(0..=n * (n - 1) / 2);
            gnm(&mut rng, n, m)
        })
        .collect()
}

/// Every non-isomorphic graph on 1..=6 vertices plus 200 random graphs on
/// 7..=9 vertices.
pub fn oracle_corpus() -> Vec<Graph> {
    let mut corpus: Vec<Graph> = (1..=6).flat_map(nonisomorphic_graphs).collect();
    corpus.extend(random_graphs(CORPUS_SEED, 200, 7, 9));
    corpus
}

/// Seeded simple `d`-regular graph on `n` vertices by stub pairing with
/// rejection of loops and multi-edges.
pub fn random_regular(seed: u64, n: usize, d: usize) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
        stubs.shuffle(&mut rng);
        let pairs: Vec<(usize, usize)> = stubs.chunks(2).map(|c| (c[0], c[1])).collect();
        if pairs.iter().any(|&(a, b)| a == b) {
            continue;
        }
        let g = Graph::from_edges(n, pairs.iter().copied()).unwrap();
        if g.edge_count() == pairs.len() {
            return g;
        }
    }
}
