//! Exact chromatic number: DSATUR branch and bound, seeded with a greedy
//! DSATUR coloring (upper bound) and a greedy clique (lower bound).

use std::time::Instant;

use serde::Serialize;

use crate::graph::{Graph, Vertex};

const CHECK_EVERY: u64 = 1 << 12;

/// A proper vertex coloring with colors `0..k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ProperColoring {
    pub k: usize,
    pub colors: Vec<usize>,
}

impl ProperColoring {
    /// Every edge joins different colors and every color is below `k`.
    pub fn is_proper_for(&self, g: &Graph) -> bool {
        self.colors.len() == g.vertex_count()
            && self.colors.iter().all(|&c| c < self.k)
            && g.edges().all(|(u, v)| self.colors[u] != self.colors[v])
    }
}

/// Greedy clique grown from each vertex in turn; returns the largest found.
pub(crate) fn greedy_clique(g: &Graph) -> Vec<Vertex> {
    let mut by_degree: Vec<Vertex> = g.vertices().collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut best: Vec<Vertex> = Vec::new();
    for &seed in &by_degree {
        if g.degree(seed) < best.len() {
            break;
        }
        let mut clique = vec![seed];
        for &v in &by_degree {
            if v != seed && clique.iter().all(|&u| g.has_edge(u, v)) {
                clique.push(v);
            }
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

struct Dsatur<'g> {
    g: &'g Graph,
    /// Colors available to the current branch.
    width: usize,
    colors: Vec<usize>,
    /// `adjacent[v * width + c]`: neighbors of `v` that currently have color `c`.
    adjacent: Vec<u32>,
    saturation: Vec<usize>,
}

const NONE: usize = usize::MAX;

impl<'g> Dsatur<'g> {
    fn new(g: &'g Graph, width: usize) -> Self {
        let n = g.vertex_count();
        Dsatur {
            g,
            width,
            colors: vec![NONE; n],
            adjacent: vec![0; n * width],
            saturation: vec![0; n],
        }
    }

    /// Uncolored vertex of maximum saturation, then maximum degree, then
    /// smallest index.
    fn pick(&self) -> Option<Vertex> {
        self.g
            .vertices()
            .filter(|&v| self.colors[v] == NONE)
            .max_by_key(|&v| (self.saturation[v], self.g.degree(v), std::cmp::Reverse(v)))
    }

    fn is_free(&self, v: Vertex, c: usize) -> bool {
        self.adjacent[v * self.width + c] == 0
    }

    fn set(&mut self, v: Vertex, c: usize) {
        self.colors[v] = c;
        for &w in self.g.neighbors(v) {
            let slot = &mut self.adjacent[w * self.width + c];
            if *slot == 0 {
                self.saturation[w] += 1;
            }
            *slot += 1;
        }
    }

    fn clear(&mut self, v: Vertex, c: usize) {
        self.colors[v] = NONE;
        for &w in self.g.neighbors(v) {
            let slot = &mut self.adjacent[w * self.width + c];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[w] -= 1;
            }
        }
    }
}

/// Greedy DSATUR coloring.
pub(crate) fn greedy_coloring(g: &Graph) -> ProperColoring {
    let n = g.vertex_count();
    let mut state = Dsatur::new(g, n.max(1));
    let mut k = 0;
    while let Some(v) = state.pick() {
        let c = (0..n)
            .find(|&c| state.is_free(v, c))
            .expect("n colors always suffice");
        state.set(v, c);
        k = k.max(c + 1);
    }
    ProperColoring {
        k,
        colors: state.colors,
    }
}

pub(crate) struct BranchAndBound<'g> {
    state: Dsatur<'g>,
    lower: usize,
    pub best: ProperColoring,
    pub nodes: u64,
    deadline: Option<Instant>,
}

pub(crate) enum BnbResult {
    Optimal,
    TimedOut,
}

impl<'g> BranchAndBound<'g> {
    pub fn new(g: &'g Graph, deadline: Option<Instant>) -> Self {
        let best = greedy_coloring(g);
        let lower = greedy_clique(g).len();
        BranchAndBound {
            state: Dsatur::new(g, best.k.max(1)),
            lower,
            best,
            nodes: 0,
            deadline,
        }
    }

    pub fn lower(&self) -> usize {
        self.lower
    }

    pub fn run(&mut self) -> BnbResult {
        if self.best.k <= self.lower {
            return BnbResult::Optimal;
        }
        match self.descend(0) {
            Ok(()) => BnbResult::Optimal,
            Err(()) => BnbResult::TimedOut,
        }
    }

    /// Explores colorings that would use fewer than `best.k` colors.
    fn descend(&mut self, used: usize) -> Result<(), ()> {
        if used >= self.best.k {
            return Ok(());
        }
        self.nodes += 1;
        if self.nodes.is_multiple_of(CHECK_EVERY)
            && self.deadline.is_some_and(|d| Instant::now() >= d)
        {
            return Err(());
        }
        let Some(v) = self.state.pick() else {
            self.best = ProperColoring {
                k: used,
                colors: self.state.colors.clone(),
            };
            return Ok(());
        };
        for c in 0..=used {
            if c + 1 >= self.best.k || self.best.k <= self.lower {
                break;
            }
            if c < used && !self.state.is_free(v, c) {
                continue;
            }
            self.state.set(v, c);
            let res = self.descend(used.max(c + 1));
            self.state.clear(v, c);
            res?;
        }
        Ok(())
    }
}
