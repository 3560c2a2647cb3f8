//! Backtracking search for a FAT k-coloring with fixed `alpha > 0`.
//!
//! Each vertex `v` has two integer targets: `own[v] = beta * deg(v)` neighbors
//! in its own block and `other[v] = alpha * deg(v)` in every other block. The
//! search keeps, for every vertex, the number of already-placed neighbors in
//! each block, and rejects a placement as soon as some count exceeds its
//! target. Since `own + (k - 1) * other = deg`, a fully placed neighborhood
//! with no count above target meets every target exactly.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use crate::graph::{Graph, Vertex};
use crate::rational::Rational;

const UNASSIGNED: usize = usize::MAX;
const CHECK_EVERY: u64 = 1 << 12;

/// Cooperative stop signal shared by the searches of one `(k, alphas)` batch.
pub(crate) struct Control<'a> {
    pub deadline: Option<Instant>,
    /// Smallest branch index that has found a witness, or `usize::MAX`.
    pub best: &'a AtomicUsize,
    /// Abort on any success (true) or only on a success at a lower index.
    pub first_wins: bool,
}

impl Control<'_> {
    fn should_stop(&self, index: usize) -> Option<Stop> {
        let best = self.best.load(Ordering::Relaxed);
        if best != usize::MAX && (self.first_wins || best < index) {
            return Some(Stop::Cancelled);
        }
        if self.deadline.is_some_and(|d| Instant::now() >= d) {
            return Some(Stop::TimedOut);
        }
        None
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Stop {
    Cancelled,
    TimedOut,
}

#[derive(Debug)]
pub(crate) enum SearchResult {
    /// Block label of every vertex.
    Found(Vec<usize>),
    Exhausted,
    Stopped(Stop),
}

pub(crate) struct FatSearch<'g> {
    g: &'g Graph,
    k: usize,
    own: Vec<usize>,
    other: Vec<usize>,
    order: Vec<Vertex>,
    assign: Vec<usize>,
    counts: Vec<usize>,
    pub nodes: u64,
}

impl<'g> FatSearch<'g> {
    /// `alpha` must come from `candidate_alphas`, so both targets are integers.
    pub fn new(g: &'g Graph, k: usize, alpha: Rational) -> Self {
        let beta = Rational::ONE
            .checked_sub(alpha.scale(k as u64 - 1))
            .expect("alpha <= 1/(k-1)");
        let n = g.vertex_count();
        let degree = |v: Vertex| g.degree(v) as u64;
        let own = g
            .vertices()
            .map(|v| beta.times(degree(v)).expect("integral own target") as usize)
            .collect();
        let other = g
            .vertices()
            .map(|v| alpha.times(degree(v)).expect("integral other target") as usize)
            .collect();
        let order = search_order(g);
        FatSearch {
            g,
            k,
            own,
            other,
            order,
            assign: vec![UNASSIGNED; n],
            counts: vec![0; n * k],
            nodes: 0,
        }
    }

    pub fn run(&mut self, index: usize, control: &Control<'_>) -> SearchResult {
        match self.descend(0, 0, index, control) {
            Ok(true) => SearchResult::Found(self.assign.clone()),
            Ok(false) => SearchResult::Exhausted,
            Err(stop) => SearchResult::Stopped(stop),
        }
    }

    fn descend(
        &mut self,
        depth: usize,
        used: usize,
        index: usize,
        control: &Control<'_>,
    ) -> Result<bool, Stop> {
        let n = self.order.len();
        if depth == n {
            return Ok(used == self.k);
        }
        self.nodes += 1;
        if self.nodes.is_multiple_of(CHECK_EVERY) {
            if let Some(stop) = control.should_stop(index) {
                return Err(stop);
            }
        }
        let v = self.order[depth];
        let remaining = n - depth - 1;
        // Restricted growth: block `used` is the only unopened block v may open.
        for block in 0..(used + 1).min(self.k) {
            let now_used = used.max(block + 1);
            if now_used + remaining < self.k {
                continue;
            }
            if self.place(v, block) && self.descend(depth + 1, now_used, index, control)? {
                return Ok(true);
            }
            self.unplace(v, block);
        }
        Ok(false)
    }

    /// Assigns `v` to `block` and reports whether every affected vertex can
    /// still meet its targets. The caller undoes with `unplace` on failure.
    fn place(&mut self, v: Vertex, block: usize) -> bool {
        self.assign[v] = block;
        let k = self.k;
        let g = self.g;
        for &w in g.neighbors(v) {
            self.counts[w * k + block] += 1;
        }
        if !self.assigned_ok(v) {
            return false;
        }
        g.neighbors(v).iter().all(|&w| {
            let c = self.assign[w];
            if c == UNASSIGNED {
                self.open_ok(w)
            } else {
                let limit = if c == block {
                    self.own[w]
                } else {
                    self.other[w]
                };
                self.counts[w * k + block] <= limit
            }
        })
    }

    fn unplace(&mut self, v: Vertex, block: usize) {
        self.assign[v] = UNASSIGNED;
        for &w in self.g.neighbors(v) {
            self.counts[w * self.k + block] -= 1;
        }
    }

    fn assigned_ok(&self, v: Vertex) -> bool {
        let c = self.assign[v];
        let row = &self.counts[v * self.k..(v + 1) * self.k];
        row.iter()
            .enumerate()
            .all(|(b, &count)| count <= if b == c { self.own[v] } else { self.other[v] })
    }

    /// Whether some block is still a legal home for unassigned `w`.
    fn open_ok(&self, w: Vertex) -> bool {
        let (own, other) = (self.own[w], self.other[w]);
        let row = &self.counts[w * self.k..(w + 1) * self.k];
        let mut over = row.iter().filter(|&&c| c > other);
        match (over.next(), over.next()) {
            (None, _) => own >= other || row.iter().any(|&c| c <= own),
            (Some(&c), None) => c <= own,
            (Some(_), Some(_)) => false,
        }
    }
}

/// Descending degree; ties go to the vertex with the most neighbors already
/// ordered, then to the smaller index.
fn search_order(g: &Graph) -> Vec<Vertex> {
    let n = g.vertex_count();
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (g.degree(v), links[v], std::cmp::Reverse(v)))
            .expect("an unplaced vertex remains");
        placed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            links[w] += 1;
        }
    }
    order
}
