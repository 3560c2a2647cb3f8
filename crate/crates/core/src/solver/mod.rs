//! Exact computation of the chromatic number, the FAT chromatic number and the
//! FAT feasibility spectrum.
//!
//! # Soundness of the FAT upper bound
//!
//! Let `G` have at least one edge, `c` components and minimum positive degree
//! `d+`, and take any FAT k-coloring with parameters `(alpha, beta)`.
//!
//! * If `alpha = 0` then `beta = 1`, so every vertex has all of its neighbors
//!   in its own class. Each class is therefore a union of components and
//!   `k <= c`.
//! * If `alpha > 0`, pick a vertex `v` of positive degree. It has
//!   `alpha * deg(v) > 0` neighbors (an integer, hence at least one) in each of
//!   the other `k - 1` classes, so `k - 1 <= deg(v)`. Choosing `v` of degree
//!   `d+` gives `k <= d+ + 1`.
//!
//! Hence `chi_fat(G) <= max(c, d+ + 1)`. The component coloring shows
//! `chi_fat(G) >= c`. For edgeless graphs every partition is FAT and the value
//! is `|V|`.
//!
//! The same integrality argument gives the finite candidate set for `alpha`:
//! `alpha * deg(v)` is an integer for every `v`, so the denominator of `alpha`
//! divides the gcd of the positive degrees, and `beta = 1 - (k - 1) alpha >= 0`
//! caps `alpha` at `1 / (k - 1)`.

mod brute;
mod chromatic;
mod fat_search;

pub use brute::{
    brute_force_chi_fat, brute_force_chromatic, brute_force_fat_colorings, RestrictedGrowth,
    BRUTE_CHROMATIC_CAP, BRUTE_FAT_CAP,
};
pub use chromatic::ProperColoring;

use std::collections::{BTreeMap, BTreeSet};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::SolveError;
use crate::fat::{verify_fat, FatWitness, Partition, Verdict};
use crate::graph::{connected_components, degree_stats, Graph};
use crate::rational::Rational;

use chromatic::{BnbResult, BranchAndBound};
use fat_search::{Control, FatSearch, SearchResult, Stop};

pub const DEFAULT_SPECTRUM_CAP: usize = 32;

#[derive(Debug, Clone)]
pub struct SolveOptions {
    /// Wall-clock budget for one solve.
    pub timeout: Option<Duration>,
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
    /// Make witnesses independent of scheduling.
    pub deterministic: bool,
    /// Largest graph `fat_spectrum` accepts.
    pub spectrum_cap: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            timeout: None,
            threads: None,
            deterministic: true,
            spectrum_cap: DEFAULT_SPECTRUM_CAP,
        }
    }
}

impl SolveOptions {
    fn deadline(&self, start: Instant) -> Option<Instant> {
        self.timeout.map(|t| start + t)
    }

    fn install<R: Send>(&self, f: impl FnOnce() -> R + Send) -> Result<R, SolveError> {
        match self.threads {
            None => Ok(f()),
            Some(n) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build()
                    .map_err(|e| SolveError::ThreadPool(e.to_string()))?;
                Ok(pool.install(f))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Search nodes visited across all branches.
    pub nodes: u64,
    /// `(k, alpha)` branches closed without a witness.
    pub branches_closed: u64,
    pub wall_time: Duration,
}

impl SearchStats {
    fn absorb(&mut self, other: SearchStats) {
        self.nodes += other.nodes;
        self.branches_closed += other.branches_closed;
    }
}

impl Serialize for SearchStats {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Raw {
            nodes: u64,
            branches_closed: u64,
            wall_time_ms: f64,
        }
        Raw {
            nodes: self.nodes,
            branches_closed: self.branches_closed,
            wall_time_ms: self.wall_time.as_secs_f64() * 1e3,
        }
        .serialize(serializer)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundReason {
    /// Component coloring (lower) or the alpha = 0 case (upper).
    ComponentCount,
    /// Classes are nonempty.
    VertexCount,
    /// The alpha > 0 case: `k <= d+ + 1`.
    MinPositiveDegree,
    GreedyClique,
    GreedyColoring,
    Exact,
}

impl std::fmt::Display for BoundReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            BoundReason::ComponentCount => "component-count",
            BoundReason::VertexCount => "vertex-count",
            BoundReason::MinPositiveDegree => "min-positive-degree",
            BoundReason::GreedyClique => "greedy-clique",
            BoundReason::GreedyColoring => "greedy-coloring",
            BoundReason::Exact => "exact",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub lower: usize,
    pub upper: usize,
    pub lower_reason: BoundReason,
    pub upper_reason: BoundReason,
}

impl Bounds {
    pub fn contains(&self, value: usize) -> bool {
        self.lower <= value && value <= self.upper
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Fat(FatWitness),
    Proper(ProperColoring),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Solved {
        value: usize,
        witness: Witness,
    },
    /// The budget ran out; only the bounds are known.
    TimedOut,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport {
    pub outcome: Outcome,
    pub bounds: Bounds,
    pub stats: SearchStats,
}

impl SolveReport {
    pub fn value(&self) -> Option<usize> {
        match self.outcome {
            Outcome::Solved { value, .. } => Some(value),
            Outcome::TimedOut => None,
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match &self.outcome {
            Outcome::Solved { witness, .. } => Some(witness),
            Outcome::TimedOut => None,
        }
    }

    pub fn fat_witness(&self) -> Option<&FatWitness> {
        match self.witness() {
            Some(Witness::Fat(w)) => Some(w),
            _ => None,
        }
    }

    pub fn proper_coloring(&self) -> Option<&ProperColoring> {
        match self.witness() {
            Some(Witness::Proper(c)) => Some(c),
            _ => None,
        }
    }
}

impl Serialize for SolveReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Raw<'a> {
            status: &'static str,
            value: Option<usize>,
            witness: Option<&'a Witness>,
            bounds: &'a Bounds,
            stats: &'a SearchStats,
        }
        Raw {
            status: match self.outcome {
                Outcome::Solved { .. } => "solved",
                Outcome::TimedOut => "timeout",
            },
            value: self.value(),
            witness: self.witness(),
            bounds: &self.bounds,
            stats: &self.stats,
        }
        .serialize(serializer)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    Feasible(FatWitness),
    Infeasible,
    TimedOut,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumReport {
    /// Every feasible `k` with a witness.
    pub feasible: BTreeMap<usize, FatWitness>,
    /// Every `k` proved infeasible by exhaustion.
    pub infeasible: BTreeSet<usize>,
    /// `k` values left undecided by the budget.
    pub undecided: BTreeSet<usize>,
    pub stats: SearchStats,
}

impl SpectrumReport {
    /// Largest feasible `k`, when every larger `k` was decided.
    pub fn chi_fat(&self) -> Option<usize> {
        let top = *self.feasible.keys().next_back()?;
        self.undecided.iter().all(|&k| k < top).then_some(top)
    }
}

/// Finite set containing the `alpha` of every FAT k-coloring of `g`, ascending.
pub fn candidate_alphas(g: &Graph, k: usize) -> Result<Vec<Rational>, SolveError> {
    if k < 2 {
        return Err(SolveError::KTooSmall(k));
    }
    let gcd = degree_stats(g).degree_gcd.ok_or(SolveError::Edgeless)? as u64;
    let steps = gcd / (k as u64 - 1);
    Ok((0..=steps).map(|a| Rational::new(a, gcd)).collect())
}

/// Component-count lower bound and the `max(c, d+ + 1)` upper bound.
pub fn chi_fat_upper_bound(g: &Graph) -> Bounds {
    let c = connected_components(g).count();
    let n = g.vertex_count();
    match degree_stats(g).min_positive_degree {
        None => Bounds {
            lower: c,
            upper: n,
            lower_reason: BoundReason::ComponentCount,
            upper_reason: BoundReason::VertexCount,
        },
        Some(d) if c > d => Bounds {
            lower: c,
            upper: c,
            lower_reason: BoundReason::ComponentCount,
            upper_reason: BoundReason::ComponentCount,
        },
        Some(d) => Bounds {
            lower: c,
            upper: d + 1,
            lower_reason: BoundReason::ComponentCount,
            upper_reason: BoundReason::MinPositiveDegree,
        },
    }
}

fn check_k(g: &Graph, k: usize) -> Result<(), SolveError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(SolveError::EmptyGraph);
    }
    if k == 0 || k > n {
        return Err(SolveError::KOutOfRange { k, n });
    }
    Ok(())
}

/// Groups components into `k` classes: the first `k - 1` components alone,
/// the rest together.
fn grouped_components(g: &Graph, k: usize) -> FatWitness {
    let mut comps = connected_components(g).components;
    let tail: Vec<usize> = comps.drain(k - 1..).flatten().collect();
    comps.push(tail);
    let p = Partition::new(g.vertex_count(), comps).expect("components partition V");
    match verify_fat(g, &p, Rational::ZERO, Rational::ONE) {
        Ok(Verdict::Accepted(w)) => w,
        other => unreachable!("grouped components rejected: {other:?}"),
    }
}

/// Decides FAT k-colorability, sharing `deadline` with the caller.
fn decide(
    g: &Graph,
    k: usize,
    components: usize,
    deadline: Option<Instant>,
    deterministic: bool,
) -> (Feasibility, SearchStats) {
    let mut stats = SearchStats::default();
    if k == 1 {
        let w = match verify_fat(
            g,
            &Partition::whole(g.vertex_count()),
            Rational::ZERO,
            Rational::ONE,
        ) {
            Ok(Verdict::Accepted(w)) => w,
            other => unreachable!("one-block coloring rejected: {other:?}"),
        };
        return (Feasibility::Feasible(w), stats);
    }
    if k <= components {
        return (Feasibility::Feasible(grouped_components(g, k)), stats);
    }
    // alpha = 0 is closed for k > components
    stats.branches_closed += 1;
    let alphas: Vec<Rational> = match candidate_alphas(g, k) {
        Ok(list) => list.into_iter().filter(|a| !a.is_zero()).collect(),
        // edgeless graphs have components == n >= k
        Err(_) => unreachable!("edgeless graph with k > components"),
    };

    let best = AtomicUsize::new(usize::MAX);
    let control = Control {
        deadline,
        best: &best,
        first_wins: !deterministic,
    };
    let results: Vec<(SearchResult, u64)> = alphas
        .par_iter()
        .enumerate()
        .map(|(i, &alpha)| {
            let mut search = FatSearch::new(g, k, alpha);
            let res = search.run(i, &control);
            if matches!(res, SearchResult::Found(_)) {
                best.fetch_min(i, Ordering::Relaxed);
            }
            (res, search.nodes)
        })
        .collect();

    let mut timed_out = false;
    let mut found: Option<(usize, Vec<usize>)> = None;
    for (i, (res, nodes)) in results.into_iter().enumerate() {
        stats.nodes += nodes;
        match res {
            SearchResult::Found(labels) => {
                if found.is_none() {
                    found = Some((i, labels));
                }
            }
            SearchResult::Exhausted => stats.branches_closed += 1,
            SearchResult::Stopped(Stop::TimedOut) => timed_out = true,
            SearchResult::Stopped(Stop::Cancelled) => {}
        }
    }
    match found {
        Some((i, labels)) => {
            let alpha = alphas[i];
            let beta = Rational::ONE
                .checked_sub(alpha.scale(k as u64 - 1))
                .unwrap();
            let p = Partition::from_labels(&labels);
            match verify_fat(g, &p, alpha, beta) {
                Ok(Verdict::Accepted(w)) => (Feasibility::Feasible(w), stats),
                other => unreachable!("search produced a non-FAT partition: {other:?}"),
            }
        }
        None if timed_out => (Feasibility::TimedOut, stats),
        None => (Feasibility::Infeasible, stats),
    }
}

/// Decides whether `g` has a FAT k-coloring.
pub fn fat_k_feasible(
    g: &Graph,
    k: usize,
    opts: &SolveOptions,
) -> Result<(Feasibility, SearchStats), SolveError> {
    check_k(g, k)?;
    let start = Instant::now();
    let deadline = opts.deadline(start);
    let components = connected_components(g).count();
    let (res, mut stats) =
        opts.install(|| decide(g, k, components, deadline, opts.deterministic))?;
    stats.wall_time = start.elapsed();
    Ok((res, stats))
}

/// `chi_fat(g)`: tries `k` downward from the upper bound and stops at the first
/// feasible `k`.
pub fn chi_fat(g: &Graph, opts: &SolveOptions) -> Result<SolveReport, SolveError> {
    if g.vertex_count() == 0 {
        return Err(SolveError::EmptyGraph);
    }
    let start = Instant::now();
    let deadline = opts.deadline(start);
    let bounds = chi_fat_upper_bound(g);
    let components = bounds.lower;
    let (outcome, mut stats) = opts.install(|| {
        let mut stats = SearchStats::default();
        for k in (bounds.lower..=bounds.upper).rev() {
            let (res, s) = decide(g, k, components, deadline, opts.deterministic);
            stats.absorb(s);
            match res {
                Feasibility::Feasible(w) => {
                    return (
                        Outcome::Solved {
                            value: k,
                            witness: Witness::Fat(w),
                        },
                        stats,
                    )
                }
                Feasibility::Infeasible => {}
                Feasibility::TimedOut => return (Outcome::TimedOut, stats),
            }
        }
        unreachable!("k = component count is always feasible")
    })?;
    stats.wall_time = start.elapsed();
    Ok(SolveReport {
        outcome,
        bounds,
        stats,
    })
}

/// Decides every `k` in `1..=|V|` independently.
pub fn fat_spectrum(g: &Graph, opts: &SolveOptions) -> Result<SpectrumReport, SolveError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(SolveError::EmptyGraph);
    }
    if n > opts.spectrum_cap {
        return Err(SolveError::CapExceeded {
            n,
            cap: opts.spectrum_cap,
        });
    }
    let start = Instant::now();
    let deadline = opts.deadline(start);
    let components = connected_components(g).count();
    let results = opts.install(|| {
        (1..=n)
            .into_par_iter()
            .map(|k| (k, decide(g, k, components, deadline, opts.deterministic)))
            .collect::<Vec<_>>()
    })?;
    let mut report = SpectrumReport {
        feasible: BTreeMap::new(),
        infeasible: BTreeSet::new(),
        undecided: BTreeSet::new(),
        stats: SearchStats::default(),
    };
    for (k, (res, stats)) in results {
        report.stats.absorb(stats);
        match res {
            Feasibility::Feasible(w) => {
                report.feasible.insert(k, w);
            }
            Feasibility::Infeasible => {
                report.infeasible.insert(k);
            }
            Feasibility::TimedOut => {
                report.undecided.insert(k);
            }
        }
    }
    report.stats.wall_time = start.elapsed();
    Ok(report)
}

/// Exact `chi(g)` by DSATUR branch and bound.
pub fn chromatic_number(g: &Graph, opts: &SolveOptions) -> Result<SolveReport, SolveError> {
    if g.vertex_count() == 0 {
        return Err(SolveError::EmptyGraph);
    }
    let start = Instant::now();
    let mut bnb = BranchAndBound::new(g, opts.deadline(start));
    let initial_upper = bnb.best.k;
    let result = bnb.run();
    let stats = SearchStats {
        nodes: bnb.nodes,
        branches_closed: 0,
        wall_time: start.elapsed(),
    };
    let lower = bnb.lower();
    Ok(match result {
        BnbResult::Optimal => {
            let value = bnb.best.k;
            SolveReport {
                outcome: Outcome::Solved {
                    value,
                    witness: Witness::Proper(bnb.best),
                },
                bounds: Bounds {
                    lower: value,
                    upper: value,
                    lower_reason: if value == lower {
                        BoundReason::GreedyClique
                    } else {
                        BoundReason::Exact
                    },
                    upper_reason: if value == initial_upper {
                        BoundReason::GreedyColoring
                    } else {
                        BoundReason::Exact
                    },
                },
                stats,
            }
        }
        BnbResult::TimedOut => SolveReport {
            outcome: Outcome::TimedOut,
            bounds: Bounds {
                lower,
                upper: bnb.best.k,
                lower_reason: BoundReason::GreedyClique,
                upper_reason: BoundReason::GreedyColoring,
            },
            stats,
        },
    })
}
