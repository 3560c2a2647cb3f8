//! Exhaustive reference implementations, used to cross-check the solver on
//! small graphs. Nothing here shares code with the search paths.

use crate::error::SolveError;
use crate::fat::{infer_fat_parameters, FatWitness, InferenceOutcome, Partition};
use crate::graph::Graph;

pub const BRUTE_FAT_CAP: usize = 12;
pub const BRUTE_CHROMATIC_CAP: usize = 10;

/// Restricted growth strings of length `n` in lexicographic order: `a[0] = 0`
/// and `a[i] <= 1 + max(a[..i])`. Each string encodes one set partition.
#[derive(Debug, Clone)]
pub struct RestrictedGrowth {
    labels: Vec<usize>,
    /// `prefix_max[i] = max(labels[..=i])`
    prefix_max: Vec<usize>,
    started: bool,
    done: bool,
}

impl RestrictedGrowth {
    pub fn new(n: usize) -> Self {
        RestrictedGrowth {
            labels: vec![0; n],
            prefix_max: vec![0; n],
            started: false,
            done: n == 0,
        }
    }

    /// Advances to the next string; `None` once exhausted.
    pub fn next_labels(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.labels);
        }
        let n = self.labels.len();
        let Some(i) = (1..n)
            .rev()
            .find(|&i| self.labels[i] <= self.prefix_max[i - 1])
        else {
            self.done = true;
            return None;
        };
        self.labels[i] += 1;
        self.prefix_max[i] = self.prefix_max[i - 1].max(self.labels[i]);
        for j in i + 1..n {
            self.labels[j] = 0;
            self.prefix_max[j] = self.prefix_max[i];
        }
        Some(&self.labels)
    }
}

/// Every FAT coloring of `g`, one per set partition that admits parameters.
pub fn brute_force_fat_colorings(g: &Graph) -> Result<Vec<FatWitness>, SolveError> {
    let n = g.vertex_count();
    if n > BRUTE_FAT_CAP {
        return Err(SolveError::CapExceeded {
            n,
            cap: BRUTE_FAT_CAP,
        });
    }
    let mut out = Vec::new();
    let mut rgs = RestrictedGrowth::new(n);
    while let Some(labels) = rgs.next_labels() {
        let p = Partition::from_labels(labels);
        if let InferenceOutcome::Witness(w) = infer_fat_parameters(g, &p).expect("valid partition")
        {
            out.push(w);
        }
    }
    Ok(out)
}

/// Largest block count over all set partitions of `V(g)` that admit FAT
/// parameters.
pub fn brute_force_chi_fat(g: &Graph) -> Result<usize, SolveError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(SolveError::EmptyGraph);
    }
    if n > BRUTE_FAT_CAP {
        return Err(SolveError::CapExceeded {
            n,
            cap: BRUTE_FAT_CAP,
        });
    }
    let mut best = 0;
    let mut rgs = RestrictedGrowth::new(n);
    while let Some(labels) = rgs.next_labels() {
        let p = Partition::from_labels(labels);
        if p.k() <= best {
            continue;
        }
        if let InferenceOutcome::Witness(_) = infer_fat_parameters(g, &p).expect("valid partition")
        {
            best = p.k();
        }
    }
    Ok(best)
}

/// Smallest `k` admitting a proper coloring `V -> [k]`, trying `k = 1, 2, ...`
/// and every assignment, abandoning a prefix as soon as it has a
/// monochromatic edge.
pub fn brute_force_chromatic(g: &Graph) -> Result<usize, SolveError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(SolveError::EmptyGraph);
    }
    if n > BRUTE_CHROMATIC_CAP {
        return Err(SolveError::CapExceeded {
            n,
            cap: BRUTE_CHROMATIC_CAP,
        });
    }
    fn extend(g: &Graph, k: usize, colors: &mut Vec<usize>) -> bool {
        let v = colors.len();
        if v == g.vertex_count() {
            return true;
        }
        for c in 0..k {
            if (0..v).any(|u| colors[u] == c && g.has_edge(u, v)) {
                continue;
            }
            colors.push(c);
            if extend(g, k, colors) {
                return true;
            }
            colors.pop();
        }
        false
    }
    let k = (1..=n)
        .find(|&k| extend(g, k, &mut Vec::with_capacity(n)))
        .expect("n colors always suffice");
    Ok(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{crown, disjoint_cliques, edgeless};

    const BELL: [usize; 9] = [1, 1, 2, 5, 15, 52, 203, 877, 4140];

    #[test]
    fn restricted_growth_counts_are_bell_numbers() {
        for (n, &bell) in BELL.iter().enumerate().skip(1) {
            let mut rgs = RestrictedGrowth::new(n);
            let mut count = 0;
            let mut prev: Option<Vec<usize>> = None;
            while let Some(labels) = rgs.next_labels() {
                assert_eq!(labels[0], 0);
                for i in 1..n {
                    assert!(labels[i] <= labels[..i].iter().max().unwrap() + 1);
                }
                if let Some(p) = &prev {
                    assert!(p.as_slice() < labels, "lexicographic order");
                }
                prev = Some(labels.to_vec());
                count += 1;
            }
            assert_eq!(count, bell, "n = {n}");
        }
        assert!(RestrictedGrowth::new(0).next_labels().is_none());
    }

    #[test]
    fn small_oracle_values() {
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(brute_force_chi_fat(&p3), Ok(2));
        let k4 = disjoint_cliques(1, 4).unwrap();
        assert_eq!(brute_force_chi_fat(&k4), Ok(4));
        assert_eq!(brute_force_chromatic(&k4), Ok(4));
        assert_eq!(brute_force_chi_fat(&crown(5).unwrap()), Ok(5));
        assert_eq!(brute_force_chromatic(&crown(5).unwrap()), Ok(2));
        assert_eq!(brute_force_chromatic(&edgeless(5).unwrap()), Ok(1));
    }

    #[test]
    fn caps() {
        assert!(matches!(
            brute_force_chi_fat(&edgeless(13).unwrap()),
            Err(SolveError::CapExceeded { n: 13, cap: 12 })
        ));
        assert!(matches!(
            brute_force_chromatic(&edgeless(11).unwrap()),
            Err(SolveError::CapExceeded { n: 11, cap: 10 })
        ));
        assert_eq!(
            brute_force_chi_fat(&Graph::empty(0)),
            Err(SolveError::EmptyGraph)
        );
    }

    #[test]
    fn path_witnesses() {
        // P3 admits the one-block coloring and {middle} | {ends} with alpha = 1.
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let all = brute_force_fat_colorings(&p3).unwrap();
        let shapes: Vec<_> = all
            .iter()
            .map(|w| (w.blocks().to_vec(), w.alpha(), w.beta()))
            .collect();
        use crate::rational::Rational;
        assert_eq!(
            shapes,
            vec![
                (vec![vec![0, 1, 2]], Rational::ZERO, Rational::ONE),
                (vec![vec![0, 2], vec![1]], Rational::ONE, Rational::ZERO),
            ]
        );
    }
}
