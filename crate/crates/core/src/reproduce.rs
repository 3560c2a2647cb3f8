//! Recomputes `(chi, chi_fat)` for the graph families behind the four
//! separation theorems and compares against the proved values.

use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::ReproduceError;
use crate::fat::verify_fat;
use crate::generators::FamilySpec;
use crate::solver::{chi_fat, chromatic_number, SolveOptions, SolveReport};

/// One theorem instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "theorem")]
pub enum Theorem {
    /// Disconnected graph with `chi = L1 < chi_fat = L2`.
    Disconnected1 { l1: usize, l2: usize },
    /// Disconnected graph with `chi_fat = L1 < chi = L2`, `L1 > 1`.
    Disconnected2 { l1: usize, l2: usize },
    /// Connected pair for odd `n >= 5`: crown `(2, n)`, pendant triangles `(n, 2)`.
    Connected { n: usize },
    /// Pair for `n >= 3`: edgeless `(1, n)`, clique with pendant `(n, 1)`.
    General { n: usize },
}

impl Theorem {
    pub fn id(&self) -> &'static str {
        match self {
            Theorem::Disconnected1 { .. } => "Disconnected1",
            Theorem::Disconnected2 { .. } => "Disconnected2",
            Theorem::Connected { .. } => "Connected",
            Theorem::General { .. } => "General",
        }
    }

    fn check(&self) -> Result<(), ReproduceError> {
        let (ok, constraint) = match *self {
            Theorem::Disconnected1 { l1, l2 } => (1 <= l1 && l1 < l2, "1 <= L1 < L2"),
            Theorem::Disconnected2 { l1, l2 } => (1 < l1 && l1 < l2, "1 < L1 < L2"),
            Theorem::Connected { n } => (n >= 5 && n % 2 == 1, "n odd and n >= 5"),
            Theorem::General { n } => (n >= 3, "n >= 3"),
        };
        if ok {
            Ok(())
        } else {
            Err(ReproduceError::Hypothesis {
                theorem: self.id(),
                constraint,
            })
        }
    }

    /// The instances this theorem constructs, with their proved values.
    pub fn cases(&self) -> Result<Vec<TheoremCase>, ReproduceError> {
        self.check()?;
        let case = |family, expected_chi, expected_chi_fat| TheoremCase {
            theorem: *self,
            family,
            expected_chi,
            expected_chi_fat,
        };
        Ok(match *self {
            Theorem::Disconnected1 { l1: 1, l2 } => {
                vec![case(FamilySpec::Edgeless { n: l2 }, 1, l2)]
            }
            Theorem::Disconnected1 { l1, l2 } => vec![case(
                FamilySpec::DisjointCliques {
                    count: l2,
                    size: l1,
                },
                l1,
                l2,
            )],
            Theorem::Disconnected2 { l1, l2 } => {
                vec![case(FamilySpec::CliquesMixed { l1, l2 }, l2, l1)]
            }
            Theorem::Connected { n } => vec![
                case(FamilySpec::Crown { n }, 2, n),
                case(FamilySpec::PendantTriangles { n }, n, 2),
            ],
            Theorem::General { n } => vec![
                case(FamilySpec::Edgeless { n }, 1, n),
                case(FamilySpec::CliqueWithPendant { n }, n, 1),
            ],
        })
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Theorem::Disconnected1 { l1, l2 } | Theorem::Disconnected2 { l1, l2 } => {
                write!(f, "{}(L1={l1},L2={l2})", self.id())
            }
            Theorem::Connected { n } | Theorem::General { n } => write!(f, "{}(n={n})", self.id()),
        }
    }
}

/// Default parameter ranges; `with_large` adds the 49-vertex `Connected { n: 7 }`.
pub fn default_theorems(with_large: bool) -> Vec<Theorem> {
    let mut out = Vec::new();
    for l2 in 2..=4 {
        for l1 in 1..l2 {
            out.push(Theorem::Disconnected1 { l1, l2 });
        }
    }
    for l2 in 3..=4 {
        for l1 in 2..l2 {
            out.push(Theorem::Disconnected2 { l1, l2 });
        }
    }
    out.push(Theorem::Connected { n: 5 });
    if with_large {
        out.push(Theorem::Connected { n: 7 });
    }
    out.extend((3..=6).map(|n| Theorem::General { n }));
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TheoremCase {
    pub theorem: Theorem,
    #[serde(serialize_with = "serialize_display")]
    pub family: FamilySpec,
    pub expected_chi: usize,
    pub expected_chi_fat: usize,
}

fn serialize_display<S: serde::Serializer>(v: &FamilySpec, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum CaseStatus {
    Pass,
    Mismatch,
    Timeout,
}

#[derive(Debug, Clone, Serialize)]
pub struct CaseResult {
    pub case: TheoremCase,
    pub chi: Option<usize>,
    pub chi_fat: Option<usize>,
    pub status: CaseStatus,
    #[serde(serialize_with = "serialize_secs")]
    pub elapsed: Duration,
    #[serde(skip)]
    pub chi_report: SolveReport,
    #[serde(skip)]
    pub chi_fat_report: SolveReport,
}

fn serialize_secs<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

/// Solves one case. The FAT witness is re-verified and the coloring checked
/// for properness before a case can pass.
pub fn run_case(case: &TheoremCase, opts: &SolveOptions) -> Result<CaseResult, ReproduceError> {
    let start = Instant::now();
    let g = case.family.build()?;
    let chi_report = chromatic_number(&g, opts)?;
    let chi_fat_report = chi_fat(&g, opts)?;
    let (chi, chi_fat) = (chi_report.value(), chi_fat_report.value());

    let witnesses_ok = chi_report
        .proper_coloring()
        .is_some_and(|c| c.is_proper_for(&g))
        && chi_fat_report.fat_witness().is_some_and(|w| {
            verify_fat(&g, w.partition(), w.alpha(), w.beta()).is_ok_and(|v| v.is_accepted())
        });
    let status = match (chi, chi_fat) {
        (Some(a), Some(b))
            if witnesses_ok && a == case.expected_chi && b == case.expected_chi_fat =>
        {
            CaseStatus::Pass
        }
        (Some(_), Some(_)) => CaseStatus::Mismatch,
        _ => CaseStatus::Timeout,
    };
    Ok(CaseResult {
        case: *case,
        chi,
        chi_fat,
        status,
        elapsed: start.elapsed(),
        chi_report,
        chi_fat_report,
    })
}

/// Runs every case of every theorem concurrently; results keep input order.
pub fn reproduce(
    theorems: &[Theorem],
    opts: &SolveOptions,
) -> Result<Vec<CaseResult>, ReproduceError> {
    let cases: Vec<TheoremCase> = theorems
        .iter()
        .map(Theorem::cases)
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .flatten()
        .collect();
    // inner solves use the ambient pool; only the outer level is split here
    let inner = SolveOptions {
        threads: None,
        ..opts.clone()
    };
    let run = || {
        cases
            .par_iter()
            .map(|c| run_case(c, &inner))
            .collect::<Result<Vec<_>, _>>()
    };
    match opts.threads {
        None => run(),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| crate::error::SolveError::ThreadPool(e.to_string()))?
            .install(run),
    }
}
