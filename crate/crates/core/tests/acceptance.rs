//! Exit criteria. Run with `--nocapture` to see one line per criterion.

mod common;

use std::time::{Duration, Instant};

use fatchroma_core::fat::{verify_fat, FatWitness, Verdict};
use fatchroma_core::graph::{emit_graph6, parse_graph6};
use fatchroma_core::reproduce::{run_case, CaseStatus, Theorem};
use fatchroma_core::solver::{
    brute_force_chi_fat, brute_force_chromatic, brute_force_fat_colorings, chi_fat,
    chi_fat_upper_bound, chromatic_number, fat_k_feasible, Feasibility, SolveOptions,
};
use fatchroma_core::{connected_components, Graph};

struct Ledger {
    witnesses: Vec<(Graph, FatWitness)>,
    failures: Vec<String>,
}

impl Ledger {
    fn record(&mut self, id: u32, name: &str, ok: bool, detail: String) {
        println!(
            "[{}] criterion {id}: {name} ({detail})",
            if ok { "PASS" } else { "FAIL" }
        );
        if !ok {
            self.failures
                .push(format!("criterion {id}: {name}: {detail}"));
        }
    }
}

/// Runs every case of `theorems` and checks the proved values exactly.
fn theorem_criterion(
    ledger: &mut Ledger,
    id: u32,
    name: &str,
    theorems: &[Theorem],
    budget: Duration,
) {
    let opts = SolveOptions::default();
    let start = Instant::now();
    let mut mismatches = Vec::new();
    let mut cases = 0;
    for theorem in theorems {
        for case in theorem.cases().expect("hypotheses hold") {
            cases += 1;
            let r = run_case(&case, &opts).expect("case runs");
            if r.status != CaseStatus::Pass {
                mismatches.push(format!(
                    "{}: expected ({}, {}), got ({:?}, {:?})",
                    case.family, case.expected_chi, case.expected_chi_fat, r.chi, r.chi_fat
                ));
            }
            let g = case.family.build().unwrap();
            if let Some(w) = r.chi_fat_report.fat_witness() {
                ledger.witnesses.push((g, w.clone()));
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = mismatches.is_empty() && elapsed < budget;
    let detail = if mismatches.is_empty() {
        format!(
            "{cases} cases exact, {:.2}s < {}s",
            elapsed.as_secs_f64(),
            budget.as_secs()
        )
    } else {
        mismatches.join("; ")
    };
    ledger.record(id, name, ok, detail);
}

#[test]
fn acceptance_criteria() {
    let mut ledger = Ledger {
        witnesses: Vec::new(),
        failures: Vec::new(),
    };

    // 1
    let d1: Vec<Theorem> = (2..=4)
        .flat_map(|l2| (1..l2).map(move |l1| Theorem::Disconnected1 { l1, l2 }))
        .collect();
    theorem_criterion(
        &mut ledger,
        1,
        "Disconnected1 chi = L1, chi_fat = L2",
        &d1,
        Duration::from_secs(60),
    );

    // 2
    let d2: Vec<Theorem> = (3..=4)
        .flat_map(|l2| (2..l2).map(move |l1| Theorem::Disconnected2 { l1, l2 }))
        .collect();
    theorem_criterion(
        &mut ledger,
        2,
        "Disconnected2 chi_fat = L1, chi = L2",
        &d2,
        Duration::from_secs(60),
    );

    // 3: includes the exhaustive FAT 3-coloring refutation
    let start = Instant::now();
    theorem_criterion(
        &mut ledger,
        3,
        "Connected n=5 crown (2,5), pendant triangles (5,2)",
        &[Theorem::Connected { n: 5 }],
        Duration::from_secs(300),
    );
    let g2 = fatchroma_core::generators::pendant_triangles(5).unwrap();
    let bound = chi_fat_upper_bound(&g2);
    let (three, stats) = fat_k_feasible(&g2, 3, &SolveOptions::default()).unwrap();
    ledger.record(
        3,
        "pendant_triangles(5) has no FAT 3-coloring and upper bound 3",
        three == Feasibility::Infeasible
            && bound.upper == 3
            && start.elapsed() < Duration::from_secs(300),
        format!(
            "{three:?}, {} branches closed, upper {}",
            stats.branches_closed, bound.upper
        ),
    );

    // 4
    let general: Vec<Theorem> = (3..=6).map(|n| Theorem::General { n }).collect();
    theorem_criterion(
        &mut ledger,
        4,
        "General edgeless (1,n), clique with pendant (n,1)",
        &general,
        Duration::from_secs(30),
    );

    // 5
    let corpus = common::oracle_corpus();
    let opts = SolveOptions::default();
    let mut discrepancies = Vec::new();
    let mut sandwich_violations = Vec::new();
    for g in &corpus {
        let fat = chi_fat(g, &opts).unwrap();
        let chi = chromatic_number(g, &opts).unwrap();
        let (fat_value, chi_value) = (fat.value().unwrap(), chi.value().unwrap());
        let brute_fat = brute_force_chi_fat(g).unwrap();
        let brute_chi = brute_force_chromatic(g).unwrap();
        if fat_value != brute_fat || chi_value != brute_chi {
            discrepancies.push(format!(
                "{}: chi_fat {fat_value} vs {brute_fat}, chi {chi_value} vs {brute_chi}",
                emit_graph6(g)
            ));
        }
        if !chi
            .proper_coloring()
            .is_some_and(|c| c.is_proper_for(g) && c.k == chi_value)
        {
            discrepancies.push(format!("{}: improper chi witness", emit_graph6(g)));
        }
        ledger
            .witnesses
            .push((g.clone(), fat.fat_witness().unwrap().clone()));

        // 7 uses the same corpus
        let b = chi_fat_upper_bound(g);
        let c = connected_components(g).count();
        let d_plus = fatchroma_core::degree_stats(g).min_positive_degree;
        let expected_upper = d_plus.map_or(g.vertex_count(), |d| c.max(d + 1));
        if b.lower != c || b.upper != expected_upper || !b.contains(fat_value) {
            sandwich_violations.push(format!("{}: {b:?} vs {fat_value}", emit_graph6(g)));
        }
    }
    ledger.record(
        5,
        "oracle equivalence on all graphs <= 6 vertices + 200 random on 7-9",
        discrepancies.is_empty(),
        if discrepancies.is_empty() {
            format!("{} graphs, 0 discrepancies", corpus.len())
        } else {
            discrepancies.join("; ")
        },
    );

    // 6: every witness from 1-5, plus every FAT coloring the oracle enumerates
    // on the corpus graphs with at most 7 vertices
    for g in corpus.iter().filter(|g| g.vertex_count() <= 7) {
        for w in brute_force_fat_colorings(g).unwrap() {
            ledger.witnesses.push((g.clone(), w));
        }
    }
    let mut bad = Vec::new();
    for (g, w) in &ledger.witnesses {
        let identity = g.is_edgeless() || identity_holds(w);
        let reverifies = matches!(
            verify_fat(g, w.partition(), w.alpha(), w.beta()),
            Ok(Verdict::Accepted(_))
        );
        let record = serde_json::to_string(w).unwrap();
        let parsed: fatchroma_core::fat::WitnessRecord = serde_json::from_str(&record).unwrap();
        let roundtrip = parsed.certify(g).is_ok_and(|v| v.is_accepted());
        if !(identity && reverifies && roundtrip) {
            bad.push(format!("{} {record}", emit_graph6(g)));
        }
    }
    ledger.record(
        6,
        "witness identity beta + (k-1) alpha = 1 and re-verification",
        bad.is_empty(),
        format!(
            "{} witnesses, {} failures",
            ledger.witnesses.len(),
            bad.len()
        ),
    );

    // 7
    ledger.record(
        7,
        "bound sandwich c <= chi_fat <= max(c, d+ + 1)",
        sandwich_violations.is_empty(),
        format!(
            "{} graphs, {} violations",
            corpus.len(),
            sandwich_violations.len()
        ),
    );

    // 8
    let mut failures = 0;
    let samples = common::random_graphs(common::CORPUS_SEED ^ 0x96, 1000, 1, 12);
    for g in &samples {
        let text = emit_graph6(g);
        if parse_graph6(&text).as_ref() != Ok(g)
            || emit_graph6(&parse_graph6(&text).unwrap()) != text
        {
            failures += 1;
        }
    }
    ledger.record(
        8,
        "graph6 parse . emit identity",
        failures == 0,
        format!("{} graphs, {failures} failures", samples.len()),
    );

    assert!(ledger.failures.is_empty(), "failed: {:#?}", ledger.failures);
}

/// `beta + (k - 1) alpha == 1`, evaluated here independently of the library.
fn identity_holds(w: &FatWitness) -> bool {
    let (bn, bd) = (w.beta().numer() as i128, w.beta().denom() as i128);
    let (an, ad) = (w.alpha().numer() as i128, w.alpha().denom() as i128);
    let k = w.k() as i128;
    bn * ad + (k - 1) * an * bd == bd * ad
}
