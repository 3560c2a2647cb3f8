//! Plain-text renderings. JSON goes through the core serializers instead.

use fatchroma_core::fat::{Conflict, FatWitness, Partition, Violation};
use fatchroma_core::reproduce::CaseResult;
use fatchroma_core::solver::{Bounds, Outcome, SearchStats, SolveReport, SpectrumReport, Witness};
use serde_json::Value;

pub fn merge(header: Value, body: Value) -> Value {
    match (header, body) {
        (Value::Object(mut h), Value::Object(b)) => {
            h.extend(b);
            Value::Object(h)
        }
        (h, _) => h,
    }
}

fn blocks(blocks: &[Vec<usize>]) -> String {
    blocks
        .iter()
        .map(|b| b.iter().map(usize::to_string).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join(" | ")
}

fn stats(s: &SearchStats) -> String {
    format!(
        "{} nodes, {} branches closed, {:.3}s",
        s.nodes,
        s.branches_closed,
        s.wall_time.as_secs_f64()
    )
}

fn fat_line(w: &FatWitness) -> String {
    format!(
        "k={} alpha={} beta={} blocks: {}",
        w.k(),
        w.alpha(),
        w.beta(),
        blocks(w.blocks())
    )
}

pub fn accepted(w: &FatWitness, mode: &str, json: bool) {
    if !json {
        println!("ACCEPT ({mode} parameters) {}", fat_line(w));
    }
}

pub fn violation(v: &Violation, p: &Partition, json: bool) {
    if !json {
        println!("REJECT {v}");
        println!(
            "  V{} = {}",
            v.block,
            blocks(&p.blocks()[v.block..=v.block])
        );
    }
}

pub fn conflict(c: &Conflict, p: &Partition, json: bool) {
    if !json {
        println!("REJECT {c}");
        for b in [c.pinned.block, c.block] {
            println!("  V{b} = {}", blocks(&p.blocks()[b..=b]));
        }
    }
}

fn bounds_text(b: &Bounds) -> String {
    format!("lower {} upper {}", b.lower, b.upper)
}

pub fn report(index: usize, chromatic: bool, r: &SolveReport) {
    let name = if chromatic { "chi" } else { "chi_fat" };
    match &r.outcome {
        Outcome::Solved { value, witness } => {
            println!("graph {index}: {name} = {value} ({})", stats(&r.stats));
            match witness {
                Witness::Fat(w) => println!("  witness {}", fat_line(w)),
                Witness::Proper(c) => println!(
                    "  witness colors: {}",
                    c.colors
                        .iter()
                        .map(usize::to_string)
                        .collect::<Vec<_>>()
                        .join(" ")
                ),
            }
        }
        Outcome::TimedOut => {
            println!(
                "graph {index}: {name} timeout, {} ({})",
                bounds_text(&r.bounds),
                stats(&r.stats)
            )
        }
    }
}

pub fn bounds(index: usize, b: &Bounds) {
    println!("graph {index}: chi_fat {}", bounds_text(b));
}

pub fn spectrum(index: usize, s: &SpectrumReport) {
    let list = |ks: &mut dyn Iterator<Item = &usize>| {
        ks.map(usize::to_string).collect::<Vec<_>>().join(" ")
    };
    println!(
        "graph {index}: feasible k: {}",
        list(&mut s.feasible.keys())
    );
    println!("  infeasible k: {}", list(&mut s.infeasible.iter()));
    if !s.undecided.is_empty() {
        println!("  undecided k: {}", list(&mut s.undecided.iter()));
    }
    match s.chi_fat() {
        Some(v) => println!("  chi_fat = {v} ({})", stats(&s.stats)),
        None => println!("  chi_fat undecided ({})", stats(&s.stats)),
    }
}

pub fn table(results: &[CaseResult]) {
    let show = |v: Option<usize>| v.map_or("-".to_string(), |v| v.to_string());
    let rows: Vec<[String; 6]> = results
        .iter()
        .map(|r| {
            [
                r.case.theorem.to_string(),
                r.case.family.to_string(),
                format!("({}, {})", r.case.expected_chi, r.case.expected_chi_fat),
                format!("({}, {})", show(r.chi), show(r.chi_fat)),
                format!("{:?}", r.status).to_uppercase(),
                format!("{:.3}s", r.elapsed.as_secs_f64()),
            ]
        })
        .collect();
    let head = [
        "theorem", "family", "expected", "computed", "status", "time",
    ]
    .map(String::from);
    let mut width = head.clone().map(|h| h.len());
    for row in &rows {
        for (w, cell) in width.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    for row in std::iter::once(&head).chain(&rows) {
        let cells: Vec<String> = row
            .iter()
            .zip(width)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        println!("{}", cells.join("  ").trim_end());
    }
    let passed = results
        .iter()
        .filter(|r| r.status == fatchroma_core::reproduce::CaseStatus::Pass)
        .count();
    println!("{passed}/{} cases pass", results.len());
}
