mod input;
mod output;

use std::io::Write;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fatchroma_core::fat::{parse_coloring, Verdict};
use fatchroma_core::generators::FamilySpec;
use fatchroma_core::reproduce::{default_theorems, reproduce, CaseStatus, Theorem};
use fatchroma_core::solver::{
    chi_fat, chi_fat_upper_bound, chromatic_number, fat_spectrum, Outcome, SolveOptions,
    DEFAULT_SPECTRUM_CAP,
};
use fatchroma_core::{infer_fat_parameters, verify_fat, InferenceOutcome, Rational};
use serde_json::json;

use input::{read_graphs, read_single_graph, read_text, InputError};

/// Exact FAT chromatic number solver.
#[derive(Debug, Parser)]
#[command(name = "fatchroma", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Global {
    /// Graph encoding for input files and generated output.
    #[arg(long, global = true, value_enum, default_value_t = Format::Graph6)]
    format: Format,
    /// Emit JSON, one object per line.
    #[arg(long, global = true)]
    json: bool,
    /// Per-solve time budget in seconds.
    #[arg(long, global = true, value_parser = parse_timeout)]
    timeout: Option<Duration>,
    /// Return identical witnesses across runs and thread counts.
    #[arg(long, global = true)]
    deterministic: bool,
    /// Worker threads.
    #[arg(long, global = true, env = "FATCHROMA_THREADS", value_parser = clap::value_parser!(u16).range(1..))]
    threads: Option<u16>,
}

impl Global {
    fn options(&self) -> SolveOptions {
        SolveOptions {
            timeout: self.timeout,
            threads: self.threads.map(usize::from),
            deterministic: self.deterministic,
            ..SolveOptions::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Graph6,
    Dimacs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum What {
    Chi,
    Chifat,
    Spectrum,
    Bounds,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TheoremId {
    Disconnected1,
    Disconnected2,
    Connected,
    General,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a graph from one of the constructed families.
    Generate {
        /// edgeless, disjoint-cliques, cliques-mixed, crown, pendant-triangles, clique-with-pendant
        #[arg(long)]
        family: String,
        /// Comma-separated `key=value` list, e.g. `n=5` or `count=3,size=2`.
        #[arg(long, default_value = "")]
        params: String,
    },
    /// Check a coloring file against a graph.
    Verify {
        #[arg(long)]
        graph: String,
        /// One `vertex label` line per vertex, vertices 0-based.
        #[arg(long)]
        coloring: String,
        /// Inter-block parameter `p/q`; parameters are inferred when omitted.
        #[arg(long, requires = "beta", value_parser = parse_rational)]
        alpha: Option<Rational>,
        /// Intra-block parameter `p/q`.
        #[arg(long, requires = "alpha", value_parser = parse_rational)]
        beta: Option<Rational>,
    },
    /// Solve every graph in a file.
    Solve {
        #[arg(long, value_enum, default_value_t = What::Chifat)]
        what: What,
        /// Input file, `-` for stdin. graph6 files hold one graph per line.
        #[arg(long = "in")]
        input: String,
        /// Largest vertex count accepted by `--what spectrum`.
        #[arg(long, default_value_t = DEFAULT_SPECTRUM_CAP)]
        cap: usize,
    },
    /// Decide FAT k-colorability for every k, for every graph in a file.
    Spectrum {
        #[arg(long = "in")]
        input: String,
        #[arg(long, default_value_t = DEFAULT_SPECTRUM_CAP)]
        cap: usize,
    },
    /// Recompute (chi, chi_fat) for the theorem families and compare.
    #[command(group = clap::ArgGroup::new("selection").required(true).args(["all", "theorem"]))]
    Reproduce {
        /// Every theorem over its default range.
        #[arg(long, conflicts_with = "theorem")]
        all: bool,
        /// Add the 49-vertex Connected n=7 instance to the default ranges.
        #[arg(long)]
        large: bool,
        #[arg(long, value_enum)]
        theorem: Option<TheoremId>,
        #[arg(long, requires = "theorem")]
        l1: Option<usize>,
        #[arg(long, requires = "theorem")]
        l2: Option<usize>,
        #[arg(long, requires = "theorem")]
        n: Option<usize>,
    },
}

fn parse_timeout(s: &str) -> Result<Duration, String> {
    let secs: f64 = s.parse().map_err(|e| format!("{e}"))?;
    Duration::try_from_secs_f64(secs).map_err(|e| format!("{e}"))
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse().map_err(|e| format!("{e}"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Status {
    Ok = 0,
    Reject = 1,
    Timeout = 2,
    Input = 3,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                Status::Input as u8
            } else {
                0
            });
        }
    };
    let status = match run(&cli) {
        Ok(status) => status,
        Err(e) => {
            eprintln!("error: {e}");
            Status::Input
        }
    };
    let _ = std::io::stdout().flush();
    ExitCode::from(status as u8)
}

fn run(cli: &Cli) -> Result<Status, InputError> {
    let g = &cli.global;
    match &cli.command {
        Command::Generate { family, params } => generate(g, family, params),
        Command::Verify {
            graph,
            coloring,
            alpha,
            beta,
        } => verify(g, graph, coloring, alpha.zip(*beta)),
        Command::Solve { what, input, cap } => solve(g, *what, input, *cap),
        Command::Spectrum { input, cap } => solve(g, What::Spectrum, input, *cap),
        Command::Reproduce {
            large,
            theorem,
            l1,
            l2,
            n,
            ..
        } => {
            let theorems = match theorem {
                Some(id) => selected_theorems(*id, *l1, *l2, *n, *large),
                None => default_theorems(*large),
            };
            run_reproduce(g, &theorems)
        }
    }
}

fn generate(g: &Global, family: &str, params: &str) -> Result<Status, InputError> {
    let spec = FamilySpec::parse(family, params)?;
    let graph = spec.build()?;
    print!("{}", input::encode(&graph, g.format));
    Ok(Status::Ok)
}

fn verify(
    g: &Global,
    graph_path: &str,
    coloring_path: &str,
    params: Option<(Rational, Rational)>,
) -> Result<Status, InputError> {
    let graph = read_single_graph(graph_path, g.format)?;
    let partition = parse_coloring(&read_text(coloring_path)?, graph.vertex_count())?;
    let mode = if params.is_some() {
        "given"
    } else {
        "inferred"
    };
    let (record, status) = match params {
        Some((alpha, beta)) => match verify_fat(&graph, &partition, alpha, beta)? {
            Verdict::Accepted(w) => {
                output::accepted(&w, mode, g.json);
                (
                    json!({"verdict": "accept", "mode": mode, "witness": w}),
                    Status::Ok,
                )
            }
            Verdict::Rejected(v) => {
                output::violation(&v, &partition, g.json);
                (
                    json!({"verdict": "reject", "mode": mode, "violation": v}),
                    Status::Reject,
                )
            }
        },
        None => match infer_fat_parameters(&graph, &partition)? {
            InferenceOutcome::Witness(w) => {
                output::accepted(&w, mode, g.json);
                (
                    json!({"verdict": "accept", "mode": mode, "witness": w}),
                    Status::Ok,
                )
            }
            InferenceOutcome::Conflict(c) => {
                output::conflict(&c, &partition, g.json);
                (
                    json!({"verdict": "reject", "mode": mode, "conflict": c}),
                    Status::Reject,
                )
            }
        },
    };
    if g.json {
        println!("{record}");
    }
    Ok(status)
}

fn solve(g: &Global, what: What, path: &str, cap: usize) -> Result<Status, InputError> {
    let graphs = read_graphs(path, g.format)?;
    let opts = SolveOptions {
        spectrum_cap: cap,
        ..g.options()
    };
    let mut status = Status::Ok;
    for (index, graph) in graphs.iter().enumerate() {
        let header = json!({
            "graph": index,
            "what": match what {
                What::Chi => "chi",
                What::Chifat => "chifat",
                What::Spectrum => "spectrum",
                What::Bounds => "bounds",
            },
            "n": graph.vertex_count(),
            "m": graph.edge_count(),
        });
        let (body, timed_out) = match what {
            What::Chi | What::Chifat => {
                let report = if what == What::Chi {
                    chromatic_number(graph, &opts)?
                } else {
                    chi_fat(graph, &opts)?
                };
                if !g.json {
                    output::report(index, what == What::Chi, &report);
                }
                (
                    serde_json::to_value(&report),
                    report.outcome == Outcome::TimedOut,
                )
            }
            What::Bounds => {
                let bounds = chi_fat_upper_bound(graph);
                if !g.json {
                    output::bounds(index, &bounds);
                }
                (Ok(json!({"status": "solved", "bounds": bounds})), false)
            }
            What::Spectrum => {
                let report = fat_spectrum(graph, &opts)?;
                if !g.json {
                    output::spectrum(index, &report);
                }
                let mut body = serde_json::to_value(&report);
                if let Ok(serde_json::Value::Object(map)) = &mut body {
                    let done = report.chi_fat().is_some();
                    map.insert(
                        "status".into(),
                        json!(if done { "solved" } else { "timeout" }),
                    );
                    map.insert("chi_fat".into(), json!(report.chi_fat()));
                }
                (body, !report.undecided.is_empty())
            }
        };
        if g.json {
            println!(
                "{}",
                output::merge(header, body.expect("reports serialize"))
            );
        }
        if timed_out {
            status = status.max(Status::Timeout);
        }
    }
    Ok(status)
}

fn selected_theorems(
    id: TheoremId,
    l1: Option<usize>,
    l2: Option<usize>,
    n: Option<usize>,
    large: bool,
) -> Vec<Theorem> {
    let defaults = default_theorems(large);
    let keep = |t: &Theorem| match (id, t) {
        (TheoremId::Disconnected1, Theorem::Disconnected1 { l1: a, l2: b })
        | (TheoremId::Disconnected2, Theorem::Disconnected2 { l1: a, l2: b }) => {
            l1.is_none_or(|x| x == *a) && l2.is_none_or(|x| x == *b)
        }
        (TheoremId::Connected, Theorem::Connected { n: m })
        | (TheoremId::General, Theorem::General { n: m }) => n.is_none_or(|x| x == *m),
        _ => false,
    };
    let fixed = match id {
        TheoremId::Disconnected1 | TheoremId::Disconnected2 => l1.zip(l2),
        TheoremId::Connected | TheoremId::General => n.map(|n| (n, n)),
    };
    match fixed {
        // fully specified: run it even outside the default range
        Some((a, b)) => vec![match id {
            TheoremId::Disconnected1 => Theorem::Disconnected1 { l1: a, l2: b },
            TheoremId::Disconnected2 => Theorem::Disconnected2 { l1: a, l2: b },
            TheoremId::Connected => Theorem::Connected { n: a },
            TheoremId::General => Theorem::General { n: a },
        }],
        None => defaults.into_iter().filter(keep).collect(),
    }
}

fn run_reproduce(g: &Global, theorems: &[Theorem]) -> Result<Status, InputError> {
    if theorems.is_empty() {
        return Err(InputError::Usage(
            "no theorem instance matches the given parameters".into(),
        ));
    }
    let results = reproduce(theorems, &g.options())?;
    if g.json {
        for r in &results {
            println!("{}", serde_json::to_string(r).expect("results serialize"));
        }
    } else {
        output::table(&results);
    }
    Ok(results
        .iter()
        .map(|r| match r.status {
            CaseStatus::Pass => Status::Ok,
            CaseStatus::Mismatch => Status::Reject,
            CaseStatus::Timeout => Status::Timeout,
        })
        .max()
        .unwrap_or(Status::Ok))
}
