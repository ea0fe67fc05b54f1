//! Command-line front end: solve / min / verify / bench / corpus.

use clap::{Args, Parser, Subcommand, ValueEnum};
use indcut::enumerate::maximal_independent_sets;
use indcut::generate;
use indcut::graph::Graph;
use indcut::io::{parse_graph, to_edge_list, Format};
use indcut::outcome::SolveOutcome;
use indcut::vset::VertexSet;
use indcut::Error;
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "indcut", about = "Independent cutset solvers", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the graph has an independent cutset.
    Solve(SolveArgs),
    /// Find a minimum independent cutset.
    Min(CommonArgs),
    /// Check a claimed witness.
    Verify(VerifyArgs),
    /// Run a seeded instance family and emit CSV.
    Bench(BenchArgs),
    /// Export the small-graph corpus as an edge-list archive.
    Corpus(CorpusArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq)]
enum Algorithm {
    Exact,
    #[value(name = "2k2")]
    TwoK2,
    DualDegree,
    DualSize,
    Dominating,
    Oct,
    Triangle,
    ChordalTd,
    P5,
    P5Hitting,
    Alpha,
    Tk2,
    Auto,
}

#[derive(Args)]
struct CommonArgs {
    /// Graph file.
    input: PathBuf,
    /// Input format.
    #[arg(long, value_enum, default_value = "edges")]
    format: FileFormat,
    /// Emit JSON (default for solve/min/verify).
    #[arg(long)]
    json: bool,
    /// Emit CSV (default for bench).
    #[arg(long)]
    csv: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FileFormat {
    Edges,
    Dimacs,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    common: CommonArgs,
    #[arg(long, value_enum, default_value = "auto")]
    algorithm: Algorithm,
    /// Vertex-list file with a dominating set (dominating, alpha).
    #[arg(long)]
    dominating_set: Option<PathBuf>,
    /// Vertex-list file with an odd cycle transversal (oct).
    #[arg(long)]
    oct: Option<PathBuf>,
    /// Vertex-list file with a deletion set (chordal-td).
    #[arg(long)]
    deletion_set: Option<PathBuf>,
    /// Budget for the P5-hitting set (p5-hitting).
    #[arg(long)]
    hitting_k: Option<usize>,
    /// Generic parameter k (dual-size, triangle).
    #[arg(long)]
    k: Option<usize>,
    /// Number of forbidden disjoint edges (tk2).
    #[arg(long)]
    t: Option<usize>,
    /// Independence bound of the dominating set (alpha).
    #[arg(long)]
    c: Option<usize>,
    /// Seed for any randomized step (reserved; solvers are deterministic).
    #[arg(long, default_value = "0")]
    seed: u64,
    /// Worker threads for the parallel reductions.
    #[arg(long, default_value = "1")]
    threads: usize,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Comma-separated vertex labels of the claimed witness.
    #[arg(long)]
    witness: String,
}

#[derive(Args)]
struct BenchArgs {
    /// Instance family.
    #[arg(long)]
    scenario: String,
    #[arg(long, default_value = "40")]
    n: usize,
    #[arg(long, default_value = "20")]
    trials: usize,
    #[arg(long, default_value = "0")]
    seed: u64,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    csv: bool,
}

#[derive(Args)]
struct CorpusArgs {
    /// Largest vertex count to include.
    #[arg(long, default_value = "7")]
    n_max: usize,
    /// Output file (stdout when absent).
    #[arg(long)]
    output: Option<PathBuf>,
}

enum CliError {
    Usage(String),
    ParameterTooSmall(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::ParameterTooSmall { .. } => CliError::ParameterTooSmall(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve(args) => cmd_solve(args),
        Command::Min(args) => cmd_min(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Bench(args) => cmd_bench(args),
        Command::Corpus(args) => cmd_corpus(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::ParameterTooSmall(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn load_graph(common: &CommonArgs) -> Result<Graph, CliError> {
    let text = std::fs::read_to_string(&common.input)
        .map_err(|e| CliError::Usage(format!("{}: {e}", common.input.display())))?;
    let format = match common.format {
        FileFormat::Edges => Format::EdgeList,
        FileFormat::Dimacs => Format::Dimacs,
    };
    Ok(parse_graph(&text, format)?)
}

fn load_vertex_list(path: &PathBuf, g: &Graph) -> Result<VertexSet, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let mut s = VertexSet::empty(g.n());
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let label: u64 = line
            .parse()
            .map_err(|_| CliError::Usage(format!("line {}: bad vertex label", idx + 1)))?;
        let v = g
            .vertex_with_label(label)
            .ok_or_else(|| CliError::Usage(format!("line {}: unknown vertex {label}", idx + 1)))?;
        s.insert(v);
    }
    Ok(s)
}

fn witness_labels(g: &Graph, w: &VertexSet) -> Vec<u64> {
    let mut labels: Vec<u64> = w.iter().map(|v| g.label_of(v)).collect();
    labels.sort_unstable();
    labels
}

fn outcome_json(g: &Graph, out: &SolveOutcome, time_ms: f64) -> serde_json::Value {
    let witness = out.witness().map(|w| witness_labels(g, w));
    // the report re-verifies independently of the solver
    let verified = out.witness().map(|w| g.is_independent(w) && g.is_cutset(w));
    let s = out.stats();
    json!({
        "answer": if out.answer() { "yes" } else { "no" },
        "witness": witness,
        "verified": verified,
        "algorithm": out.algorithm(),
        "parameter": out.parameter(),
        "stats": {
            "mis_examined": s.mis_examined,
            "partitions2_examined": s.partitions2_examined,
            "partitions3_examined": s.partitions3_examined,
            "subsets_examined": s.subsets_examined,
            "sat_calls": s.sat_calls,
            "dp_keys": s.dp_keys,
            "phase": s.phase,
            "rung": s.rung,
            "guard_exceeded": s.guard_exceeded,
            "notes": s.notes,
        },
        "time_ms": time_ms,
    })
}

fn run_algorithm(g: &Graph, args: &SolveArgs) -> Result<SolveOutcome, CliError> {
    let need = |opt: &Option<PathBuf>, flag: &str| {
        opt.clone()
            .ok_or_else(|| CliError::Usage(format!("--{flag} is required for this algorithm")))
    };
    let parallel = args.threads > 1;
    let out = match args.algorithm {
        Algorithm::Exact => {
            if parallel {
                indcut::parallel::decide_exact_par(g)?
            } else {
                indcut::exact::decide_exact(g)?
            }
        }
        Algorithm::TwoK2 => indcut::exact::decide_2k2_free(g)?,
        Algorithm::DualDegree => indcut::dual::solve_by_dual_degree(g)?,
        Algorithm::DualSize => {
            let k = args
                .k
                .ok_or_else(|| CliError::Usage("--k is required for dual-size".into()))?;
            indcut::dual::solve_dual_solution_size(g, k)?
        }
        Algorithm::Dominating => {
            let x = load_vertex_list(&need(&args.dominating_set, "dominating-set")?, g)?;
            if parallel {
                indcut::parallel::solve_with_dominating_set_par(g, &x)?
            } else {
                indcut::dominating::solve_with_dominating_set(g, &x)?
            }
        }
        Algorithm::Oct => {
            let x = load_vertex_list(&need(&args.oct, "oct")?, g)?;
            indcut::dominating::solve_by_oct(g, &x)?
        }
        Algorithm::Triangle => {
            let k = args
                .k
                .ok_or_else(|| CliError::Usage("--k is required for triangle".into()))?;
            indcut::dominating::solve_by_triangle_hitting(g, k)?
        }
        Algorithm::ChordalTd => {
            let x = match &args.deletion_set {
                Some(path) => load_vertex_list(path, g)?,
                None => indcut::treewidth::brute_chordal_deletion(g, args.k.unwrap_or(4))?
                    .ok_or_else(|| {
                        CliError::Usage("no chordal deletion set within the budget".into())
                    })?,
            };
            indcut::treewidth::solve_by_chordal_deletion(g, &x)?
        }
        Algorithm::P5 => indcut::structured::solve_p5_free(g)?,
        Algorithm::P5Hitting => {
            let k = args
                .hitting_k
                .ok_or_else(|| CliError::Usage("--hitting-k is required for p5-hitting".into()))?;
            indcut::structured::solve_by_p5_hitting(g, k)?
        }
        Algorithm::Alpha => {
            let x = load_vertex_list(&need(&args.dominating_set, "dominating-set")?, g)?;
            let c = args
                .c
                .ok_or_else(|| CliError::Usage("--c is required for alpha".into()))?;
            indcut::structured::solve_alpha_dominated(g, &x, c)?
        }
        Algorithm::Tk2 => {
            let t = args
                .t
                .ok_or_else(|| CliError::Usage("--t is required for tk2".into()))?;
            indcut::structured::solve_tk2_free(g, t)?
        }
        Algorithm::Auto => {
            if let Some(mut out) = indcut::exact::decide_exact_fastpath_trianglefree(g)? {
                out.stats_mut()
                    .notes
                    .push("auto: triangle-free neighborhood fast path".into());
                out
            } else {
                let mut notes = Vec::new();
                if indcut::exact::chen_yu_applies(g) {
                    notes.push(
                        "auto: m <= 2n-4, an independent cutset is guaranteed to exist".into(),
                    );
                }
                let mut out = if indcut::enumerate::find_induced_tk2(g, 2).is_none() {
                    notes.push("auto: 2K2-free, quadratic sweep".into());
                    indcut::exact::decide_2k2_free(g)?
                } else if parallel {
                    indcut::parallel::decide_exact_par(g)?
                } else {
                    indcut::exact::decide_exact(g)?
                };
                out.stats_mut().notes.extend(notes);
                out
            }
        }
    };
    Ok(out)
}

fn cmd_solve(args: SolveArgs) -> Result<(), CliError> {
    if args.threads > 1 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(args.threads)
            .build_global()
            .ok();
    }
    let g = load_graph(&args.common)?;
    let start = Instant::now();
    let out = run_algorithm(&g, &args)?;
    let time_ms = start.elapsed().as_secs_f64() * 1000.0;
    let report = outcome_json(&g, &out, time_ms);
    if args.common.csv {
        println!("answer,witness_size,algorithm,parameter,time_ms");
        println!(
            "{},{},{},{},{time_ms:.3}",
            if out.answer() { "yes" } else { "no" },
            out.witness().map(|w| w.len()).unwrap_or(0),
            out.algorithm(),
            out.parameter().map(|k| k.to_string()).unwrap_or_default(),
        );
    } else {
        println!("{report}");
    }
    Ok(())
}

fn cmd_min(args: CommonArgs) -> Result<(), CliError> {
    let g = load_graph(&args)?;
    let start = Instant::now();
    let found = indcut::exact::minimum_independent_cutset(&g)?;
    let time_ms = start.elapsed().as_secs_f64() * 1000.0;
    let report = match found {
        Some((w, size)) => json!({
            "answer": "yes",
            "witness": witness_labels(&g, &w),
            "size": size,
            "verified": g.is_independent(&w) && g.is_cutset(&w),
            "algorithm": "min-exact",
            "time_ms": time_ms,
        }),
        None => json!({
            "answer": "no",
            "witness": null,
            "size": null,
            "verified": null,
            "algorithm": "min-exact",
            "time_ms": time_ms,
        }),
    };
    println!("{report}");
    Ok(())
}

fn cmd_verify(args: VerifyArgs) -> Result<(), CliError> {
    let g = load_graph(&args.common)?;
    let mut w = VertexSet::empty(g.n());
    for tok in args.witness.split(',').filter(|t| !t.trim().is_empty()) {
        let label: u64 = tok
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("bad vertex label '{tok}'")))?;
        let v = g
            .vertex_with_label(label)
            .ok_or_else(|| CliError::Usage(format!("unknown vertex {label}")))?;
        w.insert(v);
    }
    let independent = g.is_independent(&w);
    let cutset = g.is_cutset(&w);
    let report = json!({
        "verified": independent && cutset,
        "independent": independent,
        "cutset": cutset,
        "witness": witness_labels(&g, &w),
    });
    println!("{report}");
    Ok(())
}

type BenchRow = (usize, usize, String, String, u64, f64);

fn bench_rows(args: &BenchArgs) -> Result<Vec<BenchRow>, CliError> {
    // row: (n, m, algorithm, answer, detail, time_ms)
    let mut rows = Vec::new();
    for trial in 0..args.trials {
        let seed = args.seed.wrapping_add(trial as u64);
        let row = match args.scenario.as_str() {
            "chen-yu" => {
                let n = args.n.max(4);
                let span = (2 * n - 4) - (n - 1);
                let m = n - 1 + (seed as usize * 7919) % (span + 1);
                let g = generate::tree_plus_edges(n, m, seed);
                let start = Instant::now();
                let out = indcut::exact::decide_exact(&g)?;
                let ms = start.elapsed().as_secs_f64() * 1000.0;
                (
                    g.n(),
                    g.m(),
                    "exact".to_string(),
                    if out.answer() { "yes" } else { "no" }.to_string(),
                    out.witness().map(|w| w.len() as u64).unwrap_or(0),
                    ms,
                )
            }
            "moonmoser" => {
                let t = (args.n / 3).max(1);
                let mut edges = Vec::new();
                for i in 0..t {
                    let b = 3 * i;
                    edges.extend_from_slice(&[(b, b + 1), (b + 1, b + 2), (b, b + 2)]);
                }
                let g = Graph::from_edges(3 * t, &edges);
                let start = Instant::now();
                let count = maximal_independent_sets(&g).count() as u64;
                let ms = start.elapsed().as_secs_f64() * 1000.0;
                let expected = 3u64.pow(t as u32);
                (
                    g.n(),
                    g.m(),
                    "mis-count".to_string(),
                    if count == expected { "yes" } else { "no" }.to_string(),
                    count,
                    ms,
                )
            }
            "planted-domset" => {
                let k = 6.min(args.n);
                let g = generate::planted_dominating(args.n, k, 2.0 / args.n as f64, seed);
                let x = VertexSet::from_slice(g.n(), &(0..k).collect::<Vec<_>>());
                let start = Instant::now();
                let out = indcut::dominating::solve_with_dominating_set(&g, &x)?;
                let ms = start.elapsed().as_secs_f64() * 1000.0;
                (
                    g.n(),
                    g.m(),
                    "dominating".to_string(),
                    if out.answer() { "yes" } else { "no" }.to_string(),
                    out.witness().map(|w| w.len() as u64).unwrap_or(0),
                    ms,
                )
            }
            "chordal-plus-apex" => {
                let apex = 3.min(args.n.saturating_sub(2));
                let g = generate::chordal_plus_apex(args.n - apex, apex, 0.3, seed);
                let x = VertexSet::from_slice(g.n(), &(args.n - apex..args.n).collect::<Vec<_>>());
                let start = Instant::now();
                let out = indcut::treewidth::solve_by_chordal_deletion(&g, &x)?;
                let ms = start.elapsed().as_secs_f64() * 1000.0;
                (
                    g.n(),
                    g.m(),
                    "chordal-td".to_string(),
                    if out.answer() { "yes" } else { "no" }.to_string(),
                    out.witness().map(|w| w.len() as u64).unwrap_or(0),
                    ms,
                )
            }
            "p5-distance" => {
                // split core plus two extra vertices: hitting distance <= 2
                let core = args.n.saturating_sub(2).max(2);
                let base = generate::random_split(core, seed);
                let mut edges = base.edges();
                let mut rng_val = seed;
                for extra in core..core + 2 {
                    let mut attached = false;
                    for v in 0..extra {
                        rng_val = rng_val.wrapping_mul(6364136223846793005).wrapping_add(1);
                        if rng_val % 100 < 25 {
                            edges.push((v, extra));
                            attached = true;
                        }
                    }
                    if !attached {
                        edges.push((extra - 1, extra));
                    }
                }
                let g = Graph::from_edges(core + 2, &edges);
                let start = Instant::now();
                let out = indcut::structured::solve_by_p5_hitting(&g, 2)?;
                let ms = start.elapsed().as_secs_f64() * 1000.0;
                (
                    g.n(),
                    g.m(),
                    "p5-hitting".to_string(),
                    if out.answer() { "yes" } else { "no" }.to_string(),
                    out.witness().map(|w| w.len() as u64).unwrap_or(0),
                    ms,
                )
            }
            other => return Err(CliError::Usage(format!("unknown scenario '{other}'"))),
        };
        rows.push(row);
    }
    Ok(rows)
}

fn cmd_bench(args: BenchArgs) -> Result<(), CliError> {
    let rows = bench_rows(&args)?;
    if args.json {
        let items: Vec<serde_json::Value> = rows
            .iter()
            .enumerate()
            .map(|(i, (n, m, alg, answer, detail, ms))| {
                json!({
                    "scenario": args.scenario,
                    "trial": i,
                    "n": n,
                    "m": m,
                    "algorithm": alg,
                    "answer": answer,
                    "detail": detail,
                    "time_ms": ms,
                })
            })
            .collect();
        println!("{}", serde_json::Value::Array(items));
    } else {
        println!("scenario,trial,n,m,algorithm,answer,detail,time_ms");
        for (i, (n, m, alg, answer, detail, ms)) in rows.iter().enumerate() {
            println!(
                "{},{i},{n},{m},{alg},{answer},{detail},{ms:.3}",
                args.scenario
            );
        }
    }
    Ok(())
}

fn cmd_corpus(args: CorpusArgs) -> Result<(), CliError> {
    let graphs = indcut::oracle::connected_graph_corpus(args.n_max);
    let mut out = String::new();
    for (i, g) in graphs.iter().enumerate() {
        out.push_str(&format!("# graph {i} n={} m={}\n", g.n(), g.m()));
        out.push_str(&to_edge_list(g));
        out.push('\n');
    }
    match args.output {
        Some(path) => std::fs::write(&path, out)
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?,
        None => print!("{out}"),
    }
    Ok(())
}
