//! `domset` subcommands. Exit codes: 0 success, 1 usage or parse error,
//! 2 failed precondition, 3 exact search out of budget, 4 invariant or bound
//! violation.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use domset_core::demand::{deficiency, find_xy};
use domset_core::exact::exact_min_domset;
use domset_core::gadgets::{check_reduction, reduce_alpha_bipartite, reduce_bipartite_kdom, reduce_fdm, reduce_pendant_kdom};
use domset_core::graph::{random_bipartite, random_graph, random_regular};
use domset_core::{Bipartition, FFunction, Graph, MisOrder, Ratio};

use crate::error::{read_file, write_file, DomsetError, Result};
use crate::experiment::{run_experiment, ExperimentConfig};
use crate::format::{parse_edge_list, parse_vertex_list, write_edge_list_with_parts, write_metadata, write_vertex_list, ParsedGraph};
use crate::solve::{run, ClawP, SolveOptions, Solver, DEFAULT_BUDGET};
use crate::spec_text::parse_demand_spec;

#[derive(Debug, Parser)]
#[command(name = "domset", version, about = "Generalized domination: solvers, approximations and reduction gadgets")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a graph file.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        /// Output path (stdout when omitted).
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Solve one instance and print a JSON report.
    Solve(SolveArgs),
    /// Check a vertex set against a demand rule.
    Verify {
        graph: PathBuf,
        #[arg(long)]
        spec: String,
        /// One vertex id per line.
        #[arg(long)]
        set: PathBuf,
    },
    /// Build a reduction gadget.
    Reduce(ReduceArgs),
    /// Run a batch study from a key=value config and write CSV.
    Experiment {
        config: PathBuf,
        /// Overrides the config's `output`.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Leave out the wall_ms column.
        #[arg(long)]
        no_timing: bool,
    },
    /// List (x, y) pairs usable by the fdm reduction.
    FindXy {
        /// half, sqrt_plus_one, two_log_half, linear:a/b or const:k
        f: String,
        #[arg(default_value_t = 50)]
        bound: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum GenKind {
    /// Random d-regular graph (pairing model).
    Regular {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Line graph of an input graph.
    Line {
        #[arg(long)]
        input: PathBuf,
    },
    /// Random bipartite graph with parts 0..n1 and n1..n1+n2.
    Bipartite {
        #[arg(long)]
        n1: usize,
        #[arg(long)]
        n2: usize,
        #[arg(long, default_value = "1/2")]
        p: Ratio,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// G(n, p).
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "1/2")]
        p: Ratio,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    Complete {
        #[arg(long)]
        n: usize,
    },
    CompleteBipartite {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
    },
    Cycle {
        #[arg(long)]
        n: usize,
    },
    Path {
        #[arg(long)]
        n: usize,
    },
    Star {
        #[arg(long)]
        leaves: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SolverArg {
    Exact,
    Greedy,
    Claw,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum OrderArg {
    Ascending,
    MaxDegree,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    pub graph: PathBuf,
    #[arg(long)]
    pub spec: String,
    #[arg(long, value_enum)]
    pub solver: SolverArg,
    /// Claw bound for the claw solver: an integer or `auto`.
    #[arg(long)]
    pub p: Option<String>,
    /// Node limit for exact search.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    /// Also solve exactly, to fill in optimum and ratio.
    #[arg(long)]
    pub oracle: bool,
    #[arg(long, value_enum, default_value = "ascending")]
    pub order: OrderArg,
    /// Write the solution set here.
    #[arg(long)]
    pub witness: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ReduceKind {
    Pendant,
    #[value(name = "bipartite-k")]
    BipartiteK,
    Alpha,
    Fdm,
}

#[derive(Debug, Args)]
pub struct ReduceArgs {
    #[arg(value_enum)]
    pub kind: ReduceKind,
    pub graph: PathBuf,
    #[arg(long)]
    pub k: Option<u32>,
    #[arg(long)]
    pub alpha: Option<Ratio>,
    #[arg(long)]
    pub f: Option<FFunction>,
    #[arg(long)]
    pub x: Option<u64>,
    #[arg(long)]
    pub y: Option<u64>,
    /// Gadget path; metadata goes to `<out>.meta`. Without it the gadget is
    /// printed to stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Solve both sides exactly and check the optimum relation.
    #[arg(long)]
    pub check: bool,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match execute(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => write_file(p, text),
        None => {
            print!("{text}");
            std::io::stdout().flush().ok();
            Ok(())
        }
    }
}

fn load_graph(path: &Path) -> Result<ParsedGraph> {
    Ok(parse_edge_list(&read_file(path)?)?)
}

pub fn execute(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Gen { kind, out } => gen(kind, out.as_deref()),
        Command::Solve(args) => solve(args),
        Command::Verify { graph, spec, set } => verify(&graph, &spec, &set),
        Command::Reduce(args) => reduce(args),
        Command::Experiment { config, out, no_timing } => experiment(&config, out, no_timing),
        Command::FindXy { f, bound } => {
            let f: FFunction = f.parse().map_err(|e: domset_core::Error| DomsetError::usage(e.to_string()))?;
            for (x, y) in find_xy(&f, bound) {
                println!("({x}, {y})");
            }
            Ok(0)
        }
    }
}

fn gen(kind: GenKind, out: Option<&Path>) -> Result<i32> {
    let (g, parts) = match kind {
        GenKind::Regular { n, d, seed } => (random_regular(n, d, seed)?, None),
        GenKind::Line { input } => (load_graph(&input)?.graph.line_graph()?, None),
        GenKind::Bipartite { n1, n2, p, seed } => (random_bipartite(n1, n2, p.numer(), p.denom(), seed)?, Some(n1)),
        GenKind::Random { n, p, seed } => (random_graph(n, p.numer(), p.denom(), seed)?, None),
        GenKind::Complete { n } => (Graph::complete(n)?, None),
        GenKind::CompleteBipartite { a, b } => (Graph::complete_bipartite(a, b)?, Some(a)),
        GenKind::Cycle { n } => (Graph::cycle(n)?, None),
        GenKind::Path { n } => (Graph::path(n)?, None),
        GenKind::Star { leaves } => (Graph::star(leaves)?, None),
    };
    emit(out, &write_edge_list_with_parts(&g, parts))?;
    Ok(0)
}

fn solve(args: SolveArgs) -> Result<i32> {
    let g = load_graph(&args.graph)?.graph;
    let spec = parse_demand_spec(&args.spec, Path::new("."))?;
    let demands = spec.resolve(&g)?;
    let solver = match args.solver {
        SolverArg::Exact => Solver::Exact,
        SolverArg::Greedy => Solver::Greedy,
        SolverArg::Claw => Solver::Claw,
    };
    let opts = SolveOptions {
        budget: args.budget,
        claw_p: args.p.as_deref().map(str::parse::<ClawP>).transpose()?,
        order: match args.order {
            OrderArg::Ascending => MisOrder::AscendingId,
            OrderArg::MaxDegree => MisOrder::MaxDegreeFirst,
        },
    };
    let instance = args.graph.display().to_string();
    let mut out = run(&instance, &g, &spec, &demands, solver, &opts, None)?;
    let mut code = if out.optimal == Some(false) { 3 } else { 0 };
    if args.oracle && solver != Solver::Exact {
        let exact = exact_min_domset(&g, &demands, args.budget)?;
        if exact.is_optimal() {
            out.report.set_optimum(exact.optimum);
        } else {
            code = 3;
        }
    }
    if let Some(path) = &args.witness {
        write_file(path, &write_vertex_list(&out.witness))?;
    }
    println!("{}", out.report.to_json());
    if out.report.bound_violated() {
        eprintln!("error: size {} exceeds bound {:?} x optimum", out.report.size, out.report.bound);
        code = 4;
    } else if code == 3 {
        eprintln!("error: exact search stopped after {} nodes without proving optimality", args.budget);
    }
    Ok(code)
}

fn verify(graph: &Path, spec: &str, set: &Path) -> Result<i32> {
    let g = load_graph(graph)?.graph;
    let spec = parse_demand_spec(spec, Path::new("."))?;
    let demands = spec.resolve(&g)?;
    let set = parse_vertex_list(&read_file(set)?, g.n())?;
    let short = deficiency(&g, &set, &demands);
    if short.is_empty() {
        println!("ok: {} vertices, {spec}-dominating", set.len());
        return Ok(0);
    }
    println!("not dominating: {} vertices short", short.len());
    for (v, s) in &short {
        println!("vertex {v}: needs {} more (demand {})", s, demands.get(*v));
    }
    Ok(4)
}

fn need<T>(v: Option<T>, flag: &str, kind: &str) -> Result<T> {
    v.ok_or_else(|| DomsetError::usage(format!("reduce {kind} needs --{flag}")))
}

fn bipartition_of(parsed: &ParsedGraph) -> Result<Bipartition> {
    match parsed.bipartition() {
        Some(b) => Ok(b?),
        None => Bipartition::two_color(&parsed.graph)
            .ok_or_else(|| domset_core::Error::InvalidBipartition("graph is not bipartite".into()).into()),
    }
}

fn reduce(args: ReduceArgs) -> Result<i32> {
    let parsed = load_graph(&args.graph)?;
    let g = &parsed.graph;
    let red = match args.kind {
        ReduceKind::Pendant => reduce_pendant_kdom(g, need(args.k, "k", "pendant")?)?,
        ReduceKind::BipartiteK => reduce_bipartite_kdom(g, &bipartition_of(&parsed)?, need(args.k, "k", "bipartite-k")?)?,
        ReduceKind::Alpha => reduce_alpha_bipartite(g, &bipartition_of(&parsed)?, need(args.alpha, "alpha", "alpha")?)?,
        ReduceKind::Fdm => reduce_fdm(g, need(args.f, "f", "fdm")?, need(args.x, "x", "fdm")?, need(args.y, "y", "fdm")?)?,
    };
    for w in &red.warnings {
        eprintln!("warning: {w}");
    }
    let meta = write_metadata(&red);
    let parts = red.gadget_bipartition().and_then(|b| b.prefix_len());
    let mut text: String = meta.lines().map(|l| format!("c {l}\n")).collect();
    text.push_str(&write_edge_list_with_parts(&red.gadget, parts));
    emit(args.out.as_deref(), &text)?;
    if let Some(out) = &args.out {
        let mut meta_path = out.clone().into_os_string();
        meta_path.push(".meta");
        write_file(Path::new(&meta_path), &meta)?;
    }
    if args.check {
        let check = check_reduction(&red, args.budget)?;
        let line = format!(
            "{}: {}\nsource witness {}\ngadget witness {}\n",
            if check.holds { "holds" } else { "VIOLATED" },
            check.relation,
            check.source_witness,
            check.gadget_witness
        );
        if args.out.is_some() {
            print!("{line}");
        } else {
            eprint!("{line}");
        }
        check.ensure()?;
    }
    Ok(0)
}

fn experiment(path: &Path, out: Option<PathBuf>, no_timing: bool) -> Result<i32> {
    let base = path.parent().unwrap_or(Path::new("."));
    let mut config = ExperimentConfig::parse(&read_file(path)?, base)?;
    config.apply_seed_env()?;
    let report = run_experiment(&config)?;
    let csv = report.to_csv(!no_timing);
    emit(out.or(config.output.clone()).as_deref(), &csv)?;
    let violations = report.violations();
    for r in &violations {
        eprintln!(
            "bound violated: {} {} {} size {} optimum {:?} bound {:?}",
            r.instance, r.spec, r.solver, r.size, r.optimum, r.bound
        );
    }
    Ok(if violations.is_empty() { 0 } else { 4 })
}
