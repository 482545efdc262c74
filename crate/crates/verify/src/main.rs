use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context as _, Result};
use clap::{Parser, Subcommand};
use serde::Serialize;

use gvcrit::criticality::CriticalityProfile;
use gvcrit::enumeration::{
    connected_order8, enumerate_graphs, read_graph6_all, MAX_GENERATED_ORDER,
};
use gvcrit::{graph6, parse_graph_spec, Evaluator, GameError, Graph, InvariantId, SolverConfig};
use gvverify::cache::ResultCache;
use gvverify::claims::{self, ClaimError, Context, Params, Profile};
use gvverify::report::{RunReport, Status};

#[derive(Parser)]
#[command(
    name = "gvcrit",
    version,
    about = "Exact solver for coloring-game invariants and their vertex-critical graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct SolverArgs {
    /// Maximum expanded states per solve.
    #[arg(long)]
    budget: Option<u64>,
    /// Append-only result cache file.
    #[arg(long)]
    cache: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the value of an invariant.
    Solve {
        #[arg(long)]
        invariant: InvariantId,
        /// Named-graph expression or graph6 string.
        #[arg(long)]
        graph: String,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Print the vertex-deletion profile and criticality class.
    Critical {
        #[arg(long)]
        invariant: InvariantId,
        #[arg(long)]
        graph: String,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Write a CSV table of all graphs of one order, or of a graph6 file.
    Enumerate {
        #[arg(long, required_unless_present = "input")]
        order: Option<usize>,
        #[arg(long)]
        connected: bool,
        /// Add value and criticality class columns for this invariant.
        #[arg(long)]
        invariant: Option<InvariantId>,
        /// Newline-delimited graph6 file to read instead of generating.
        #[arg(long, conflicts_with = "order")]
        input: Option<PathBuf>,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Check registered claims.
    Verify {
        /// Claim id; repeatable. Without it the whole profile runs.
        #[arg(long = "claim")]
        claims: Vec<String>,
        #[arg(long, value_enum, default_value = "quick")]
        profile: Profile,
        /// Census order for the selected claims.
        #[arg(long)]
        order: Option<usize>,
        /// Family parameter for the selected claims.
        #[arg(long)]
        n: Option<usize>,
        /// Also run stretch claims; needs an explicit --budget.
        #[arg(long, requires = "budget")]
        allow_stretch: bool,
        #[arg(long)]
        json: bool,
        /// Write the JSON report to this file.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Connected order-8 graphs as graph6, replacing the bundled list.
        #[arg(long)]
        input: Option<PathBuf>,
        /// List the registry and exit.
        #[arg(long)]
        list: bool,
        #[command(flatten)]
        solver: SolverArgs,
    },
}

fn config(args: &SolverArgs) -> SolverConfig {
    SolverConfig {
        state_budget: args.budget,
        ..SolverConfig::default()
    }
}

fn open_cache(args: &SolverArgs, evaluator: &Evaluator) -> Result<Option<ResultCache>> {
    let Some(path) = &args.cache else {
        return Ok(None);
    };
    let cache =
        ResultCache::open(path).with_context(|| format!("opening cache {}", path.display()))?;
    if cache.corrupt_lines() > 0 {
        eprintln!(
            "warning: ignored {} corrupt line(s) in {}",
            cache.corrupt_lines(),
            path.display()
        );
    }
    cache.preload(evaluator);
    Ok(Some(cache))
}

fn persist(cache: &Option<ResultCache>, evaluator: &Evaluator) -> Result<()> {
    if let Some(c) = cache {
        c.persist_fresh(evaluator)
            .with_context(|| format!("writing cache {}", c.path().display()))?;
    }
    Ok(())
}

fn parse_graph(spec: &str) -> Result<Graph> {
    parse_graph_spec(spec).with_context(|| format!("cannot parse graph {spec:?}"))
}

fn game<T>(r: Result<T, GameError>) -> Result<T> {
    match r {
        Err(GameError::BudgetExhausted(b)) => {
            eprintln!("undecided: state budget of {b} exhausted");
            Err(anyhow::Error::msg("budget exhausted").context(UndecidedMarker))
        }
        other => Ok(other?),
    }
}

/// Budget exhaustion, reported with exit code 2.
#[derive(Debug)]
struct UndecidedMarker;

impl std::fmt::Display for UndecidedMarker {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("undecided")
    }
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

#[derive(Serialize)]
struct SolveOutput<'a> {
    graph: &'a str,
    graph6: String,
    invariant: InvariantId,
    value: usize,
    stats: gvcrit::SolveStats,
}

fn solve(invariant: InvariantId, spec: &str, json: bool, args: &SolverArgs) -> Result<()> {
    let g = parse_graph(spec)?;
    let evaluator = Evaluator::new(config(args));
    let cache = open_cache(args, &evaluator)?;
    let value = game(evaluator.value(&g, invariant))?;
    persist(&cache, &evaluator)?;
    if json {
        print_json(&SolveOutput {
            graph: spec,
            graph6: graph6::emit(&g),
            invariant,
            value,
            stats: evaluator.stats(),
        })
    } else {
        println!("{value}");
        Ok(())
    }
}

#[derive(Serialize)]
struct CriticalOutput<'a> {
    graph: &'a str,
    graph6: String,
    #[serde(flatten)]
    profile: CriticalityProfile,
}

fn critical(invariant: InvariantId, spec: &str, json: bool, args: &SolverArgs) -> Result<()> {
    let g = parse_graph(spec)?;
    let evaluator = Evaluator::new(config(args));
    let cache = open_cache(args, &evaluator)?;
    let profile = game(evaluator.delta_profile(&g, invariant))?;
    persist(&cache, &evaluator)?;
    if json {
        return print_json(&CriticalOutput {
            graph: spec,
            graph6: graph6::emit(&g),
            profile,
        });
    }
    println!("{:?} k={}", profile.class, profile.base_value);
    println!("vertex\tvalue\tdelta");
    for d in &profile.per_vertex {
        println!("{}\t{}\t{:+}", d.vertex, d.value, d.delta);
    }
    Ok(())
}

fn read_graph6_file(path: &Path) -> Result<Vec<Graph>> {
    let file = File::open(path).with_context(|| format!("opening {}", path.display()))?;
    let (graphs, errors) = read_graph6_all(BufReader::new(file));
    for e in &errors {
        eprintln!("warning: {}: {e}", path.display());
    }
    Ok(graphs)
}

fn enumerate(
    order: Option<usize>,
    connected: bool,
    invariant: Option<InvariantId>,
    input: Option<&Path>,
    args: &SolverArgs,
) -> Result<()> {
    let graphs = match (input, order) {
        (Some(path), _) => read_graph6_file(path)?
            .into_iter()
            .filter(|g| !connected || g.is_connected())
            .collect(),
        (None, Some(8)) if connected => connected_order8(),
        (None, Some(n)) if n <= MAX_GENERATED_ORDER => enumerate_graphs(n, connected)?,
        (None, Some(n)) => bail!(
            "order {n} is not available: generation stops at {MAX_GENERATED_ORDER} \
             (connected order 8 is bundled); pass --input with a graph6 file"
        ),
        (None, None) => unreachable!("clap requires --order or --input"),
    };
    let evaluator = Evaluator::new(config(args));
    let cache = open_cache(args, &evaluator)?;
    let mut out = csv::Writer::from_writer(io::stdout().lock());
    match invariant {
        None => out.write_record(["graph6", "order", "size"])?,
        Some(_) => out.write_record(["graph6", "order", "size", "value", "class"])?,
    }
    for g in &graphs {
        let mut row = vec![graph6::emit(g), g.order().to_string(), g.size().to_string()];
        if let Some(inv) = invariant {
            let p = game(evaluator.delta_profile(g, inv))?;
            row.push(p.base_value.to_string());
            row.push(format!("{:?}", p.class));
        }
        out.write_record(&row)?;
    }
    out.flush()?;
    persist(&cache, &evaluator)?;
    Ok(())
}

struct VerifyArgs {
    claims: Vec<String>,
    profile: Profile,
    params: Params,
    allow_stretch: bool,
    json: bool,
    report: Option<PathBuf>,
    input: Option<PathBuf>,
}

fn verify(v: VerifyArgs, args: &SolverArgs) -> Result<ExitCode> {
    let mut ctx = Context::new(config(args), v.allow_stretch);
    if let Some(path) = &v.input {
        ctx.order8_connected = read_graph6_file(path)?
            .into_iter()
            .filter(|g| g.order() == 8 && g.is_connected())
            .collect();
    }
    let cache = open_cache(args, &ctx.evaluator)?;
    let ids: Vec<&str> = if v.claims.is_empty() {
        claims::selected(v.profile, v.allow_stretch)
            .iter()
            .map(|c| c.id)
            .collect()
    } else {
        v.claims.iter().map(String::as_str).collect()
    };
    let mut reports = Vec::new();
    for id in ids {
        let spec = claims::find(id).ok_or_else(|| ClaimError::UnknownClaim(id.to_string()))?;
        let defaults = match v.profile {
            Profile::Quick => &spec.quick,
            Profile::Full => &spec.full,
        };
        let params = Params {
            census_order: v.params.census_order.or(defaults.census_order),
            n: v.params.n.or(defaults.n),
        };
        let report = claims::run_claim(id, &params, &ctx)?;
        persist(&cache, &ctx.evaluator)?;
        if !v.json {
            println!("{}", report.line());
            if report.status == Status::Fail {
                for e in &report.evidence {
                    println!("  {} {:?}", e.graph, e.values);
                }
            }
        }
        reports.push(report);
    }
    let run = RunReport::new(Some(v.profile), v.allow_stretch, reports);
    if let Some(path) = &v.report {
        let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
        serde_json::to_writer_pretty(file, &run)?;
    }
    if v.json {
        print_json(&run)?;
    } else {
        println!(
            "{} pass, {} fail, {} undecided",
            run.summary.pass, run.summary.fail, run.summary.undecided
        );
    }
    Ok(if run.summary.fail > 0 {
        ExitCode::from(1)
    } else if run.summary.undecided > 0 {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    })
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Solve {
            invariant,
            graph,
            json,
            solver,
        } => solve(invariant, &graph, json, &solver)?,
        Command::Critical {
            invariant,
            graph,
            json,
            solver,
        } => critical(invariant, &graph, json, &solver)?,
        Command::Enumerate {
            order,
            connected,
            invariant,
            input,
            solver,
        } => enumerate(order, connected, invariant, input.as_deref(), &solver)?,
        Command::Verify {
            claims,
            profile,
            order,
            n,
            allow_stretch,
            json,
            report,
            input,
            list,
            solver,
        } => {
            if list {
                for c in claims::REGISTRY {
                    let tag = if c.stretch { " (stretch)" } else { "" };
                    println!("{:<10} {}{tag}", c.id, c.statement);
                }
                return Ok(ExitCode::SUCCESS);
            }
            let args = VerifyArgs {
                claims,
                profile,
                params: Params {
                    census_order: order,
                    n,
                },
                allow_stretch,
                json,
                report,
                input,
            };
            return verify(args, &solver);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            // keep exit code 2 for undecided results
            let _ = e.print();
            return ExitCode::from(1);
        }
        Err(e) => e.exit(),
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) if e.downcast_ref::<UndecidedMarker>().is_some() => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
