use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context as _};
use clap::{Args, Parser, Subcommand, ValueEnum};
use sofai::dataset::{self, write_dataset};
use sofai::harness::{default_workers, run_benchmark, trial_seed, RunConfig};
use sofai::report::{read_results, render, Format};
use sofai::{FileMemory, RemoteProposer, WallClock};
use sofai_core::memory::{EpisodicMemory, MemoryStore};
use sofai_core::proposer::{MockProposer, MockStrategy, Proposer, ProposerConfig, ProposerKind};
use sofai_core::{
    format_assignment, parse_instance, run_solver, Context, GenSpec, Mix, OrchestratorConfig, SolveOutcome, SolverId,
};

#[derive(Parser)]
#[command(name = "sofai", version, about = "Metacognitive graph coloring: S1 proposer, DSATUR fallback, benchmarks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate labeled Erdős–Rényi datasets.
    Gen(GenArgs),
    /// Solve one DIMACS instance.
    Solve(SolveArgs),
    /// Run a solver over a dataset and write per-trial results.
    Bench(BenchArgs),
    /// Aggregate a results file.
    Report(ReportArgs),
}

#[derive(Args)]
struct GenArgs {
    /// Vertex counts, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    n: Vec<usize>,
    /// Edge probabilities, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    p: Vec<f64>,
    /// SAT,UNSAT percentages such as 50,50; repeat for several mixes.
    #[arg(long, required = true)]
    mix: Vec<Mix>,
    #[arg(long, default_value_t = 100)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
    /// Seconds allowed per chromatic-number computation.
    #[arg(long, default_value_t = 200.0)]
    chi_timeout: f64,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long)]
    solver: SolverId,
    #[arg(long)]
    instance: PathBuf,
    /// Color budget; overrides the file's `c k` comment.
    #[arg(long)]
    k: Option<u32>,
    #[arg(long, default_value_t = 200.0)]
    time_limit: f64,
    /// Episodic memory file (JSON lines).
    #[arg(long)]
    memory: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    proposer: ProposerArgs,
    #[command(flatten)]
    orchestrator: OrchestratorArgs,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long)]
    dataset: PathBuf,
    #[arg(long)]
    solver: SolverId,
    #[arg(long, default_value_t = 200.0)]
    time_limit: f64,
    #[arg(long, default_value_t = 3)]
    trials: u32,
    /// Results file (JSON lines, one per trial).
    #[arg(long)]
    out: PathBuf,
    #[arg(long, default_value_t = default_workers())]
    workers: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    memory: Option<PathBuf>,
    #[command(flatten)]
    proposer: ProposerArgs,
    #[command(flatten)]
    orchestrator: OrchestratorArgs,
}

#[derive(Args)]
struct ReportArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Backend {
    Mock,
    Remote,
}

#[derive(Clone, Copy, ValueEnum)]
enum Strategy {
    Greedy,
    Exact,
    AlwaysInvalid,
}

#[derive(Args)]
struct ProposerArgs {
    /// S1 backend.
    #[arg(long, value_enum, default_value_t = Backend::Mock)]
    proposer: Backend,
    #[arg(long, value_enum, default_value_t = Strategy::Greedy)]
    mock_strategy: Strategy,
    /// Per-vertex probability that the mock recolors a vertex at random.
    #[arg(long, default_value_t = 0.0)]
    noise: f64,
    /// Noise multiplier per feedback round.
    #[arg(long, default_value_t = 1.0)]
    noise_decay: f64,
    #[arg(long, default_value_t = 0.0)]
    not_solvable_rate: f64,
    #[arg(long, env = "S1_ENDPOINT", default_value = "http://localhost:8000/v1/chat/completions")]
    endpoint: String,
    #[arg(long, env = "S1_API_KEY", hide_env_values = true)]
    api_key: Option<String>,
    #[arg(long, env = "S1_MODEL", default_value = "mistral-7b-instruct")]
    model: String,
    #[arg(long, default_value_t = 0.0)]
    temperature: f64,
    /// Seconds per HTTP request.
    #[arg(long, default_value_t = 60.0)]
    request_timeout: f64,
    #[arg(long, default_value_t = 2)]
    retries: u32,
    #[arg(long, default_value_t = 4)]
    max_in_flight: usize,
}

impl ProposerArgs {
    fn config(&self, seed: u64) -> anyhow::Result<ProposerConfig> {
        let cfg = ProposerConfig {
            kind: match self.proposer {
                Backend::Mock => ProposerKind::Mock,
                Backend::Remote => ProposerKind::Remote,
            },
            endpoint: self.endpoint.clone(),
            model: self.model.clone(),
            api_key: self.api_key.clone(),
            temperature: self.temperature,
            request_timeout: secs(self.request_timeout)?,
            retries: self.retries,
            max_in_flight: self.max_in_flight,
            mock_strategy: match self.mock_strategy {
                Strategy::Greedy => MockStrategy::Greedy,
                Strategy::Exact => MockStrategy::Exact,
                Strategy::AlwaysInvalid => MockStrategy::AlwaysInvalid,
            },
            noise: self.noise,
            noise_decay: self.noise_decay,
            not_solvable_rate: self.not_solvable_rate,
            seed,
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

#[derive(Args)]
struct OrchestratorArgs {
    /// Maximum S1 iterations before escalation.
    #[arg(long, default_value_t = 5)]
    max_iterations: usize,
    /// Memory retrieval distance threshold.
    #[arg(long, default_value_t = 0.1)]
    similarity_threshold: f64,
    /// Memory examples per prompt.
    #[arg(long, default_value_t = 1)]
    memory_limit: usize,
    /// Trust an S1 "NOT SOLVABLE" in SOFAI-v1/v2 instead of escalating.
    #[arg(long)]
    accept_s1_unsat: bool,
}

impl OrchestratorArgs {
    fn config(&self) -> OrchestratorConfig {
        OrchestratorConfig {
            max_iterations: self.max_iterations,
            similarity_threshold: self.similarity_threshold,
            memory_limit: self.memory_limit,
            accept_s1_unsat: self.accept_s1_unsat,
        }
    }
}

fn secs(s: f64) -> anyhow::Result<Duration> {
    Duration::try_from_secs_f64(s).with_context(|| format!("invalid duration {s}"))
}

fn gen(args: GenArgs) -> anyhow::Result<()> {
    let mut specs = Vec::new();
    for &n in &args.n {
        for &p in &args.p {
            for &mix in &args.mix {
                let mut spec = GenSpec { n, p, mix, count: args.count, seed: 0 };
                spec.seed = trial_seed(args.seed, &spec.instance_id(0), 0);
                spec.validate()?;
                specs.push(spec);
            }
        }
    }
    let limit = secs(args.chi_timeout)?;
    let datasets = dataset::generate(&specs, || WallClock::start(limit))?;
    write_dataset(&args.out, &datasets)?;
    for d in &datasets {
        let s = &d.spec;
        eprintln!("n={} p={} mix={}: {} instances", s.n, s.p, s.mix, d.records.len());
        for (i, e) in &d.incomplete {
            eprintln!("  {} not generated: {e}", s.instance_id(*i));
        }
    }
    Ok(())
}

fn solve(args: SolveArgs) -> anyhow::Result<()> {
    let text =
        std::fs::read_to_string(&args.instance).with_context(|| format!("reading {}", args.instance.display()))?;
    let inst = parse_instance(&text)?;
    let Some(k) = args.k.or(inst.k) else {
        bail!("no color budget: pass --k or add a `c k` comment");
    };
    let pcfg = args.proposer.config(args.seed)?;
    let mut proposer: Box<dyn Proposer> = match pcfg.kind {
        ProposerKind::Remote => Box::new(RemoteProposer::new(pcfg.clone())),
        ProposerKind::Mock => Box::new(MockProposer::from_config(&pcfg, args.seed)?),
    };
    let mut memory: Box<dyn MemoryStore> = match &args.memory {
        Some(path) => Box::new(FileMemory::open(path)?),
        None => Box::new(EpisodicMemory::new()),
    };
    let clock = WallClock::start(secs(args.time_limit)?);
    let mut ctx = Context { proposer: proposer.as_mut(), memory: memory.as_mut(), budget: &clock };
    let (outcome, trace) = run_solver(args.solver, &inst.graph, k, &args.orchestrator.config(), &mut ctx);
    match &outcome {
        SolveOutcome::Sat(a) => println!("SAT\n{}", format_assignment(&inst.graph, a)),
        SolveOutcome::Unsat => println!("UNSAT"),
        SolveOutcome::Timeout => println!("TIMEOUT"),
        SolveOutcome::Failure(reason) => println!("FAILURE {reason}"),
    }
    eprintln!(
        "{}: {} S1 call(s), S2 {}, {:.3}s",
        args.solver,
        trace.s1_calls(),
        if trace.s2_invoked { "invoked" } else { "not invoked" },
        sofai_core::budget::Budget::elapsed(&clock).as_secs_f64()
    );
    for e in &trace.memory_errors {
        eprintln!("memory: {e}");
    }
    Ok(())
}

fn bench(args: BenchArgs) -> anyhow::Result<()> {
    let cfg = RunConfig {
        solver: args.solver,
        time_limit: secs(args.time_limit)?,
        trials: args.trials,
        workers: args.workers,
        proposer: args.proposer.config(args.seed)?,
        orchestrator: args.orchestrator.config(),
        memory: args.memory,
        seed: args.seed,
    };
    let results = run_benchmark(&cfg, &args.dataset, &args.out)?;
    print!("{}", render(&results, Format::Table));
    Ok(())
}

fn report(args: ReportArgs) -> anyhow::Result<()> {
    print!("{}", render(&read_results(Path::new(&args.input))?, args.format));
    Ok(())
}

fn main() -> ExitCode {
    let result = match Cli::parse().command {
        Command::Gen(a) => gen(a),
        Command::Solve(a) => solve(a),
        Command::Bench(a) => bench(a),
        Command::Report(a) => report(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
