mod args;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::Parser;
use hyperaco::harness::{
    run_experiment, AutoKeyword, BetaChoice, BoundChoice, ExperimentReport, ExperimentSpec, HarnessError,
    InstanceSource, Mode, ParameterGrid,
};
use hyperaco::hgr::{read_hgr_file, write_hgr, HgrError};
use hyperaco::oracle::{max_weak_independent_set, min_vertex_cover, min_weight_edge_cover};
use hyperaco::reductions::{solve_vertex_cover, solve_weak_independent_set};
use hyperaco::{bounds, solve, BoundValue, BoundsError, GeneratorParams, OracleError, SolverConfig, SolverError};
use serde::Serialize;
use serde_json::{json, Value};

use args::{BoundArg, BoundsCommand, Cli, Command, ExperimentArgs, Family, GenArgs, GenParams, ModeArg, Problem};

#[derive(Debug)]
enum CliError {
    Usage(String),
    Instance(String),
    TargetMissed,
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Instance(_) => 2,
            CliError::TargetMissed => 3,
        }
    }
}

impl From<HgrError> for CliError {
    fn from(e: HgrError) -> Self {
        CliError::Instance(e.to_string())
    }
}

impl From<hyperaco::InstanceError> for CliError {
    fn from(e: hyperaco::InstanceError) -> Self {
        CliError::Instance(e.to_string())
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        CliError::Instance(e.to_string())
    }
}

impl From<SolverError> for CliError {
    fn from(e: SolverError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<BoundsError> for CliError {
    fn from(e: BoundsError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<HarnessError> for CliError {
    fn from(e: HarnessError) -> Self {
        match e {
            HarnessError::Hgr(e) => e.into(),
            HarnessError::Instance(e) => e.into(),
            HarnessError::Oracle(e) => e.into(),
            e @ (HarnessError::UnknownOptimum | HarnessError::PendantEdgesPresent) => CliError::Instance(e.to_string()),
            e => CliError::Usage(e.to_string()),
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

/// Keys are sorted because `serde_json::Map` is ordered by key.
fn canonical<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("serializable");
    serde_json::to_string_pretty(&v).expect("valid json")
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    let mut out = io::stdout().lock();
    writeln!(out, "{}", canonical(value))?;
    Ok(())
}

fn seed_or_default(strict: bool, seed: Option<u64>, flag: &str) -> Result<u64> {
    match seed {
        Some(s) => Ok(s),
        None if strict => Err(CliError::Usage(format!("{flag} is required in --strict mode"))),
        None => Ok(0),
    }
}

fn missing(flag: &str, family: &str) -> CliError {
    CliError::Usage(format!("{flag} is required for {family}"))
}

fn generator_params(family: Family, p: &GenParams, seed: u64) -> Result<GeneratorParams> {
    Ok(match family {
        Family::Instance1 => GeneratorParams::Instance1 {
            n: p.n.ok_or_else(|| missing("--n", "instance1"))?,
            r: p.r.ok_or_else(|| missing("--r", "instance1"))?,
            seed,
            rand_max: p.rand_max,
        },
        Family::Instance2 => {
            if p.p_sequence.is_empty() {
                return Err(missing("--p-sequence", "instance2"));
            }
            GeneratorParams::Instance2 {
                n: p.n.ok_or_else(|| missing("--n", "instance2"))?,
                p_sequence: p.p_sequence.clone(),
                extra_edges: p.extra_edges,
                seed,
            }
        }
        Family::Random => {
            let n = p.n.ok_or_else(|| missing("--n", "random"))?;
            GeneratorParams::Random {
                n,
                m: p.m.ok_or_else(|| missing("--m", "random"))?,
                max_card: p.max_card.unwrap_or(n),
                weighted: p.weighted,
                seed,
            }
        }
    })
}

fn sidecar_path(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".json");
    PathBuf::from(name)
}

fn cmd_gen(args: GenArgs, strict: bool) -> Result<()> {
    let seed = seed_or_default(strict, args.seed, "--seed")?;
    let (h, planted) = generator_params(args.family, &args.params, seed)?.hypergraph()?;
    let text = write_hgr(&h);
    match &args.out {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    if let Some(planted) = planted {
        let meta = args.meta.clone().or_else(|| args.out.as_deref().map(sidecar_path));
        if let Some(path) = meta {
            fs::write(path, canonical(&planted.metadata()) + "\n")?;
        }
    } else if args.meta.is_some() {
        return Err(CliError::Usage("--meta: random instances have no planted cover".into()));
    }
    Ok(())
}

fn cmd_solve(args: args::SolveArgs, strict: bool) -> Result<()> {
    let h = read_hgr_file(&args.file)?;
    let seed = seed_or_default(strict, args.seed, "--seed")?;
    // The weak-IS objective is maximised; the solver minimises its complement.
    let solver_target = match (args.problem, args.target) {
        (Problem::WeakIs, Some(t)) => Some(h.n() as f64 - t),
        (_, t) => t,
    };
    let cfg = SolverConfig {
        alpha: args.alpha,
        beta: args.beta,
        pher_high: args.pher_high,
        pher_low: args.pher_low,
        max_iterations: args.max_iters,
        target_fitness: solver_target,
        seed,
        record_trace: args.trace,
    };
    let (value, witness, run) = match args.problem {
        Problem::EdgeCover => {
            let r = solve(&h, &cfg)?;
            (r.best_fitness, json!(r.best_edges), r)
        }
        Problem::VertexCover => {
            let c = solve_vertex_cover(&h, &cfg)?;
            (c.value, json!(c.witness), c.dual_result)
        }
        Problem::WeakIs => {
            let c = solve_weak_independent_set(&h, &cfg)?;
            (c.value, json!(c.witness), c.dual_result)
        }
    };
    let reached = solver_target.map(|t| run.reached(t));
    let mut out = json!({
        "problem": problem_name(args.problem),
        "value": value,
        "witness": witness,
        "iterations_run": run.iterations_run,
        "iteration_found": run.iteration_found,
        "seed": seed,
    });
    if let Some(t) = args.target {
        out["target"] = json!(t);
        out["reached_target"] = json!(reached == Some(true));
    }
    if let Some(trace) = &run.trace {
        out["trace"] = json!(trace);
    }
    print_json(&out)?;
    match reached {
        Some(false) => Err(CliError::TargetMissed),
        _ => Ok(()),
    }
}

fn problem_name(p: Problem) -> &'static str {
    match p {
        Problem::EdgeCover => "edge-cover",
        Problem::VertexCover => "vertex-cover",
        Problem::WeakIs => "weak-is",
    }
}

fn cmd_oracle(args: args::OracleArgs) -> Result<()> {
    let h = read_hgr_file(&args.file)?;
    let out = match args.problem {
        Problem::EdgeCover => serde_json::to_value(min_weight_edge_cover(&h)?),
        Problem::VertexCover => serde_json::to_value(min_vertex_cover(&h)?),
        Problem::WeakIs => serde_json::to_value(max_weak_independent_set(&h)?),
    }
    .expect("serializable");
    let mut out = out;
    out["problem"] = json!(problem_name(args.problem));
    print_json(&out)
}

fn bound_json(theorem: &str, inputs: Value, time: BoundValue) -> Value {
    let p = time.reciprocal();
    json!({
        "theorem": theorem,
        "inputs": inputs,
        "value": time.value,
        "log_value": time.log_value,
        "success_probability": { "value": p.value, "log_value": p.log_value },
    })
}

fn cmd_bounds(cmd: BoundsCommand) -> Result<()> {
    let out = match cmd {
        BoundsCommand::Theorem1 { m, k, c_n } => {
            bound_json("theorem1", json!({ "m": m, "k": k, "c_n": c_n }), bounds::theorem1_bound(m, k, c_n)?)
        }
        BoundsCommand::Theorem2 { m, k, eta_max, eta_min, beta } => bound_json(
            "theorem2",
            json!({ "m": m, "k": k, "eta_max": eta_max, "eta_min": eta_min, "beta": beta }),
            bounds::theorem2_bound(m, k, eta_max, eta_min, beta)?,
        ),
        BoundsCommand::BetaStar { m, k, eta_prime_min, eta_1_max } => {
            let value = bounds::beta_star(m, k, eta_prime_min, eta_1_max)?;
            json!({
                "theorem": "beta_star",
                "inputs": { "m": m, "k": k, "eta_prime_min": eta_prime_min, "eta_1_max": eta_1_max },
                "value": value,
                "log_value": value.ln(),
            })
        }
        BoundsCommand::Theorem3 { m, k, eta_prime_min, eta_1_max, beta } => bound_json(
            "theorem3",
            json!({ "m": m, "k": k, "eta_prime_min": eta_prime_min, "eta_1_max": eta_1_max, "beta": beta }),
            bounds::theorem3_pmin(m, k, eta_prime_min, eta_1_max, beta)?.reciprocal(),
        ),
    };
    print_json(&out)
}

fn parse_beta(s: &str) -> Result<BetaChoice> {
    if s.eq_ignore_ascii_case("auto") {
        return Ok(BetaChoice::Auto(AutoKeyword::Auto));
    }
    s.parse::<f64>()
        .map(BetaChoice::Fixed)
        .map_err(|_| CliError::Usage(format!("--beta: expected a number or \"auto\", got {s:?}")))
}

fn experiment_spec(args: &ExperimentArgs, strict: bool) -> Result<ExperimentSpec> {
    if let Some(path) = &args.config {
        let text = fs::read_to_string(path)?;
        let raw: Value = serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("--config: {e}")))?;
        if strict && raw.get("master_seed").is_none() {
            return Err(CliError::Usage("--config: master_seed is required in --strict mode".into()));
        }
        return serde_json::from_value(raw).map_err(|e| CliError::Usage(format!("--config: {e}")));
    }
    let instance = match (&args.gen, &args.instance) {
        (Some(family), _) => {
            let seed = seed_or_default(strict, args.gen_seed, "--gen-seed")?;
            InstanceSource::Generate(generator_params(*family, &args.params, seed)?)
        }
        (None, Some(path)) => InstanceSource::File { path: path.clone(), meta: args.meta.clone() },
        (None, None) => return Err(CliError::Usage("one of --config, --gen or --instance is required".into())),
    };
    Ok(ExperimentSpec {
        instance,
        grid: ParameterGrid {
            alpha: vec![args.alpha],
            beta: vec![parse_beta(&args.beta)?],
            pher_high: args.pher_high.into_iter().collect(),
            pher_low: args.pher_low.into_iter().collect(),
        },
        trials: args.trials,
        mode: match args.mode {
            ModeArg::OptimizationTime => Mode::OptimizationTime,
            ModeArg::ConstructionProbability => Mode::ConstructionProbability,
            ModeArg::AdversarialT1 => Mode::AdversarialT1,
        },
        master_seed: seed_or_default(strict, args.seed, "--seed")?,
        max_iterations: args.max_iters,
        bound: match args.bound {
            BoundArg::Auto => BoundChoice::Auto,
            BoundArg::Theorem1 => BoundChoice::Theorem1,
            BoundArg::Theorem2 => BoundChoice::Theorem2,
            BoundArg::Theorem3 => BoundChoice::Theorem3,
            BoundArg::None => BoundChoice::None,
        },
    })
}

fn csv_path(out: &Path, index: usize, count: usize) -> PathBuf {
    if count == 1 {
        return out.to_path_buf();
    }
    let stem = out.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let name = match out.extension() {
        Some(ext) => format!("{stem}-{index}.{}", ext.to_string_lossy()),
        None => format!("{stem}-{index}"),
    };
    out.with_file_name(name)
}

fn cmd_experiment(args: ExperimentArgs, strict: bool) -> Result<()> {
    let spec = experiment_spec(&args, strict)?;
    let reports: Vec<ExperimentReport> = run_experiment(&spec)?;
    if let Some(out) = &args.out {
        for (i, report) in reports.iter().enumerate() {
            let file = fs::File::create(csv_path(out, i, reports.len()))?;
            report.write_csv(io::BufWriter::new(file))?;
        }
    }
    print_json(&reports)
}

fn cmd_validate(file: &Path) -> Result<()> {
    let h = read_hgr_file(file)?;
    print_json(&json!({
        "valid": true,
        "n": h.n(),
        "m": h.m(),
        "unweighted": h.is_unweighted(),
        "pendant_vertices": h.pendant_vertices(),
        "forced_edges": h.forced_edges(),
    }))
}

fn configure_threads() -> Result<()> {
    let Ok(raw) = std::env::var("HYPERACO_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| CliError::Usage(format!("HYPERACO_THREADS: expected a positive integer, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Usage(format!("HYPERACO_THREADS: {e}")))
}

fn run(cli: Cli) -> Result<()> {
    configure_threads()?;
    let strict = cli.strict;
    match cli.command {
        Command::Gen(args) => cmd_gen(args, strict),
        Command::Solve(args) => cmd_solve(args, strict),
        Command::Oracle(args) => cmd_oracle(args),
        Command::Bounds(cmd) => cmd_bounds(cmd),
        Command::Experiment(args) => cmd_experiment(args, strict),
        Command::Validate { file } => cmd_validate(&file),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            match &e {
                CliError::Usage(msg) | CliError::Instance(msg) => eprintln!("error: {msg}"),
                CliError::TargetMissed => eprintln!("error: iteration budget exhausted before reaching --target"),
            }
            ExitCode::from(e.code())
        }
    }
}
