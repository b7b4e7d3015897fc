use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

const AFTER_HELP: &str = "\
Exit status: 0 success, 1 usage error, 2 invalid or unreadable instance, \
3 iteration budget exhausted before reaching --target.
Set HYPERACO_THREADS to limit the worker threads used for experiment trials.";

/// Ant colony optimisation (MMAS*) for covering problems on hypergraphs.
#[derive(Debug, Parser)]
#[command(name = "hyperaco", version, after_help = AFTER_HELP)]
pub struct Cli {
    /// Require an explicit --seed for every randomized subcommand.
    #[arg(long, global = true)]
    pub strict: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate an instance and write it in HGR format.
    ///
    /// Planted families also emit a JSON sidecar describing the planted cover.
    Gen(GenArgs),
    /// Run the MMAS* solver on an HGR instance and print the result as JSON.
    Solve(SolveArgs),
    /// Solve exactly by exhaustive enumeration (at most 24 edges or vertices).
    Oracle(OracleArgs),
    /// Evaluate the closed-form runtime and success-probability bounds.
    #[command(subcommand)]
    Bounds(BoundsCommand),
    /// Run seeded repeated trials and compare them against the bounds.
    Experiment(ExperimentArgs),
    /// Check that an HGR file describes a valid hypergraph.
    Validate {
        /// HGR instance file.
        file: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// Complete weighted r-uniform hypergraph with planted unit-weight cover.
    Instance1,
    /// Unweighted hypergraph built around a planted minimum cover.
    Instance2,
    /// Random hypergraph with uniformly drawn cardinalities (no planted cover).
    Random,
}

/// Generator parameters. Which ones are required depends on the family:
/// instance1 needs --n --r; instance2 needs --n --p-sequence; random needs
/// --n --m.
#[derive(Debug, Clone, Args)]
pub struct GenParams {
    /// Number of vertices.
    #[arg(long)]
    pub n: Option<usize>,
    /// Edge cardinality (instance1).
    #[arg(long)]
    pub r: Option<usize>,
    /// Largest random weight of non-planted edges (instance1, at least 2).
    #[arg(long, default_value_t = 10)]
    pub rand_max: u32,
    /// Non-increasing edge sizes, comma separated; the last one repeats (instance2).
    #[arg(long, value_delimiter = ',')]
    pub p_sequence: Vec<usize>,
    /// Distinct edges added after the planted cover is complete (instance2).
    #[arg(long, default_value_t = 0)]
    pub extra_edges: usize,
    /// Number of edges (random).
    #[arg(long)]
    pub m: Option<usize>,
    /// Largest edge cardinality (random); defaults to n.
    #[arg(long)]
    pub max_card: Option<usize>,
    /// Draw integer weights in [1, 10] instead of unit weights (random).
    #[arg(long)]
    pub weighted: bool,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// Instance family.
    #[arg(value_enum)]
    pub family: Family,
    #[command(flatten)]
    pub params: GenParams,
    /// Generator seed [default: 0].
    #[arg(long)]
    pub seed: Option<u64>,
    /// Output HGR path; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Sidecar metadata path [default: <out>.json when --out is given].
    #[arg(long)]
    pub meta: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Problem {
    /// Minimum-weight edge cover.
    EdgeCover,
    /// Minimum vertex cover, solved on the dual hypergraph.
    VertexCover,
    /// Maximum weak-independent set, the complement of a vertex cover.
    WeakIs,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// HGR instance file.
    pub file: PathBuf,
    #[arg(long, value_enum, default_value_t = Problem::EdgeCover)]
    pub problem: Problem,
    /// Pheromone exponent.
    #[arg(long, default_value_t = 1.0)]
    pub alpha: f64,
    /// Heuristic exponent (heuristic value is |e| / w(e)).
    #[arg(long, default_value_t = 1.0)]
    pub beta: f64,
    /// Pheromone level on best-so-far edges [default: 1 - 1/m, m = edges of the solved hypergraph].
    #[arg(long)]
    pub pher_high: Option<f64>,
    /// Pheromone level on all other edges [default: 1/m].
    #[arg(long)]
    pub pher_low: Option<f64>,
    /// Iteration budget (one construction per iteration).
    #[arg(long, default_value_t = 10_000)]
    pub max_iters: u64,
    /// Solver seed [default: 0].
    #[arg(long)]
    pub seed: Option<u64>,
    /// Stop once the objective is at least this good: total weight for
    /// edge-cover, cardinality for vertex-cover (at most) and weak-is (at least).
    #[arg(long)]
    pub target: Option<f64>,
    /// Include every best-so-far improvement in the output.
    #[arg(long)]
    pub trace: bool,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    /// HGR instance file.
    pub file: PathBuf,
    #[arg(long, value_enum, default_value_t = Problem::EdgeCover)]
    pub problem: Problem,
}

#[derive(Debug, Subcommand)]
pub enum BoundsCommand {
    /// Expected optimisation time ((m-k)c + k)! / (((m-k)c)! k!) with alpha = 1, beta = 0.
    Theorem1 {
        /// Number of edges.
        #[arg(long)]
        m: usize,
        /// Size of the optimal cover.
        #[arg(long)]
        k: usize,
        /// Pheromone ratio h/l (at least 1).
        #[arg(long)]
        c_n: f64,
    },
    /// Expected time [1 + (eta_max/eta_min)^beta (m-k)]^k with alpha = 0.
    Theorem2 {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        eta_max: f64,
        #[arg(long)]
        eta_min: f64,
        #[arg(long, default_value_t = 1.0)]
        beta: f64,
    },
    /// Smallest beta giving success probability at least 1/e per construction.
    BetaStar {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        /// Smallest heuristic value inside the optimal cover.
        #[arg(long)]
        eta_prime_min: f64,
        /// Largest heuristic value outside the optimal cover.
        #[arg(long)]
        eta_1_max: f64,
    },
    /// Expected time [1 + (eta_1max/eta'_min)^beta (m-k)]^k with alpha = 0.
    Theorem3 {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        eta_prime_min: f64,
        #[arg(long)]
        eta_1_max: f64,
        #[arg(long)]
        beta: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    /// Full solver runs; measures iterations until the optimum.
    #[value(name = "optimization_time", alias = "optimization-time")]
    OptimizationTime,
    /// Single constructions from uniform pheromone; measures success frequency.
    #[value(name = "construction_probability", alias = "construction-probability")]
    ConstructionProbability,
    /// Single constructions from the worst pheromone state with alpha = 1, beta = 0.
    #[value(name = "adversarial_t1", alias = "adversarial-t1")]
    AdversarialT1,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BoundArg {
    /// Pick the bound matching the regime, if any.
    Auto,
    Theorem1,
    Theorem2,
    Theorem3,
    /// Report statistics only.
    None,
}

#[derive(Debug, Args)]
pub struct ExperimentArgs {
    /// JSON experiment description (instance, grid, trials, mode, master_seed, max_iterations, bound).
    #[arg(long, conflicts_with_all = ["gen", "instance"])]
    pub config: Option<PathBuf>,
    /// Generate the instance from this family.
    #[arg(long, value_enum, conflicts_with = "instance")]
    pub gen: Option<Family>,
    #[command(flatten)]
    pub params: GenParams,
    /// Seed for --gen [default: 0].
    #[arg(long)]
    pub gen_seed: Option<u64>,
    /// Read the instance from an HGR file.
    #[arg(long)]
    pub instance: Option<PathBuf>,
    /// Planted-cover sidecar for --instance; without it the optimum comes from the oracle.
    #[arg(long, requires = "instance")]
    pub meta: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = ModeArg::OptimizationTime)]
    pub mode: ModeArg,
    /// Number of independent trials.
    #[arg(long, default_value_t = 1000)]
    pub trials: usize,
    #[arg(long, default_value_t = 1.0)]
    pub alpha: f64,
    /// Heuristic exponent, or "auto" for ceil(beta*) of a planted instance.
    #[arg(long, default_value = "1")]
    pub beta: String,
    /// Pheromone level h [default: 1 - 1/m].
    #[arg(long)]
    pub pher_high: Option<f64>,
    /// Pheromone level l [default: 1/m].
    #[arg(long)]
    pub pher_low: Option<f64>,
    /// Iteration cap per optimization_time trial.
    #[arg(long, default_value_t = 10_000_000)]
    pub max_iters: u64,
    /// Master seed; trial seeds are derived from it [default: 0].
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, value_enum, default_value_t = BoundArg::Auto)]
    pub bound: BoundArg,
    /// Per-trial CSV path. With several grid points, files are suffixed -0, -1, ...
    #[arg(long)]
    pub out: Option<PathBuf>,
}
