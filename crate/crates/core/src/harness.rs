//! Seeded experiments that compare measured behaviour with the runtime bounds.
//!
//! Three modes are supported:
//!
//! - `optimization_time`: full MMAS* runs until the known optimum is reached
//!   (or the iteration cap), compared with the expected-time upper bound.
//! - `construction_probability`: single constructions from the uniform
//!   initial pheromone; the frequency of producing `S` is compared with the
//!   success-probability lower bound.
//! - `adversarial_t1`: single constructions with `l` on the optimum and `h`
//!   elsewhere, `alpha = 1`, `beta = 0`; the worst-case pheromone bound.
//!
//! Trials run in parallel on the rayon pool. Trial `i` always uses
//! [`split_seed`]`(master_seed, i)`, so reports do not depend on scheduling.
//! Bound checks are one-sided and allow three standard errors.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{self, BoundValue, BoundsError};
use crate::hgr::{read_hgr_file, HgrError};
use crate::hypergraph::{EdgeSet, Hypergraph};
use crate::instances::{GeneratorParams, InstanceError, PlantedMetadata};
use crate::oracle::{self, OracleError};
use crate::rng::{rng_from_seed, split_seed};
use crate::solver::{
    fitness, heuristic_info, solve, ConstructionGraph, PheromoneLevels, PheromoneState,
    SolverConfig, SolverError,
};

/// Hard cap on iterations per optimisation-time trial.
pub const MAX_TRIAL_ITERATIONS: u64 = 10_000_000;

/// Number of standard errors allowed below (or above) a bound.
pub const SIGMA_TOLERANCE: f64 = 3.0;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("optimum unknown: no planted cover and the instance is too large for the oracle")]
    UnknownOptimum,
    #[error("instance has pendant vertices; the adversarial pheromone bound assumes none")]
    PendantEdgesPresent,
    #[error("beta = auto needs a planted instance with a beta* threshold")]
    BetaAutoUnavailable,
    #[error("invalid experiment: {0}")]
    InvalidSpec(String),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error(transparent)]
    Instance(#[from] InstanceError),
    #[error(transparent)]
    Hgr(#[from] HgrError),
    #[error(transparent)]
    Bounds(#[from] BoundsError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    OptimizationTime,
    ConstructionProbability,
    AdversarialT1,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundChoice {
    #[default]
    Auto,
    Theorem1,
    Theorem2,
    Theorem3,
    None,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Theorem {
    Theorem1,
    Theorem2,
    Theorem3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AutoKeyword {
    Auto,
}

/// A heuristic exponent, or `"auto"` for `ceil(beta*)` of a planted instance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BetaChoice {
    Fixed(f64),
    Auto(AutoKeyword),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InstanceSource {
    File { path: PathBuf, meta: Option<PathBuf> },
    Generate(GeneratorParams),
}

/// Cartesian grid of solver parameters. Empty pheromone lists mean the
/// per-instance defaults.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct ParameterGrid {
    pub alpha: Vec<f64>,
    pub beta: Vec<BetaChoice>,
    pub pher_high: Vec<f64>,
    pub pher_low: Vec<f64>,
}

impl Default for ParameterGrid {
    fn default() -> Self {
        Self { alpha: vec![1.0], beta: vec![BetaChoice::Fixed(1.0)], pher_high: vec![], pher_low: vec![] }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentSpec {
    pub instance: InstanceSource,
    #[serde(default)]
    pub grid: ParameterGrid,
    pub trials: usize,
    pub mode: Mode,
    #[serde(default)]
    pub master_seed: u64,
    #[serde(default = "default_max_iterations")]
    pub max_iterations: u64,
    #[serde(default)]
    pub bound: BoundChoice,
}

fn default_max_iterations() -> u64 {
    MAX_TRIAL_ITERATIONS
}

impl ExperimentSpec {
    pub fn from_json_file(path: impl AsRef<std::path::Path>) -> Result<Self, HarnessError> {
        Ok(serde_json::from_str(&fs::read_to_string(path)?)?)
    }
}

/// One resolved point of the parameter grid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridPoint {
    pub alpha: f64,
    pub beta: f64,
    pub pher_high: f64,
    pub pher_low: f64,
}

impl GridPoint {
    pub fn levels(&self) -> Result<PheromoneLevels, SolverError> {
        PheromoneLevels::new(self.pher_high, self.pher_low)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OptimumSource {
    Planted,
    Oracle,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Optimum {
    pub cover: EdgeSet,
    pub value: f64,
    pub source: OptimumSource,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub trial: u64,
    pub seed: u64,
    pub iterations: u64,
    pub best_fitness: f64,
    pub success: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Summary {
    pub trials: usize,
    pub successes: usize,
    pub success_frequency: f64,
    pub success_std_error: f64,
    pub mean_iterations: f64,
    pub median_iterations: f64,
    pub iterations_std_error: f64,
}

impl Summary {
    fn from_trials(records: &[TrialRecord]) -> Self {
        let n = records.len() as f64;
        let successes = records.iter().filter(|r| r.success).count();
        let p = successes as f64 / n;
        let mut iters: Vec<u64> = records.iter().map(|r| r.iterations).collect();
        iters.sort_unstable();
        let mean = iters.iter().map(|&i| i as f64).sum::<f64>() / n;
        let median = if iters.len() % 2 == 1 {
            iters[iters.len() / 2] as f64
        } else {
            (iters[iters.len() / 2 - 1] + iters[iters.len() / 2]) as f64 / 2.0
        };
        let var = if records.len() > 1 {
            iters.iter().map(|&i| (i as f64 - mean).powi(2)).sum::<f64>() / (n - 1.0)
        } else {
            0.0
        };
        Self {
            trials: records.len(),
            successes,
            success_frequency: p,
            success_std_error: (p * (1.0 - p) / n).sqrt(),
            mean_iterations: mean,
            median_iterations: median,
            iterations_std_error: (var / n).sqrt(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "bound respected")]
    BoundRespected,
    #[serde(rename = "bound violated")]
    BoundViolated,
    #[serde(rename = "no bound")]
    NoBound,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundCheck {
    pub theorem: Theorem,
    /// Lower bound on the single-construction success probability.
    pub success_probability: BoundValue,
    /// Upper bound on the expected iterations to reach the optimum.
    pub expected_time: BoundValue,
    /// Success frequency or mean iterations, depending on the mode.
    pub measured: f64,
    pub tolerance: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentReport {
    pub mode: Mode,
    pub parameters: GridPoint,
    pub optimum_value: f64,
    pub optimum_source: OptimumSource,
    pub m: usize,
    pub k: usize,
    /// Per-trial rows; written as CSV rather than JSON.
    #[serde(skip)]
    pub records: Vec<TrialRecord>,
    pub summary: Summary,
    pub bound: Option<BoundCheck>,
    pub verdict: Verdict,
}

impl ExperimentReport {
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "trial,seed,iterations,best_fitness,success")?;
        for r in &self.records {
            writeln!(out, "{},{},{},{},{}", r.trial, r.seed, r.iterations, r.best_fitness, r.success)?;
        }
        Ok(())
    }
}

/// A loaded instance with its known optimum and run settings.
#[derive(Debug, Clone)]
pub struct Experiment {
    pub hypergraph: Hypergraph,
    pub optimum: Optimum,
    pub beta_star: Option<f64>,
    pub trials: usize,
    pub master_seed: u64,
    pub max_iterations: u64,
    pub bound: BoundChoice,
}

fn resolve_optimum(h: &Hypergraph, planted: Option<EdgeSet>) -> Result<Optimum, HarnessError> {
    if let Some(cover) = planted {
        if !h.is_edge_cover(&cover) {
            return Err(HarnessError::InvalidSpec("planted cover is not an edge cover".into()));
        }
        let value = fitness(h, &cover);
        return Ok(Optimum { cover, value, source: OptimumSource::Planted });
    }
    match oracle::min_weight_edge_cover(h) {
        Ok(r) => Ok(Optimum { cover: r.witness, value: r.value, source: OptimumSource::Oracle }),
        Err(OracleError::InstanceTooLarge(_)) => Err(HarnessError::UnknownOptimum),
        Err(e) => Err(e.into()),
    }
}

impl Experiment {
    /// `planted` is the known optimal cover, if any; otherwise the oracle is
    /// consulted.
    pub fn new(
        hypergraph: Hypergraph,
        planted: Option<EdgeSet>,
        trials: usize,
        master_seed: u64,
    ) -> Result<Self, HarnessError> {
        if trials == 0 {
            return Err(HarnessError::InvalidSpec("trials must be >= 1".into()));
        }
        let optimum = resolve_optimum(&hypergraph, planted)?;
        Ok(Self {
            hypergraph,
            optimum,
            beta_star: None,
            trials,
            master_seed,
            max_iterations: MAX_TRIAL_ITERATIONS,
            bound: BoundChoice::Auto,
        })
    }

    pub fn load(spec: &ExperimentSpec) -> Result<Self, HarnessError> {
        let (hypergraph, meta) = match &spec.instance {
            InstanceSource::File { path, meta } => {
                let h = read_hgr_file(path)?;
                let meta: Option<PlantedMetadata> = match meta {
                    Some(p) => Some(serde_json::from_str(&fs::read_to_string(p)?)?),
                    None => None,
                };
                (h, meta)
            }
            InstanceSource::Generate(params) => {
                let (h, planted) = params.hypergraph()?;
                (h, planted.map(|p| p.metadata()))
            }
        };
        let beta_star = meta.as_ref().and_then(|m| m.beta_star);
        let mut exp = Self::new(hypergraph, meta.map(|m| m.planted_cover), spec.trials, spec.master_seed)?;
        exp.beta_star = beta_star;
        exp.max_iterations = spec.max_iterations.clamp(1, MAX_TRIAL_ITERATIONS);
        exp.bound = spec.bound;
        Ok(exp)
    }

    pub fn grid_points(&self, grid: &ParameterGrid) -> Result<Vec<GridPoint>, HarnessError> {
        if grid.alpha.is_empty() || grid.beta.is_empty() {
            return Err(HarnessError::InvalidSpec("parameter grid is empty".into()));
        }
        let defaults = PheromoneLevels::default_for(self.hypergraph.m());
        let highs = if grid.pher_high.is_empty() { vec![defaults.high] } else { grid.pher_high.clone() };
        let lows = if grid.pher_low.is_empty() { vec![defaults.low] } else { grid.pher_low.clone() };
        let mut points = Vec::new();
        for &alpha in &grid.alpha {
            for &beta in &grid.beta {
                let beta = match beta {
                    BetaChoice::Fixed(b) => b,
                    BetaChoice::Auto(_) => self.beta_star.ok_or(HarnessError::BetaAutoUnavailable)?.ceil(),
                };
                for &pher_high in &highs {
                    for &pher_low in &lows {
                        PheromoneLevels::new(pher_high, pher_low)?;
                        points.push(GridPoint { alpha, beta, pher_high, pher_low });
                    }
                }
            }
        }
        Ok(points)
    }

    pub fn trial_seed(&self, trial: u64) -> u64 {
        split_seed(self.master_seed, trial)
    }

    fn eta_split(&self) -> (f64, Option<f64>, f64, f64) {
        let eta = heuristic_info(&self.hypergraph);
        let mut inside = f64::INFINITY;
        let mut outside: Option<f64> = None;
        for e in self.hypergraph.edge_ids() {
            if self.optimum.cover.contains(e) {
                inside = inside.min(eta.get(e));
            } else {
                outside = Some(outside.map_or(eta.get(e), |o| o.max(eta.get(e))));
            }
        }
        (inside, outside, eta.max(), eta.min())
    }

    fn pick_theorem(&self, mode: Mode, point: &GridPoint) -> Option<Theorem> {
        match (self.bound, mode) {
            (_, Mode::AdversarialT1) => Some(Theorem::Theorem1),
            (BoundChoice::Theorem1, _) => Some(Theorem::Theorem1),
            (BoundChoice::Theorem2, _) => Some(Theorem::Theorem2),
            (BoundChoice::Theorem3, _) => Some(Theorem::Theorem3),
            (BoundChoice::None, _) => None,
            // Uniform initial pheromone makes tau^alpha a constant factor.
            (BoundChoice::Auto, m) if point.alpha == 0.0 || m == Mode::ConstructionProbability => {
                let (inside, outside, _, _) = self.eta_split();
                match outside {
                    Some(out) if inside <= out => Some(Theorem::Theorem2),
                    _ => Some(Theorem::Theorem3),
                }
            }
            (BoundChoice::Auto, _) if point.beta == 0.0 => Some(Theorem::Theorem1),
            (BoundChoice::Auto, _) => None,
        }
    }

    /// Success-probability lower bound of `theorem` at `point`.
    pub fn success_bound(&self, theorem: Theorem, point: &GridPoint) -> Result<BoundValue, HarnessError> {
        let m = self.hypergraph.m();
        let k = self.optimum.cover.len();
        let (inside, outside, eta_max, eta_min) = self.eta_split();
        Ok(match theorem {
            Theorem::Theorem1 => bounds::theorem1_success_probability(m, k, point.pher_high / point.pher_low)?,
            Theorem::Theorem2 => bounds::theorem2_pmin(m, k, eta_max, eta_min, point.beta)?,
            Theorem::Theorem3 => match outside {
                Some(out) => bounds::theorem3_pmin(m, k, inside, out, point.beta)?,
                None => BoundValue { value: 1.0, log_value: 0.0 },
            },
        })
    }

    fn finish(
        &self,
        mode: Mode,
        point: GridPoint,
        records: Vec<TrialRecord>,
    ) -> Result<ExperimentReport, HarnessError> {
        let summary = Summary::from_trials(&records);
        let (bound, verdict) = match self.pick_theorem(mode, &point) {
            None => (None, Verdict::NoBound),
            Some(theorem) => {
                let success_probability = self.success_bound(theorem, &point)?;
                let expected_time = success_probability.reciprocal();
                let (measured, tolerance, ok) = match mode {
                    Mode::OptimizationTime => {
                        let tol = SIGMA_TOLERANCE * summary.iterations_std_error;
                        (summary.mean_iterations, tol, summary.mean_iterations <= expected_time.value + tol)
                    }
                    _ => {
                        let tol = SIGMA_TOLERANCE * summary.success_std_error;
                        (
                            summary.success_frequency,
                            tol,
                            summary.success_frequency >= success_probability.value - tol,
                        )
                    }
                };
                let check = BoundCheck { theorem, success_probability, expected_time, measured, tolerance };
                (Some(check), if ok { Verdict::BoundRespected } else { Verdict::BoundViolated })
            }
        };
        Ok(ExperimentReport {
            mode,
            parameters: point,
            optimum_value: self.optimum.value,
            optimum_source: self.optimum.source,
            m: self.hypergraph.m(),
            k: self.optimum.cover.len(),
            records,
            summary,
            bound,
            verdict,
        })
    }

    fn target(&self) -> f64 {
        let v = self.optimum.value;
        v + 1e-9 * v.abs().max(1.0)
    }

    /// Full solver runs stopping at the known optimum.
    pub fn run_optimization_time(&self, point: GridPoint) -> Result<ExperimentReport, HarnessError> {
        let target = self.target();
        let records = (0..self.trials as u64)
            .into_par_iter()
            .map(|trial| {
                let seed = self.trial_seed(trial);
                let cfg = SolverConfig {
                    alpha: point.alpha,
                    beta: point.beta,
                    pher_high: Some(point.pher_high),
                    pher_low: Some(point.pher_low),
                    max_iterations: self.max_iterations,
                    target_fitness: Some(target),
                    seed,
                    record_trace: false,
                };
                let r = solve(&self.hypergraph, &cfg)?;
                let success = r.reached(target);
                let iterations = if success { r.iteration_found } else { r.iterations_run };
                Ok(TrialRecord { trial, seed, iterations, best_fitness: r.best_fitness, success })
            })
            .collect::<Result<Vec<_>, HarnessError>>()?;
        self.finish(Mode::OptimizationTime, point, records)
    }

    fn run_constructions(
        &self,
        pher: &PheromoneState,
        alpha: f64,
        beta: f64,
    ) -> Result<Vec<TrialRecord>, HarnessError> {
        let graph = ConstructionGraph::new(&self.hypergraph);
        let eta = heuristic_info(&self.hypergraph);
        (0..self.trials as u64)
            .into_par_iter()
            .map(|trial| {
                let seed = self.trial_seed(trial);
                let mut rng = rng_from_seed(seed);
                let x = graph.construct(pher, &eta, alpha, beta, &mut rng)?;
                Ok(TrialRecord {
                    trial,
                    seed,
                    iterations: 1,
                    best_fitness: fitness(&self.hypergraph, &x),
                    success: x == self.optimum.cover,
                })
            })
            .collect()
    }

    /// Single constructions from the uniform initial pheromone.
    pub fn run_construction_probability(&self, point: GridPoint) -> Result<ExperimentReport, HarnessError> {
        let pher = ConstructionGraph::new(&self.hypergraph).initial_pheromone();
        let records = self.run_constructions(&pher, point.alpha, point.beta)?;
        self.finish(Mode::ConstructionProbability, point, records)
    }

    /// Single constructions from the worst-case pheromone state (`l` on the
    /// optimum, `h` elsewhere) with `alpha = 1`, `beta = 0`.
    pub fn run_adversarial_t1(&self, point: GridPoint) -> Result<ExperimentReport, HarnessError> {
        if !self.hypergraph.forced_edges().is_empty() {
            return Err(HarnessError::PendantEdgesPresent);
        }
        let levels = point.levels()?;
        let pher = PheromoneState::from_levels(
            self.hypergraph
                .edge_ids()
                .map(|e| if self.optimum.cover.contains(e) { levels.low } else { levels.high })
                .collect(),
        );
        let point = GridPoint { alpha: 1.0, beta: 0.0, ..point };
        let records = self.run_constructions(&pher, 1.0, 0.0)?;
        self.finish(Mode::AdversarialT1, point, records)
    }

    pub fn run(&self, mode: Mode, point: GridPoint) -> Result<ExperimentReport, HarnessError> {
        match mode {
            Mode::OptimizationTime => self.run_optimization_time(point),
            Mode::ConstructionProbability => self.run_construction_probability(point),
            Mode::AdversarialT1 => self.run_adversarial_t1(point),
        }
    }
}

/// Loads the instance and runs every grid point, in grid order.
pub fn run_experiment(spec: &ExperimentSpec) -> Result<Vec<ExperimentReport>, HarnessError> {
    let exp = Experiment::load(spec)?;
    exp.grid_points(&spec.grid)?
        .into_iter()
        .map(|point| exp.run(spec.mode, point))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::{EdgeId, Hyperedge};

    fn single_edge() -> Hypergraph {
        Hypergraph::new(3, vec![Hyperedge::new([1, 2, 3], 2.0)]).unwrap()
    }

    fn point(alpha: f64, beta: f64) -> GridPoint {
        GridPoint { alpha, beta, pher_high: 0.9, pher_low: 0.1 }
    }

    #[test]
    fn single_edge_always_optimal_at_first_iteration() {
        let exp = Experiment::new(single_edge(), None, 50, 1).unwrap();
        let r = exp.run_optimization_time(point(1.0, 1.0)).unwrap();
        assert!(r.records.iter().all(|t| t.success && t.iterations == 1));
        assert_eq!(r.summary.mean_iterations, 1.0);
        assert_eq!(r.optimum_source, OptimumSource::Oracle);
    }

    #[test]
    fn uniform_construction_on_two_edges() {
        let h = Hypergraph::new(
            3,
            vec![Hyperedge::new([1, 2], 1.0), Hyperedge::new([2, 3], 1.0), Hyperedge::new([1, 3], 1.0)],
        )
        .unwrap();
        let planted: EdgeSet = [EdgeId::new(1), EdgeId::new(2)].into_iter().collect();
        let exp = Experiment::new(h, Some(planted), 30_000, 9).unwrap();
        let r = exp.run_construction_probability(point(0.0, 0.0)).unwrap();
        // Uniform first pick over 3 edges; S = {e1, e2} is produced when the
        // first two picks are e1, e2 in either order: 2 * (1/3 * 1/2) = 1/3.
        assert!((r.summary.success_frequency - 1.0 / 3.0).abs() < 4.0 * r.summary.success_std_error);
        assert_eq!(r.verdict, Verdict::BoundRespected);
    }

    #[test]
    fn adversarial_rejects_pendants() {
        let h = Hypergraph::new(3, vec![Hyperedge::new([1, 2], 1.0), Hyperedge::new([2, 3], 1.0)]).unwrap();
        let exp = Experiment::new(h, None, 10, 0).unwrap();
        assert!(matches!(exp.run_adversarial_t1(point(1.0, 0.0)), Err(HarnessError::PendantEdgesPresent)));
    }

    #[test]
    fn adversarial_all_edges_optimal() {
        // Duplicated edge: pendant-free, k = 1, m = 2.
        let h = Hypergraph::new(2, vec![Hyperedge::new([1, 2], 1.0), Hyperedge::new([1, 2], 1.0)]).unwrap();
        let exp = Experiment::new(h, Some([EdgeId::new(1)].into_iter().collect()), 100, 0).unwrap();
        let r = exp.run_adversarial_t1(point(1.0, 0.0)).unwrap();
        // p = l / (l + h) = 0.1 against the closed form 1/((1*9+1)!/(9! 1!)) = 0.1
        assert!((r.bound.unwrap().success_probability.value - 0.1).abs() < 1e-12);
    }

    #[test]
    fn reports_are_reproducible() {
        let h = crate::instances::gen_random(6, 8, 3, true, 5).unwrap();
        let exp = Experiment::new(h, None, 64, 77).unwrap();
        let a = exp.run_optimization_time(point(1.0, 1.0)).unwrap();
        let b = exp.run_optimization_time(point(1.0, 1.0)).unwrap();
        assert_eq!(a, b);
        let seeds: std::collections::HashSet<u64> = a.records.iter().map(|r| r.seed).collect();
        assert_eq!(seeds.len(), 64);
    }

    #[test]
    fn grid_expansion_and_auto_beta() {
        let spec = ExperimentSpec {
            instance: InstanceSource::Generate(GeneratorParams::Instance1 { n: 4, r: 2, seed: 0, rand_max: 2 }),
            grid: ParameterGrid {
                alpha: vec![0.0, 1.0],
                beta: vec![BetaChoice::Auto(AutoKeyword::Auto), BetaChoice::Fixed(1.0)],
                pher_high: vec![0.9],
                pher_low: vec![0.1, 0.3],
            },
            trials: 10,
            mode: Mode::ConstructionProbability,
            master_seed: 0,
            max_iterations: 100,
            bound: BoundChoice::Auto,
        };
        let exp = Experiment::load(&spec).unwrap();
        let points = exp.grid_points(&spec.grid).unwrap();
        assert_eq!(points.len(), 8);
        assert_eq!(points[0].beta, 3.0);

        let random = ExperimentSpec {
            instance: InstanceSource::Generate(GeneratorParams::Random { n: 4, m: 4, max_card: 2, weighted: false, seed: 0 }),
            ..spec.clone()
        };
        let exp = Experiment::load(&random).unwrap();
        assert!(matches!(exp.grid_points(&random.grid), Err(HarnessError::BetaAutoUnavailable)));
    }

    #[test]
    fn spec_json_round_trip() {
        let text = r#"{
            "instance": {"generate": {"generator": "instance1", "n": 4, "r": 2, "seed": 0, "rand_max": 2}},
            "grid": {"alpha": [0], "beta": ["auto", 2.5]},
            "trials": 5,
            "mode": "optimization_time"
        }"#;
        let spec: ExperimentSpec = serde_json::from_str(text).unwrap();
        assert_eq!(spec.max_iterations, MAX_TRIAL_ITERATIONS);
        assert_eq!(spec.grid.beta[1], BetaChoice::Fixed(2.5));
        let reports = run_experiment(&spec).unwrap();
        assert_eq!(reports.len(), 2);
        let v = serde_json::to_value(&reports[0]).unwrap();
        assert_eq!(v["verdict"], "bound respected");
        assert!(v.get("records").is_none());
    }

    #[test]
    fn csv_rows() {
        let exp = Experiment::new(single_edge(), None, 2, 1).unwrap();
        let r = exp.run_construction_probability(point(1.0, 1.0)).unwrap();
        let mut buf = Vec::new();
        r.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "trial,seed,iterations,best_fitness,success");
        assert_eq!(lines.len(), 3);
        assert!(lines[1].starts_with(&format!("0,{},1,2,true", exp.trial_seed(0))));
    }

    #[test]
    fn unknown_optimum_for_large_unplanted_instances() {
        let edges: Vec<_> = (1..=25).map(|v| Hyperedge::unweighted([v])).collect();
        let h = Hypergraph::new(25, edges).unwrap();
        assert!(matches!(Experiment::new(h, None, 1, 0), Err(HarnessError::UnknownOptimum)));
    }
}
