//! MMAS* for minimum-weight edge cover.
//!
//! The ant walks a construction graph whose nodes are the non-forced
//! hyperedges (edges holding a pendant vertex are preselected). At each step
//! it picks an unvisited edge that still covers a new vertex, with
//! probability proportional to `tau^alpha * eta^beta`, until every vertex is
//! covered.
//!
//! The update rule sets every arc entering a best-so-far node to `h` and all
//! other arcs to `l`, and initialisation is uniform, so the pheromone on an
//! arc depends only on its head. [`PheromoneState`] therefore keeps one level
//! per node; this is exact, not an approximation.

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hypergraph::{EdgeId, EdgeSet, Hypergraph, VertexSet};
use crate::rng::rng_from_seed;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolverError {
    #[error("invalid solver configuration: {0}")]
    InvalidConfig(String),
    #[error("no candidate edges to select from")]
    NoCandidates,
    #[error("selection weights sum to {0}; check alpha, beta and pheromone levels")]
    DegenerateWeights(f64),
}

/// Solver parameters. `pher_high`/`pher_low` default to `1 - 1/m` and `1/m`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SolverConfig {
    pub alpha: f64,
    pub beta: f64,
    pub pher_high: Option<f64>,
    pub pher_low: Option<f64>,
    pub max_iterations: u64,
    pub target_fitness: Option<f64>,
    pub seed: u64,
    /// Record every improvement of the best-so-far solution.
    pub record_trace: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            alpha: 1.0,
            beta: 1.0,
            pher_high: None,
            pher_low: None,
            max_iterations: 10_000,
            target_fitness: None,
            seed: 0,
            record_trace: false,
        }
    }
}

/// The two pheromone values used after the first update.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PheromoneLevels {
    pub high: f64,
    pub low: f64,
}

impl PheromoneLevels {
    pub fn new(high: f64, low: f64) -> Result<Self, SolverError> {
        if !(low > 0.0 && low <= high && high.is_finite()) {
            return Err(SolverError::InvalidConfig(format!(
                "pheromone levels need 0 < l <= h, got h={high}, l={low}"
            )));
        }
        Ok(Self { high, low })
    }

    /// `l = 1/m`, `h = max(1 - 1/m, l)`.
    pub fn default_for(m: usize) -> Self {
        let low = 1.0 / m as f64;
        Self { high: (1.0 - low).max(low), low }
    }

    /// `c_n = h / l`.
    pub fn ratio(&self) -> f64 {
        self.high / self.low
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<(), SolverError> {
        if !(self.alpha >= 0.0 && self.alpha.is_finite()) {
            return Err(SolverError::InvalidConfig(format!("alpha must be >= 0, got {}", self.alpha)));
        }
        if !(self.beta >= 0.0 && self.beta.is_finite()) {
            return Err(SolverError::InvalidConfig(format!("beta must be >= 0, got {}", self.beta)));
        }
        if self.max_iterations == 0 {
            return Err(SolverError::InvalidConfig("max_iterations must be >= 1".into()));
        }
        if let Some(t) = self.target_fitness {
            if t.is_nan() {
                return Err(SolverError::InvalidConfig("target fitness is NaN".into()));
            }
        }
        Ok(())
    }

    /// Resolves the pheromone levels for an instance with `m` edges.
    pub fn levels(&self, m: usize) -> Result<PheromoneLevels, SolverError> {
        let default = PheromoneLevels::default_for(m);
        PheromoneLevels::new(
            self.pher_high.unwrap_or(default.high),
            self.pher_low.unwrap_or(default.low),
        )
    }
}

/// `eta_e = |e| / w(e)` for every edge.
#[derive(Debug, Clone, PartialEq)]
pub struct Heuristic {
    eta: Vec<f64>,
}

impl Heuristic {
    pub fn get(&self, e: EdgeId) -> f64 {
        self.eta[e.index()]
    }

    pub fn values(&self) -> &[f64] {
        &self.eta
    }

    pub fn max(&self) -> f64 {
        self.eta.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn min(&self) -> f64 {
        self.eta.iter().copied().fold(f64::INFINITY, f64::min)
    }
}

pub fn heuristic_info(h: &Hypergraph) -> Heuristic {
    Heuristic { eta: h.edges().iter().map(|e| e.cardinality() as f64 / e.weight()).collect() }
}

/// Per-node pheromone.
#[derive(Debug, Clone, PartialEq)]
pub struct PheromoneState {
    levels: Vec<f64>,
    initial_uniform: bool,
}

impl PheromoneState {
    /// Uniform `1/|U|` on all `m` nodes, where `|U|` is the arc count of
    /// the construction graph.
    pub fn initial(m: usize, arc_count: usize) -> Self {
        Self { levels: vec![1.0 / arc_count.max(1) as f64; m], initial_uniform: true }
    }

    /// Arbitrary per-node levels, e.g. an adversarial start state.
    pub fn from_levels(levels: Vec<f64>) -> Self {
        Self { levels, initial_uniform: false }
    }

    pub fn level(&self, e: EdgeId) -> f64 {
        self.levels[e.index()]
    }

    pub fn levels(&self) -> &[f64] {
        &self.levels
    }

    pub fn is_initial(&self) -> bool {
        self.initial_uniform
    }

    /// `h` on the nodes of `best`, `l` everywhere else.
    pub fn update(&mut self, best: &EdgeSet, levels: PheromoneLevels) {
        for (i, level) in self.levels.iter_mut().enumerate() {
            *level = if best.contains(EdgeId::from_index(i)) { levels.high } else { levels.low };
        }
        self.initial_uniform = false;
    }
}

pub fn update_pheromones(
    pher: &PheromoneState,
    best: &EdgeSet,
    levels: PheromoneLevels,
) -> PheromoneState {
    let mut next = pher.clone();
    next.update(best, levels);
    next
}

/// Total weight of `x`. Feasibility is not checked.
pub fn fitness(h: &Hypergraph, x: &EdgeSet) -> f64 {
    x.iter().map(|e| h.edge(e).weight()).sum()
}

/// Unvisited edges that contain at least one uncovered vertex.
pub fn feasible_neighborhood(h: &Hypergraph, covered: &VertexSet, visited: &EdgeSet) -> EdgeSet {
    h.edge_ids()
        .filter(|&e| !visited.contains(e) && h.edge(e).vertices().any(|v| !covered.contains(v)))
        .collect()
}

fn attractiveness(tau: f64, eta: f64, alpha: f64, beta: f64) -> f64 {
    tau.powf(alpha) * eta.powf(beta)
}

/// Selection probability of every edge (indexed by edge position); zero off
/// the candidate set.
pub fn selection_probabilities(
    candidates: &EdgeSet,
    pher: &PheromoneState,
    eta: &Heuristic,
    alpha: f64,
    beta: f64,
) -> Result<Vec<f64>, SolverError> {
    if candidates.is_empty() {
        return Err(SolverError::NoCandidates);
    }
    let mut probs = vec![0.0; pher.levels.len()];
    for e in candidates.iter() {
        probs[e.index()] = attractiveness(pher.level(e), eta.get(e), alpha, beta);
    }
    let total: f64 = probs.iter().sum();
    if !(total > 0.0 && total.is_finite()) {
        return Err(SolverError::DegenerateWeights(total));
    }
    for p in &mut probs {
        *p /= total;
    }
    Ok(probs)
}

/// Precomputed construction graph of a hypergraph: forced edges, the
/// coverage they induce, and the remaining selectable nodes.
#[derive(Debug, Clone)]
pub struct ConstructionGraph<'a> {
    graph: &'a Hypergraph,
    forced: EdgeSet,
    nodes: Vec<EdgeId>,
    base_covered: Vec<bool>,
    base_uncovered: usize,
    base_gain: Vec<u32>,
}

impl<'a> ConstructionGraph<'a> {
    pub fn new(graph: &'a Hypergraph) -> Self {
        let forced = graph.forced_edges();
        let mut base_covered = vec![false; graph.n()];
        for e in forced.iter() {
            for v in graph.edge(e).vertices() {
                base_covered[v.index()] = true;
            }
        }
        let base_uncovered = base_covered.iter().filter(|&&c| !c).count();
        let base_gain = graph
            .edges()
            .iter()
            .map(|e| e.vertices().filter(|v| !base_covered[v.index()]).count() as u32)
            .collect();
        let nodes = graph.edge_ids().filter(|&e| !forced.contains(e)).collect();
        Self { graph, forced, nodes, base_covered, base_uncovered, base_gain }
    }

    pub fn hypergraph(&self) -> &'a Hypergraph {
        self.graph
    }

    pub fn forced(&self) -> &EdgeSet {
        &self.forced
    }

    /// Selectable nodes (non-forced edges), ascending.
    pub fn nodes(&self) -> &[EdgeId] {
        &self.nodes
    }

    /// `|U|`: arcs from the start node to every node plus all ordered pairs.
    pub fn arc_count(&self) -> usize {
        self.nodes.len() * self.nodes.len()
    }

    pub fn initial_pheromone(&self) -> PheromoneState {
        PheromoneState::initial(self.graph.m(), self.arc_count())
    }

    /// One ant walk. Returns a feasible edge cover containing every forced
    /// edge.
    pub fn construct<R: Rng + ?Sized>(
        &self,
        pher: &PheromoneState,
        eta: &Heuristic,
        alpha: f64,
        beta: f64,
        rng: &mut R,
    ) -> Result<EdgeSet, SolverError> {
        let h = self.graph;
        let desire: Vec<f64> = (0..h.m())
            .map(|i| attractiveness(pher.levels[i], eta.eta[i], alpha, beta))
            .collect();
        let mut covered = self.base_covered.clone();
        let mut uncovered = self.base_uncovered;
        let mut gain = self.base_gain.clone();
        let mut solution = self.forced.clone();
        let mut candidates: Vec<EdgeId> = Vec::with_capacity(self.nodes.len());

        while uncovered > 0 {
            candidates.clear();
            candidates.extend(self.nodes.iter().copied().filter(|e| gain[e.index()] > 0));
            let total: f64 = candidates.iter().map(|e| desire[e.index()]).sum();
            if !(total > 0.0 && total.is_finite()) {
                return Err(SolverError::DegenerateWeights(total));
            }
            let spin = rng.random::<f64>() * total;
            let mut acc = 0.0;
            let mut chosen = *candidates.last().expect("uncovered vertex implies a candidate");
            for &e in &candidates {
                acc += desire[e.index()];
                if spin < acc {
                    chosen = e;
                    break;
                }
            }

            solution.insert(chosen);
            for v in h.edge(chosen).vertices() {
                if !covered[v.index()] {
                    covered[v.index()] = true;
                    uncovered -= 1;
                    for f in h.incident_edges(v) {
                        gain[f.index()] -= 1;
                    }
                }
            }
        }
        Ok(solution)
    }
}

/// One construction on `h` with the given state; see [`ConstructionGraph::construct`].
pub fn construct<R: Rng + ?Sized>(
    h: &Hypergraph,
    pher: &PheromoneState,
    eta: &Heuristic,
    cfg: &SolverConfig,
    rng: &mut R,
) -> Result<EdgeSet, SolverError> {
    ConstructionGraph::new(h).construct(pher, eta, cfg.alpha, cfg.beta, rng)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TraceEvent {
    pub iteration: u64,
    pub fitness: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveResult {
    pub best_edges: EdgeSet,
    pub best_fitness: f64,
    pub iterations_run: u64,
    pub iteration_found: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<TraceEvent>>,
}

impl SolveResult {
    pub fn reached(&self, target: f64) -> bool {
        self.best_fitness <= target
    }
}

/// What one MMAS* iteration produced.
#[derive(Debug, Clone, PartialEq)]
pub struct Step {
    pub iteration: u64,
    pub solution: EdgeSet,
    pub fitness: f64,
    /// The solution strictly improved on the best-so-far and replaced it.
    pub improved: bool,
}

/// MMAS* state between iterations: best-so-far solution, pheromone and RNG.
#[derive(Debug, Clone)]
pub struct Colony<'a> {
    graph: ConstructionGraph<'a>,
    eta: Heuristic,
    levels: PheromoneLevels,
    alpha: f64,
    beta: f64,
    pheromone: PheromoneState,
    rng: crate::rng::SolverRng,
    best: Option<(EdgeSet, f64)>,
    iteration: u64,
}

impl<'a> Colony<'a> {
    pub fn new(h: &'a Hypergraph, cfg: &SolverConfig) -> Result<Self, SolverError> {
        cfg.validate()?;
        let levels = cfg.levels(h.m())?;
        let graph = ConstructionGraph::new(h);
        let pheromone = graph.initial_pheromone();
        Ok(Self {
            graph,
            eta: heuristic_info(h),
            levels,
            alpha: cfg.alpha,
            beta: cfg.beta,
            pheromone,
            rng: rng_from_seed(cfg.seed),
            best: None,
            iteration: 0,
        })
    }

    /// Construct, keep the solution if strictly better, update pheromone.
    pub fn step(&mut self) -> Result<Step, SolverError> {
        let x = self.graph.construct(&self.pheromone, &self.eta, self.alpha, self.beta, &mut self.rng)?;
        let f = fitness(self.graph.hypergraph(), &x);
        self.iteration += 1;
        let improved = self.best.as_ref().is_none_or(|(_, best)| f < *best);
        if improved {
            self.best = Some((x.clone(), f));
            self.pheromone.update(&x, self.levels);
        }
        Ok(Step { iteration: self.iteration, solution: x, fitness: f, improved })
    }

    pub fn best(&self) -> Option<(&EdgeSet, f64)> {
        self.best.as_ref().map(|(x, f)| (x, *f))
    }

    pub fn pheromone(&self) -> &PheromoneState {
        &self.pheromone
    }

    pub fn graph(&self) -> &ConstructionGraph<'a> {
        &self.graph
    }

    pub fn levels(&self) -> PheromoneLevels {
        self.levels
    }

    /// Iterations completed so far.
    pub fn iteration(&self) -> u64 {
        self.iteration
    }
}

/// Runs MMAS* until `max_iterations` constructions or until the best-so-far
/// fitness is at most `target_fitness`. Iterations count constructed
/// solutions, starting at 1.
pub fn solve(h: &Hypergraph, cfg: &SolverConfig) -> Result<SolveResult, SolverError> {
    let mut colony = Colony::new(h, cfg)?;
    let done = |f: f64| cfg.target_fitness.is_some_and(|t| f <= t);
    let mut trace = cfg.record_trace.then(Vec::new);
    let mut iteration_found = 0;
    loop {
        let step = colony.step()?;
        if step.improved {
            iteration_found = step.iteration;
            if let Some(trace) = trace.as_mut() {
                trace.push(TraceEvent { iteration: step.iteration, fitness: step.fitness });
            }
        }
        let best = colony.best().expect("at least one step ran").1;
        if step.iteration >= cfg.max_iterations || done(best) {
            break;
        }
    }
    let (best_edges, best_fitness) = colony.best.take().expect("at least one step ran");
    Ok(SolveResult {
        best_edges,
        best_fitness,
        iterations_run: colony.iteration,
        iteration_found,
        trace,
    })
}
