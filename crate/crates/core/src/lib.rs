//! Ant colony optimisation for hypergraph covering problems.
//!
//! The crate is organised around an immutable [`Hypergraph`] and the MMAS*
//! (Max-Min Ant System with strict best-so-far replacement) solver for the
//! minimum-weight edge cover problem:
//!
//! - [`hypergraph`]: instance representation, structural predicates, duals
//! - [`hgr`]: the plain-text `HGR` instance format
//! - [`solver`]: construction procedure, pheromone model and the MMAS* loop
//! - [`oracle`]: exhaustive ground-truth solvers for small instances
//! - [`instances`]: planted-optimum and random instance generators
//! - [`bounds`]: closed-form runtime bounds and success-probability bounds
//! - [`reductions`]: vertex cover and weak-independent set via the dual
//! - [`harness`]: seeded, parallel experiments comparing runs to the bounds
//!
//! ```
//! use hyperaco::{Hyperedge, Hypergraph, SolverConfig, solve};
//!
//! let h = Hypergraph::new(
//!     4,
//!     vec![
//!         Hyperedge::new([1, 2], 1.0),
//!         Hyperedge::new([3, 4], 1.0),
//!         Hyperedge::new([1, 2, 3, 4], 3.0),
//!     ],
//! )
//! .unwrap();
//! let cfg = SolverConfig { max_iterations: 200, seed: 7, ..SolverConfig::default() };
//! let result = solve(&h, &cfg).unwrap();
//! assert_eq!(result.best_fitness, 2.0);
//! ```

pub mod bounds;
pub mod harness;
pub mod hgr;
pub mod hypergraph;
pub mod instances;
pub mod oracle;
pub mod reductions;
pub mod rng;
pub mod solver;

pub use bounds::{BoundValue, BoundsError};
pub use hgr::HgrError;
pub use hypergraph::{
    DualWeights, EdgeId, EdgeSet, Hyperedge, Hypergraph, HypergraphError, VertexId, VertexSet,
};
pub use instances::{GeneratorParams, InstanceError, PlantedInstance};
pub use oracle::{OracleError, OracleResult};
pub use reductions::CoverSolution;
pub use solver::{
    construct, feasible_neighborhood, fitness, heuristic_info, selection_probabilities, solve,
    update_pheromones, Colony, ConstructionGraph, Heuristic, PheromoneLevels, PheromoneState,
    SolveResult, SolverConfig, SolverError, Step, TraceEvent,
};
