//! Vertex cover and weak-independent set through the dual hypergraph.
//!
//! Edge `j` of the dual is vertex `j` of the source, so a dual edge cover
//! maps one-to-one onto a vertex cover. A vertex set is weak-independent
//! exactly when its complement is a vertex cover.

use serde::Serialize;

use crate::hypergraph::{DualWeights, Hypergraph, HypergraphError, VertexId, VertexSet};
use crate::solver::{solve, SolveResult, SolverConfig, SolverError};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoverSolution {
    /// Vertices of the source hypergraph.
    pub witness: VertexSet,
    /// `|witness|`, or its total vertex weight for the weighted variant.
    pub value: f64,
    /// The underlying run on the dual.
    pub dual_result: SolveResult,
}

fn map_back(dual_result: &SolveResult) -> VertexSet {
    dual_result.best_edges.iter().map(|e| VertexId::from_index(e.index())).collect()
}

pub fn solve_vertex_cover(h: &Hypergraph, cfg: &SolverConfig) -> Result<CoverSolution, SolverError> {
    let dual_result = solve(&h.dual(), cfg)?;
    let witness = map_back(&dual_result);
    debug_assert!(h.is_vertex_cover(&witness));
    Ok(CoverSolution { value: witness.len() as f64, witness, dual_result })
}

/// Minimum-weight vertex cover with `vertex_weights[j]` on vertex `j + 1`.
pub fn solve_weighted_vertex_cover(
    h: &Hypergraph,
    vertex_weights: &[f64],
    cfg: &SolverConfig,
) -> Result<CoverSolution, WeightedReductionError> {
    let dual = h.dual_with(DualWeights::Vertex(vertex_weights))?;
    let dual_result = solve(&dual, cfg)?;
    let witness = map_back(&dual_result);
    debug_assert!(h.is_vertex_cover(&witness));
    Ok(CoverSolution { value: dual_result.best_fitness, witness, dual_result })
}

#[derive(Debug, thiserror::Error)]
pub enum WeightedReductionError {
    #[error(transparent)]
    Weights(#[from] HypergraphError),
    #[error(transparent)]
    Solver(#[from] SolverError),
}

/// Complement of [`solve_vertex_cover`]; `value = n - |vertex cover|`.
pub fn solve_weak_independent_set(
    h: &Hypergraph,
    cfg: &SolverConfig,
) -> Result<CoverSolution, SolverError> {
    let cover = solve_vertex_cover(h, cfg)?;
    let witness = cover.witness.complement(h.n());
    debug_assert!(h.is_weak_independent(&witness));
    Ok(CoverSolution { value: witness.len() as f64, witness, dual_result: cover.dual_result })
}
