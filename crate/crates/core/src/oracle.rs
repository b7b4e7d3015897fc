//! Exhaustive ground truth for small instances.
//!
//! Witnesses are the lexicographically smallest optimum (comparing sorted id
//! lists), so results are reproducible.

use serde::Serialize;
use thiserror::Error;

use crate::hypergraph::{EdgeId, EdgeSet, Hypergraph, VertexId, VertexSet};

/// Largest `m` (edge cover) or `n` (vertex problems) enumerated.
pub const MAX_ENUMERATION: usize = 24;

const REL_EPS: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("instance too large for exhaustive search: {0} > {MAX_ENUMERATION}")]
    InstanceTooLarge(usize),
    #[error("expected {expected} vertex weights, got {got}")]
    WeightCountMismatch { expected: usize, got: usize },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleResult<W> {
    pub value: f64,
    pub witness: W,
    pub optima_count: u64,
}

fn same_value(a: f64, b: f64) -> bool {
    (a - b).abs() <= REL_EPS * a.abs().max(b.abs()).max(1.0)
}

/// Lexicographic order on the sorted element lists of two bitmasks.
fn lex_less(a: u32, b: u32) -> bool {
    let diff = a ^ b;
    if diff == 0 {
        return false;
    }
    let j = diff.trailing_zeros();
    let above = if j == 31 { 0 } else { !0u32 << (j + 1) };
    if a & (1 << j) != 0 {
        b & above != 0
    } else {
        a & above == 0
    }
}

fn mask_to_set<I: crate::hypergraph::Id>(mask: u32) -> crate::hypergraph::IdSet<I> {
    (0..32).filter(|i| mask & (1 << i) != 0).map(|i| I::from_index(i as usize)).collect()
}

/// Minimum-weight edge cover over all `2^m` edge subsets.
pub fn min_weight_edge_cover(h: &Hypergraph) -> Result<OracleResult<EdgeSet>, OracleError> {
    let m = h.m();
    if m > MAX_ENUMERATION {
        return Err(OracleError::InstanceTooLarge(m));
    }
    // Gray-code walk keeping per-vertex cover counts.
    let mut count = vec![0u32; h.n()];
    let mut uncovered = h.n();
    let mut best: Option<(f64, u32, u64)> = None;
    let mut mask = 0u32;
    for step in 1u64..(1u64 << m) {
        let bit = step.trailing_zeros() as usize;
        let adding = mask & (1 << bit) == 0;
        mask ^= 1 << bit;
        for v in h.edge(EdgeId::from_index(bit)).vertices() {
            let c = &mut count[v.index()];
            if adding {
                if *c == 0 {
                    uncovered -= 1;
                }
                *c += 1;
            } else {
                *c -= 1;
                if *c == 0 {
                    uncovered += 1;
                }
            }
        }
        if uncovered != 0 {
            continue;
        }
        let w: f64 = (0..m).filter(|i| mask & (1 << i) != 0).map(|i| h.edges()[i].weight()).sum();
        best = match best {
            None => Some((w, mask, 1)),
            Some((bw, bm, n)) if same_value(w, bw) => {
                Some((bw.min(w), if lex_less(mask, bm) { mask } else { bm }, n + 1))
            }
            Some((bw, _, _)) if w < bw => Some((w, mask, 1)),
            keep => keep,
        };
    }
    let (value, mask, optima_count) = best.expect("valid hypergraphs have a cover (all edges)");
    Ok(OracleResult { value, witness: mask_to_set(mask), optima_count })
}

fn vertex_masks(h: &Hypergraph) -> Result<Vec<u32>, OracleError> {
    if h.n() > MAX_ENUMERATION {
        return Err(OracleError::InstanceTooLarge(h.n()));
    }
    Ok(h.edges().iter().map(|e| e.vertices().fold(0u32, |acc, v| acc | 1 << v.index())).collect())
}

/// Visits the `size`-subsets of `0..n` in lexicographic order.
fn for_each_combination(n: usize, size: usize, mut visit: impl FnMut(u32)) {
    if size > n {
        return;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        visit(idx.iter().fold(0u32, |acc, &i| acc | 1 << i));
        let Some(pos) = (0..size).rev().find(|&p| idx[p] != p + n - size) else {
            return;
        };
        idx[pos] += 1;
        for p in pos + 1..size {
            idx[p] = idx[p - 1] + 1;
        }
    }
}

/// First size (scanning `sizes`) with a subset satisfying `ok`.
fn smallest_by_size(
    n: usize,
    sizes: impl Iterator<Item = usize>,
    ok: impl Fn(u32) -> bool,
) -> OracleResult<VertexSet> {
    for size in sizes {
        let mut first = None;
        let mut total = 0u64;
        for_each_combination(n, size, |s| {
            if ok(s) {
                total += 1;
                first.get_or_insert(s);
            }
        });
        if let Some(mask) = first {
            return OracleResult { value: size as f64, witness: mask_to_set(mask), optima_count: total };
        }
    }
    unreachable!("the full vertex set covers and the empty set is independent")
}

pub fn min_vertex_cover(h: &Hypergraph) -> Result<OracleResult<VertexSet>, OracleError> {
    let edges = vertex_masks(h)?;
    Ok(smallest_by_size(h.n(), 0..=h.n(), |s| edges.iter().all(|&e| e & s != 0)))
}

pub fn max_weak_independent_set(h: &Hypergraph) -> Result<OracleResult<VertexSet>, OracleError> {
    let edges = vertex_masks(h)?;
    Ok(smallest_by_size(h.n(), (0..=h.n()).rev(), |s| edges.iter().all(|&e| e & s != e)))
}

/// Minimum total vertex weight over all vertex covers.
pub fn min_weight_vertex_cover(
    h: &Hypergraph,
    weights: &[f64],
) -> Result<OracleResult<VertexSet>, OracleError> {
    let edges = vertex_masks(h)?;
    if weights.len() != h.n() {
        return Err(OracleError::WeightCountMismatch { expected: h.n(), got: weights.len() });
    }
    let mut best: Option<(f64, u32, u64)> = None;
    for s in 0u32..(1u32 << h.n()) {
        if !edges.iter().all(|&e| e & s != 0) {
            continue;
        }
        let w: f64 = (0..h.n()).filter(|i| s & (1 << i) != 0).map(|i| weights[i]).sum();
        best = match best {
            None => Some((w, s, 1)),
            Some((bw, bm, n)) if same_value(w, bw) => {
                Some((bw.min(w), if lex_less(s, bm) { s } else { bm }, n + 1))
            }
            Some((bw, _, _)) if w < bw => Some((w, s, 1)),
            keep => keep,
        };
    }
    let (value, mask, optima_count) = best.expect("the full vertex set is a cover");
    Ok(OracleResult { value, witness: mask_to_set::<VertexId>(mask), optima_count })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::Hyperedge;

    fn hg(n: usize, edges: &[(&[u32], f64)]) -> Hypergraph {
        Hypergraph::new(n, edges.iter().map(|(v, w)| Hyperedge::new(v.iter().copied(), *w)).collect())
            .unwrap()
    }

    fn triangle() -> Hypergraph {
        hg(3, &[(&[1, 2], 1.0), (&[2, 3], 1.0), (&[1, 3], 1.0)])
    }

    fn ids(set: &EdgeSet) -> Vec<u32> {
        set.iter().map(|e| e.get()).collect()
    }

    #[test]
    fn lex_order_matches_sorted_lists() {
        let list = |m: u32| (0..8).filter(|i| m & (1 << i) != 0).collect::<Vec<u32>>();
        for a in 0u32..256 {
            for b in 0u32..256 {
                assert_eq!(lex_less(a, b), list(a) < list(b), "{a:08b} vs {b:08b}");
            }
        }
    }

    #[test]
    fn combinations_are_lexicographic() {
        let mut seen = Vec::new();
        for_each_combination(4, 2, |s| seen.push(s));
        assert_eq!(seen, vec![0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100]);
        let mut zero = Vec::new();
        for_each_combination(3, 0, |s| zero.push(s));
        assert_eq!(zero, vec![0]);
    }

    #[test]
    fn edge_cover_examples() {
        let r = min_weight_edge_cover(&hg(3, &[(&[1, 2, 3], 5.0)])).unwrap();
        assert_eq!((r.value, ids(&r.witness), r.optima_count), (5.0, vec![1], 1));

        let r = min_weight_edge_cover(&hg(4, &[(&[1, 2], 1.0), (&[3, 4], 1.0), (&[1, 2, 3, 4], 3.0)]))
            .unwrap();
        assert_eq!((r.value, ids(&r.witness)), (2.0, vec![1, 2]));

        let r = min_weight_edge_cover(&triangle()).unwrap();
        assert_eq!((r.value, ids(&r.witness), r.optima_count), (2.0, vec![1, 2], 3));
    }

    #[test]
    fn vertex_problem_examples() {
        assert_eq!(min_vertex_cover(&triangle()).unwrap().value, 2.0);
        assert_eq!(max_weak_independent_set(&triangle()).unwrap().value, 1.0);
        let single = hg(3, &[(&[1, 2, 3], 1.0)]);
        let vc = min_vertex_cover(&single).unwrap();
        assert_eq!((vc.value, vc.optima_count), (1.0, 3));
        let is = max_weak_independent_set(&single).unwrap();
        assert_eq!((is.value, is.optima_count), (2.0, 3));
        assert_eq!(is.witness.iter().map(|v| v.get()).collect::<Vec<_>>(), vec![1, 2]);
    }

    #[test]
    fn weighted_vertex_cover() {
        let r = min_weight_vertex_cover(&triangle(), &[1.0, 5.0, 1.0]).unwrap();
        assert_eq!(r.value, 2.0);
        assert_eq!(r.witness.iter().map(|v| v.get()).collect::<Vec<_>>(), vec![1, 3]);
        assert!(matches!(
            min_weight_vertex_cover(&triangle(), &[1.0]),
            Err(OracleError::WeightCountMismatch { .. })
        ));
    }

    #[test]
    fn rejects_oversized_instances() {
        let edges: Vec<_> = (1..=25).map(|v| Hyperedge::unweighted([v])).collect();
        let h = Hypergraph::new(25, edges).unwrap();
        assert_eq!(min_weight_edge_cover(&h).unwrap_err(), OracleError::InstanceTooLarge(25));
        assert_eq!(min_vertex_cover(&h).unwrap_err(), OracleError::InstanceTooLarge(25));
        assert_eq!(max_weak_independent_set(&h).unwrap_err(), OracleError::InstanceTooLarge(25));
    }
}
