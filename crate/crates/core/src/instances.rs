//! Instance generators with planted optimal covers.

use std::collections::{HashMap, HashSet};

use rand::seq::IndexedRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{self, BoundsError};
use crate::hypergraph::{EdgeId, EdgeSet, Hyperedge, Hypergraph, HypergraphError};
use crate::rng::{rng_from_seed, SolverRng};
use crate::solver::heuristic_info;

/// Largest complete `r`-uniform hypergraph `gen_instance1` builds.
pub const MAX_INSTANCE1_EDGES: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum InstanceError {
    #[error("invalid generator parameters: {0}")]
    InvalidParameters(String),
    #[error("instance too large: {0} edges")]
    InstanceTooLarge(u64),
    #[error("invalid size sequence: {0}")]
    InvalidSequence(String),
    #[error("no unused hyperedge of size {0} left")]
    EdgesExhausted(usize),
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "generator", rename_all = "snake_case")]
pub enum GeneratorParams {
    Instance1 { n: usize, r: usize, seed: u64, rand_max: u32 },
    Instance2 { n: usize, p_sequence: Vec<usize>, extra_edges: usize, seed: u64 },
    Random { n: usize, m: usize, max_card: usize, weighted: bool, seed: u64 },
}

impl GeneratorParams {
    pub fn hypergraph(&self) -> Result<(Hypergraph, Option<PlantedInstance>), InstanceError> {
        match *self {
            GeneratorParams::Instance1 { n, r, seed, rand_max } => {
                let p = gen_instance1(n, r, seed, rand_max)?;
                Ok((p.hypergraph.clone(), Some(p)))
            }
            GeneratorParams::Instance2 { n, ref p_sequence, extra_edges, seed } => {
                let p = gen_instance2(n, p_sequence, extra_edges, seed)?;
                Ok((p.hypergraph.clone(), Some(p)))
            }
            GeneratorParams::Random { n, m, max_card, weighted, seed } => {
                Ok((gen_random(n, m, max_card, weighted, seed)?, None))
            }
        }
    }
}

/// A generated hypergraph together with its known optimal cover `S`.
#[derive(Debug, Clone, PartialEq)]
pub struct PlantedInstance {
    pub hypergraph: Hypergraph,
    pub planted_cover: EdgeSet,
    pub k: usize,
    /// Smallest `eta` over `S`.
    pub eta_prime_min: f64,
    /// Largest `eta` over `E \ S`; `None` when `S = E`.
    pub eta_1_max: Option<f64>,
    /// Heuristic-exponent threshold, when `eta'_min > eta_1max` and `k < m`.
    pub beta_star: Option<f64>,
    pub params: GeneratorParams,
}

/// Sidecar metadata written next to a generated `HGR` file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlantedMetadata {
    pub planted_cover: EdgeSet,
    pub k: usize,
    pub eta_prime_min: f64,
    pub eta_1_max: Option<f64>,
    pub beta_star: Option<f64>,
    pub generator_params: GeneratorParams,
}

impl PlantedInstance {
    fn new(
        hypergraph: Hypergraph,
        planted_cover: EdgeSet,
        params: GeneratorParams,
    ) -> Result<Self, InstanceError> {
        let eta = heuristic_info(&hypergraph);
        let (mut inside, mut outside) = (f64::INFINITY, None::<f64>);
        for e in hypergraph.edge_ids() {
            let value = eta.get(e);
            if planted_cover.contains(e) {
                inside = inside.min(value);
            } else {
                outside = Some(outside.map_or(value, |o| o.max(value)));
            }
        }
        let k = planted_cover.len();
        let m = hypergraph.m();
        let beta_star = match outside {
            Some(out) if inside > out && k >= 1 && k < m => {
                match bounds::beta_star(m, k, inside, out) {
                    Ok(b) => Some(b),
                    Err(BoundsError::PreconditionViolated { .. }) => None,
                    Err(e) => return Err(InstanceError::InvalidParameters(e.to_string())),
                }
            }
            _ => None,
        };
        Ok(Self { hypergraph, planted_cover, k, eta_prime_min: inside, eta_1_max: outside, beta_star, params })
    }

    pub fn metadata(&self) -> PlantedMetadata {
        PlantedMetadata {
            planted_cover: self.planted_cover.clone(),
            k: self.k,
            eta_prime_min: self.eta_prime_min,
            eta_1_max: self.eta_1_max,
            beta_star: self.beta_star,
            generator_params: self.params.clone(),
        }
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// All `r`-subsets of `1..=n` in lexicographic order.
fn all_subsets(n: usize, r: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut idx: Vec<u32> = (1..=r as u32).collect();
    loop {
        out.push(idx.clone());
        let Some(pos) = (0..r).rev().find(|&p| idx[p] as usize != p + 1 + n - r) else {
            return out;
        };
        idx[pos] += 1;
        for p in pos + 1..r {
            idx[p] = idx[p - 1] + 1;
        }
    }
}

/// `count` distinct vertices drawn from `pool`, sorted.
fn draw(pool: &[u32], count: usize, rng: &mut SolverRng) -> Vec<u32> {
    let mut picked: Vec<u32> = pool.choose_multiple(rng, count).copied().collect();
    picked.sort_unstable();
    picked
}

fn uncovered(n: usize, covered: &[bool]) -> Vec<u32> {
    (1..=n as u32).filter(|v| !covered[*v as usize - 1]).collect()
}

/// Weighted complete `r`-uniform hypergraph with a planted unit-weight cover.
///
/// Disjoint unit edges are planted while they fit; if vertices remain, one more
/// unit edge containing all of them is added. Every other edge gets a random
/// integer weight in `2..=rand_max`.
pub fn gen_instance1(n: usize, r: usize, seed: u64, rand_max: u32) -> Result<PlantedInstance, InstanceError> {
    if !(2 <= r && r <= n) {
        return Err(InstanceError::InvalidParameters(format!("need 2 <= r <= n, got r={r}, n={n}")));
    }
    if rand_max < 2 {
        return Err(InstanceError::InvalidParameters(format!("rand_max must be >= 2, got {rand_max}")));
    }
    let m = binomial(n as u64, r as u64);
    if m > MAX_INSTANCE1_EDGES {
        return Err(InstanceError::InstanceTooLarge(m));
    }
    let subsets = all_subsets(n, r);
    let position: HashMap<&[u32], usize> =
        subsets.iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
    let mut rng = rng_from_seed(seed);
    let mut covered = vec![false; n];
    let mut planted = Vec::new();
    let mut plant = |edge: Vec<u32>, covered: &mut Vec<bool>| {
        for &v in &edge {
            covered[v as usize - 1] = true;
        }
        planted.push(position[edge.as_slice()]);
    };

    for _ in 0..n / r {
        let free = uncovered(n, &covered);
        plant(draw(&free, r, &mut rng), &mut covered);
    }
    let rest = uncovered(n, &covered);
    if !rest.is_empty() {
        let used: Vec<u32> = (1..=n as u32).filter(|v| covered[*v as usize - 1]).collect();
        let mut edge = draw(&used, r - rest.len(), &mut rng);
        edge.extend(&rest);
        edge.sort_unstable();
        plant(edge, &mut covered);
    }

    let planted_set: HashSet<usize> = planted.iter().copied().collect();
    let edges = subsets
        .into_iter()
        .enumerate()
        .map(|(i, s)| {
            let w = if planted_set.contains(&i) { 1 } else { rng.random_range(2..=rand_max) };
            Hyperedge::new(s, w as f64)
        })
        .collect();
    let h = Hypergraph::new(n, edges)?;
    let cover = planted.iter().map(|&i| EdgeId::from_index(i)).collect();
    PlantedInstance::new(h, cover, GeneratorParams::Instance1 { n, r, seed, rand_max })
}

/// Unweighted hypergraph whose first edges `Psi` (sizes from `p_sequence`,
/// drawn disjointly while possible) form a minimum cover, followed by
/// `extra_edges` further distinct edges no larger than the last `Psi` edge.
///
/// Each edge consumes the next entry of `p_sequence`; the last entry repeats
/// once the sequence runs out.
pub fn gen_instance2(
    n: usize,
    p_sequence: &[usize],
    extra_edges: usize,
    seed: u64,
) -> Result<PlantedInstance, InstanceError> {
    if p_sequence.is_empty() {
        return Err(InstanceError::InvalidSequence("empty".into()));
    }
    if let Some(&p) = p_sequence.iter().find(|&&p| p < 2 || p > n) {
        return Err(InstanceError::InvalidSequence(format!("size {p} outside 2..={n}")));
    }
    if p_sequence.windows(2).any(|w| w[1] > w[0]) {
        return Err(InstanceError::InvalidSequence(format!("{p_sequence:?} is not non-increasing")));
    }
    let mut rng = rng_from_seed(seed);
    let mut sizes = p_sequence.iter().copied().chain(std::iter::repeat(*p_sequence.last().unwrap()));
    let mut covered = vec![false; n];
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut edges: Vec<Vec<u32>> = Vec::new();

    while covered.iter().any(|c| !c) {
        let p = sizes.next().unwrap();
        let free = uncovered(n, &covered);
        let edge = if p <= free.len() {
            draw(&free, p, &mut rng)
        } else {
            let used: Vec<u32> = (1..=n as u32).filter(|v| covered[*v as usize - 1]).collect();
            let mut edge = draw(&used, p - free.len(), &mut rng);
            edge.extend(&free);
            edge.sort_unstable();
            edge
        };
        for &v in &edge {
            covered[v as usize - 1] = true;
        }
        seen.insert(edge.clone());
        edges.push(edge);
    }
    let k = edges.len();

    let all: Vec<u32> = (1..=n as u32).collect();
    for _ in 0..extra_edges {
        let p = sizes.next().unwrap();
        let mut edge = None;
        for _ in 0..64 {
            let candidate = draw(&all, p, &mut rng);
            if !seen.contains(&candidate) {
                edge = Some(candidate);
                break;
            }
        }
        let edge = match edge {
            Some(e) => e,
            None => {
                let unused: Vec<Vec<u32>> =
                    all_subsets(n, p).into_iter().filter(|s| !seen.contains(s)).collect();
                unused.choose(&mut rng).cloned().ok_or(InstanceError::EdgesExhausted(p))?
            }
        };
        seen.insert(edge.clone());
        edges.push(edge);
    }

    let h = Hypergraph::new(n, edges.into_iter().map(Hyperedge::unweighted).collect())?;
    let cover = (0..k).map(EdgeId::from_index).collect();
    PlantedInstance::new(
        h,
        cover,
        GeneratorParams::Instance2 { n, p_sequence: p_sequence.to_vec(), extra_edges, seed },
    )
}

/// `m` random edges with cardinality uniform in `1..=max_card`; any vertex left
/// uncovered is added to a random edge. Weights are integers in `1..=10` when
/// `weighted`, else 1.
pub fn gen_random(
    n: usize,
    m: usize,
    max_card: usize,
    weighted: bool,
    seed: u64,
) -> Result<Hypergraph, InstanceError> {
    if n == 0 || m == 0 || max_card == 0 || max_card > n {
        return Err(InstanceError::InvalidParameters(format!(
            "need n >= 1, m >= 1, 1 <= max_card <= n; got n={n}, m={m}, max_card={max_card}"
        )));
    }
    let mut rng = rng_from_seed(seed);
    let all: Vec<u32> = (1..=n as u32).collect();
    let mut edges: Vec<Vec<u32>> = (0..m)
        .map(|_| {
            let card = rng.random_range(1..=max_card);
            draw(&all, card, &mut rng)
        })
        .collect();
    let mut covered = vec![false; n];
    for e in &edges {
        for &v in e {
            covered[v as usize - 1] = true;
        }
    }
    for v in uncovered(n, &covered) {
        let target = rng.random_range(0..m);
        edges[target].push(v);
        edges[target].sort_unstable();
    }
    let weights: Vec<f64> =
        (0..m).map(|_| if weighted { rng.random_range(1..=10u32) as f64 } else { 1.0 }).collect();
    let edges = edges.into_iter().zip(weights).map(|(e, w)| Hyperedge::new(e, w)).collect();
    Ok(Hypergraph::new(n, edges)?)
}
