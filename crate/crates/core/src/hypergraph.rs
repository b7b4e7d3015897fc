//! Immutable weighted hypergraphs.
//!
//! Vertices and hyperedges are identified by dense 1-based ids, matching the
//! `HGR` file format. Internally everything is indexed from zero; use
//! [`VertexId::index`] / [`EdgeId::index`] to convert.

use std::fmt;
use std::marker::PhantomData;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

macro_rules! id_type {
    ($(#[$meta:meta])* $name:ident, $prefix:literal) => {
        $(#[$meta])*
        #[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
        #[serde(transparent)]
        pub struct $name(u32);

        impl $name {
            /// Wraps a 1-based id. Panics on 0.
            pub fn new(id: u32) -> Self {
                assert!(id >= 1, concat!(stringify!($name), " ids are 1-based"));
                Self(id)
            }

            pub fn from_index(index: usize) -> Self {
                Self(u32::try_from(index + 1).expect("id overflows u32"))
            }

            pub fn get(self) -> u32 {
                self.0
            }

            /// Zero-based position.
            pub fn index(self) -> usize {
                self.0 as usize - 1
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, concat!($prefix, "{}"), self.0)
            }
        }

        impl Id for $name {
            fn from_index(index: usize) -> Self {
                $name::from_index(index)
            }
            fn index(self) -> usize {
                $name::index(self)
            }
        }
    };
}

id_type!(
    /// A vertex of a hypergraph, `1..=n`.
    VertexId,
    "v"
);
id_type!(
    /// A hyperedge of a hypergraph, `1..=m`, in insertion order.
    EdgeId,
    "e"
);

/// Dense index conversion shared by [`VertexId`] and [`EdgeId`].
pub trait Id: Copy + Ord {
    fn from_index(index: usize) -> Self;
    fn index(self) -> usize;
}

/// A set of ids backed by a bitset. Equality ignores capacity.
#[derive(Clone, Default)]
pub struct IdSet<I> {
    bits: FixedBitSet,
    _id: PhantomData<I>,
}

pub type EdgeSet = IdSet<EdgeId>;
pub type VertexSet = IdSet<VertexId>;

impl<I: Id> IdSet<I> {
    pub fn new() -> Self {
        Self { bits: FixedBitSet::new(), _id: PhantomData }
    }

    pub fn with_capacity(capacity: usize) -> Self {
        Self { bits: FixedBitSet::with_capacity(capacity), _id: PhantomData }
    }

    /// All ids `1..=count`.
    pub fn full(count: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(count);
        bits.insert_range(..);
        Self { bits, _id: PhantomData }
    }

    pub fn insert(&mut self, id: I) -> bool {
        let i = id.index();
        self.bits.grow(i + 1);
        !self.bits.put(i)
    }

    pub fn remove(&mut self, id: I) {
        if id.index() < self.bits.len() {
            self.bits.set(id.index(), false);
        }
    }

    pub fn contains(&self, id: I) -> bool {
        self.bits.contains(id.index())
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    /// Ids in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = I> + '_ {
        self.bits.ones().map(I::from_index)
    }

    pub fn to_vec(&self) -> Vec<I> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.iter().all(|id| other.contains(id))
    }

    /// Ids in `1..=universe` that are not in the set.
    pub fn complement(&self, universe: usize) -> Self {
        let mut out = Self::full(universe);
        for id in self.iter() {
            out.remove(id);
        }
        out
    }
}

impl<I: Id> FromIterator<I> for IdSet<I> {
    fn from_iter<T: IntoIterator<Item = I>>(iter: T) -> Self {
        let mut set = Self::new();
        for id in iter {
            set.insert(id);
        }
        set
    }
}

impl<I: Id> PartialEq for IdSet<I> {
    fn eq(&self, other: &Self) -> bool {
        self.bits.ones().eq(other.bits.ones())
    }
}

impl<I: Id> Eq for IdSet<I> {}

impl<I: Id + fmt::Display> fmt::Debug for IdSet<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|id| id.to_string())).finish()
    }
}

impl<I: Id + Serialize> Serialize for IdSet<I> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de, I: Id + Deserialize<'de>> Deserialize<'de> for IdSet<I> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let ids = Vec::<u32>::deserialize(deserializer)?;
        ids.into_iter()
            .map(|id| {
                if id == 0 {
                    Err(serde::de::Error::custom("ids are 1-based"))
                } else {
                    Ok(I::from_index(id as usize - 1))
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HypergraphError {
    #[error("hypergraph has no vertices")]
    NoVertices,
    #[error("hypergraph has no edges")]
    NoEdges,
    #[error("edge {0} is empty")]
    EmptyEdge(EdgeId),
    #[error("edge {edge} has non-positive or non-finite weight {weight}")]
    NonPositiveWeight { edge: EdgeId, weight: f64 },
    #[error("edge {edge} references vertex {vertex} outside 1..={n}")]
    VertexOutOfRange { edge: EdgeId, vertex: u32, n: usize },
    #[error("edge {edge} lists vertex {vertex} more than once")]
    DuplicateVertex { edge: EdgeId, vertex: VertexId },
    #[error("vertex {0} is not contained in any edge")]
    UncoveredVertex(VertexId),
    #[error("expected {expected} vertex weights, got {got}")]
    WeightCountMismatch { expected: usize, got: usize },
}

/// A weighted hyperedge. Vertices are kept sorted.
#[derive(Debug, Clone, PartialEq)]
pub struct Hyperedge {
    vertices: Vec<u32>,
    weight: f64,
}

impl Hyperedge {
    /// Builds an edge from raw 1-based vertex ids. Range, duplicate and
    /// weight checks happen in [`Hypergraph::new`].
    pub fn new(vertices: impl IntoIterator<Item = u32>, weight: f64) -> Self {
        let mut vertices: Vec<u32> = vertices.into_iter().collect();
        vertices.sort_unstable();
        Self { vertices, weight }
    }

    pub fn unweighted(vertices: impl IntoIterator<Item = u32>) -> Self {
        Self::new(vertices, 1.0)
    }

    pub fn vertices(&self) -> impl ExactSizeIterator<Item = VertexId> + '_ {
        self.vertices.iter().map(|&v| VertexId(v))
    }

    pub fn cardinality(&self) -> usize {
        self.vertices.len()
    }

    pub fn weight(&self) -> f64 {
        self.weight
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v.0).is_ok()
    }

    /// Sorted raw 1-based vertex ids.
    pub fn as_slice(&self) -> &[u32] {
        &self.vertices
    }
}

/// Weights given to the edges of a dual hypergraph.
#[derive(Debug, Clone, Copy)]
pub enum DualWeights<'a> {
    /// Every dual edge has weight 1.
    Unit,
    /// Dual edge `j` gets the weight of source vertex `j` (weighted vertex cover).
    Vertex(&'a [f64]),
}

/// Checks the hypergraph invariants without building one.
pub fn validate(n: usize, edges: &[Hyperedge]) -> Result<(), HypergraphError> {
    if n == 0 {
        return Err(HypergraphError::NoVertices);
    }
    if edges.is_empty() {
        return Err(HypergraphError::NoEdges);
    }
    let mut covered = FixedBitSet::with_capacity(n);
    for (i, edge) in edges.iter().enumerate() {
        let id = EdgeId::from_index(i);
        if edge.vertices.is_empty() {
            return Err(HypergraphError::EmptyEdge(id));
        }
        if let Some(&bad) = edge.vertices.iter().find(|&&v| v == 0 || v as usize > n) {
            return Err(HypergraphError::VertexOutOfRange { edge: id, vertex: bad, n });
        }
        if let Some(pair) = edge.vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(HypergraphError::DuplicateVertex { edge: id, vertex: VertexId(pair[0]) });
        }
        if !(edge.weight > 0.0 && edge.weight.is_finite()) {
            return Err(HypergraphError::NonPositiveWeight { edge: id, weight: edge.weight });
        }
        for &v in &edge.vertices {
            covered.insert(v as usize - 1);
        }
    }
    match covered.zeroes().next() {
        Some(missing) => Err(HypergraphError::UncoveredVertex(VertexId::from_index(missing))),
        None => Ok(()),
    }
}

/// A valid hypergraph: `n >= 1` vertices, `m >= 1` non-empty positively
/// weighted edges whose union is the whole vertex set.
#[derive(Debug, Clone, PartialEq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Hyperedge>,
    incidence: Vec<Vec<EdgeId>>,
}

impl Hypergraph {
    pub fn new(n: usize, edges: Vec<Hyperedge>) -> Result<Self, HypergraphError> {
        validate(n, &edges)?;
        let mut incidence = vec![Vec::new(); n];
        for (i, edge) in edges.iter().enumerate() {
            for &v in &edge.vertices {
                incidence[v as usize - 1].push(EdgeId::from_index(i));
            }
        }
        Ok(Self { n, edges, incidence })
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of hyperedges.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Hyperedge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> &Hyperedge {
        &self.edges[id.index()]
    }

    pub fn edge_ids(&self) -> impl ExactSizeIterator<Item = EdgeId> {
        (0..self.m()).map(EdgeId::from_index)
    }

    pub fn vertex_ids(&self) -> impl ExactSizeIterator<Item = VertexId> {
        (0..self.n).map(VertexId::from_index)
    }

    /// Edges containing `v`, ascending.
    pub fn incident_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.incidence[v.index()]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.incidence[v.index()].len()
    }

    pub fn is_unweighted(&self) -> bool {
        self.edges.iter().all(|e| e.weight == 1.0)
    }

    /// Vertices contained in exactly one edge.
    pub fn pendant_vertices(&self) -> VertexSet {
        let mut out = VertexSet::with_capacity(self.n);
        for v in self.vertex_ids().filter(|&v| self.degree(v) == 1) {
            out.insert(v);
        }
        out
    }

    /// Edges containing at least one pendant vertex; every edge cover
    /// includes them.
    pub fn forced_edges(&self) -> EdgeSet {
        let mut out = EdgeSet::with_capacity(self.m());
        for v in self.vertex_ids().filter(|&v| self.degree(v) == 1) {
            out.insert(self.incidence[v.index()][0]);
        }
        out
    }

    /// Every vertex lies in some edge of `t`.
    pub fn is_edge_cover(&self, t: &EdgeSet) -> bool {
        self.incidence.iter().all(|edges| edges.iter().any(|&e| t.contains(e)))
    }

    /// Every edge meets `s`.
    pub fn is_vertex_cover(&self, s: &VertexSet) -> bool {
        self.edges.iter().all(|e| e.vertices().any(|v| s.contains(v)))
    }

    /// No edge lies entirely inside `i`.
    pub fn is_weak_independent(&self, i: &VertexSet) -> bool {
        self.edges.iter().all(|e| e.vertices().any(|v| !i.contains(v)))
    }

    /// Every edge meets `i` in at most one vertex.
    pub fn is_strong_independent(&self, i: &VertexSet) -> bool {
        self.edges.iter().all(|e| e.vertices().filter(|&v| i.contains(v)).count() <= 1)
    }

    /// The dual with unit edge weights.
    pub fn dual(&self) -> Hypergraph {
        self.dual_with(DualWeights::Unit).expect("unit dual weights are always valid")
    }

    /// The dual hypergraph: vertex `i` of the dual is edge `i` of `self`, and
    /// dual edge `j` holds the edges of `self` that contain vertex `j`.
    pub fn dual_with(&self, weights: DualWeights<'_>) -> Result<Hypergraph, HypergraphError> {
        if let DualWeights::Vertex(w) = weights {
            if w.len() != self.n {
                return Err(HypergraphError::WeightCountMismatch { expected: self.n, got: w.len() });
            }
        }
        let edges = self
            .incidence
            .iter()
            .enumerate()
            .map(|(j, incident)| {
                let weight = match weights {
                    DualWeights::Unit => 1.0,
                    DualWeights::Vertex(w) => w[j],
                };
                Hyperedge::new(incident.iter().map(|e| e.get()), weight)
            })
            .collect();
        Hypergraph::new(self.m(), edges)
    }
}
