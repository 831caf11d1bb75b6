//! Core hypergraph representation.
//!
//! A [`Hypergraph`] is a vertex count `n` (vertices are the dense ids
//! `0..n-1`) together with a set of edges, each a strictly increasing list of
//! vertex ids. Edges are deduplicated at construction time; duplicate input
//! edges are a validation error, not a silent merge.
//!
//! All operations are pure and the types are immutable after construction, so
//! values can be shared freely across threads.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Validation and argument errors for hypergraph construction and operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HypergraphError {
    /// An edge mentions a vertex id `>= n`.
    VertexOutOfRange { edge: usize, id: u32, n: u32 },
    /// An edge is empty.
    EmptyEdge { edge: usize },
    /// An edge repeats a vertex id.
    RepeatedVertex { edge: usize, id: u32 },
    /// Two edges are equal as sets.
    DuplicateEdge { edge: usize },
    /// The operation requires at least one vertex.
    NoVertices,
    /// `remove_vertex` was given an id `>= n`.
    VertexIdOutOfRange { id: u32, n: u32 },
}

impl fmt::Display for HypergraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HypergraphError::VertexOutOfRange { edge, id, n } => {
                write!(f, "vertex id out of range: edge {edge} contains {id} but n = {n}")
            }
            HypergraphError::EmptyEdge { edge } => write!(f, "empty edge at index {edge}"),
            HypergraphError::RepeatedVertex { edge, id } => {
                write!(f, "repeated vertex {id} in edge {edge}")
            }
            HypergraphError::DuplicateEdge { edge } => {
                write!(f, "duplicate edge at index {edge}")
            }
            HypergraphError::NoVertices => write!(f, "hypergraph has no vertices"),
            HypergraphError::VertexIdOutOfRange { id, n } => {
                write!(f, "vertex id {id} out of range for n = {n}")
            }
        }
    }
}

/// A hypergraph on vertex ids `0..n-1` with a duplicate-free edge set.
///
/// Invariants, enforced by [`Hypergraph::new`]:
/// * every id in every edge lies in `[0, n)`;
/// * no edge is empty; within an edge ids are strictly increasing;
/// * no two edges are equal as sets.
///
/// Edge order is the construction order (it is observable through
/// [`edges`](Hypergraph::edges) and kept deterministic); canonical
/// lexicographic ordering is applied by the wire-format serializer, not here.
#[derive(Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: u32,
    edges: Vec<Vec<u32>>,
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hypergraph(n={}, m={})", self.n, self.edges.len())
    }
}

/// Per-vertex degree scan: `degrees[v]` is the number of edges containing `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub degrees: Vec<u32>,
    pub max: u32,
    pub min: u32,
}

impl Hypergraph {
    /// Builds a hypergraph, normalizing vertex order within each edge and
    /// validating every invariant. Input edges may list vertices in any
    /// order; repeats within an edge and duplicate edges are errors.
    pub fn new(n: u32, edges: Vec<Vec<u32>>) -> Result<Self, HypergraphError> {
        let mut normalized: Vec<Vec<u32>> = Vec::with_capacity(edges.len());
        for (idx, mut edge) in edges.into_iter().enumerate() {
            if edge.is_empty() {
                return Err(HypergraphError::EmptyEdge { edge: idx });
            }
            edge.sort_unstable();
            for pair in edge.windows(2) {
                if pair[0] == pair[1] {
                    return Err(HypergraphError::RepeatedVertex { edge: idx, id: pair[0] });
                }
            }
            let last = *edge.last().expect("nonempty");
            if last >= n {
                return Err(HypergraphError::VertexOutOfRange { edge: idx, id: last, n });
            }
            normalized.push(edge);
        }

        // Duplicate detection on a sorted index view; edge order is preserved.
        let mut order: Vec<usize> = (0..normalized.len()).collect();
        order.sort_unstable_by(|&a, &b| normalized[a].cmp(&normalized[b]));
        for pair in order.windows(2) {
            if normalized[pair[0]] == normalized[pair[1]] {
                let edge = pair[0].max(pair[1]);
                return Err(HypergraphError::DuplicateEdge { edge });
            }
        }

        Ok(Hypergraph { n, edges: normalized })
    }

    /// A hypergraph with `n` vertices and no edges.
    pub fn edgeless(n: u32) -> Self {
        Hypergraph { n, edges: Vec::new() }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn edges(&self) -> &[Vec<u32>] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Returns `k` if every edge has size `k`; `None` if edge sizes differ or
    /// the edge set is empty (uniformity undefined).
    pub fn uniformity(&self) -> Option<u32> {
        let mut sizes = self.edges.iter().map(|e| e.len() as u32);
        let first = sizes.next()?;
        sizes.all(|s| s == first).then_some(first)
    }

    /// True iff every pair of distinct edges shares at most one vertex.
    ///
    /// Runs in `O(Σ |e|²)` by listing every vertex pair inside every edge and
    /// looking for a repeat; two distinct edges share two or more vertices
    /// exactly when some unordered pair appears in both.
    pub fn is_linear(&self) -> bool {
        let mut pairs: Vec<(u32, u32)> = Vec::new();
        for edge in &self.edges {
            for (i, &a) in edge.iter().enumerate() {
                for &b in &edge[i + 1..] {
                    pairs.push((a, b));
                }
            }
        }
        pairs.sort_unstable();
        pairs.windows(2).all(|w| w[0] != w[1])
    }

    /// Degree of every vertex plus the max/min over all `n` vertices.
    /// Rejects the degenerate `n = 0` (no vertices to take a min/max over).
    pub fn degree_profile(&self) -> Result<DegreeProfile, HypergraphError> {
        if self.n == 0 {
            return Err(HypergraphError::NoVertices);
        }
        let mut degrees = vec![0u32; self.n as usize];
        for edge in &self.edges {
            for &v in edge {
                degrees[v as usize] += 1;
            }
        }
        let max = *degrees.iter().max().expect("n >= 1");
        let min = *degrees.iter().min().expect("n >= 1");
        Ok(DegreeProfile { degrees, max, min })
    }

    /// Number of edges with at least one vertex in `S`.
    ///
    /// # Panics
    /// If `S` was built for a different vertex count.
    pub fn covered_edges(&self, s: &VertexSet) -> usize {
        assert_eq!(s.n(), self.n, "vertex set built for a different hypergraph");
        self.edges
            .iter()
            .filter(|edge| edge.iter().any(|&v| s.contains(v)))
            .count()
    }

    /// Deletes vertex `v`, every edge containing it, and renumbers ids above
    /// `v` down by one so ids stay dense. Uniformity of the remaining edges
    /// is unchanged.
    pub fn remove_vertex(&self, v: u32) -> Result<Hypergraph, HypergraphError> {
        if v >= self.n {
            return Err(HypergraphError::VertexIdOutOfRange { id: v, n: self.n });
        }
        let edges = self
            .edges
            .iter()
            .filter(|edge| !edge.contains(&v))
            .map(|edge| edge.iter().map(|&u| if u > v { u - 1 } else { u }).collect())
            .collect();
        Ok(Hypergraph { n: self.n - 1, edges })
    }
}

/// A subset of the vertices of a specific hypergraph.
///
/// Stored as a strictly increasing id list; when `n <= 63` a bitmask is kept
/// alongside so membership tests and subset-enumeration paths are O(1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSet {
    n: u32,
    ids: Vec<u32>,
    mask: Option<u64>,
}

impl VertexSet {
    /// Builds a subset of `0..n-1`. Ids may be unordered; repeats collapse.
    pub fn new(mut ids: Vec<u32>, n: u32) -> Result<Self, HypergraphError> {
        ids.sort_unstable();
        ids.dedup();
        if let Some(&last) = ids.last() {
            if last >= n {
                return Err(HypergraphError::VertexIdOutOfRange { id: last, n });
            }
        }
        let mask = (n <= 63).then(|| ids.iter().fold(0u64, |m, &v| m | 1 << v));
        Ok(VertexSet { n, ids, mask })
    }

    /// Builds a subset from a bitmask over `0..n-1`; requires `n <= 63`.
    pub fn from_mask(mask: u64, n: u32) -> Result<Self, HypergraphError> {
        assert!(n <= 63, "bitmask subsets require n <= 63");
        if mask >> n != 0 {
            let id = 63 - mask.leading_zeros();
            return Err(HypergraphError::VertexIdOutOfRange { id, n });
        }
        let ids = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        Ok(VertexSet { n, ids, mask: Some(mask) })
    }

    pub fn empty(n: u32) -> Self {
        VertexSet { n, ids: Vec::new(), mask: (n <= 63).then_some(0) }
    }

    pub fn full(n: u32) -> Self {
        let ids = (0..n).collect();
        let mask = (n <= 63).then(|| if n == 0 { 0 } else { (1u64 << n) - 1 });
        VertexSet { n, ids, mask }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn ids(&self) -> &[u32] {
        &self.ids
    }

    pub fn contains(&self, v: u32) -> bool {
        match self.mask {
            Some(m) => v < self.n && m >> v & 1 == 1,
            None => self.ids.binary_search(&v).is_ok(),
        }
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.ids.iter().all(|&v| other.contains(v))
    }
}
