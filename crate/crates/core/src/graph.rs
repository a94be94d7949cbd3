use std::collections::BTreeSet;

use crate::complex::{SimplicialComplex, VertexSet};
use crate::error::{Error, Result};

/// Finite simple graph on labelled vertices. Edges are stored as ordered
/// index pairs; parallel edges collapse, loops are rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertices: VertexSet,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn new<I: IntoIterator<Item = (usize, usize)>>(
        vertices: VertexSet,
        edges: I,
    ) -> Result<Self> {
        let n = vertices.len();
        let mut normalized = BTreeSet::new();
        for (u, v) in edges {
            if u >= n {
                return Err(Error::UnknownVertex(u, n));
            }
            if v >= n {
                return Err(Error::UnknownVertex(v, n));
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            normalized.insert((u.min(v), u.max(v)));
        }
        Ok(Graph {
            vertices,
            edges: normalized,
        })
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// The independence complex: faces are the independent vertex sets, so
    /// facets are the maximal independent sets. Every graph yields a valid
    /// complex because singletons are independent.
    pub fn independence_complex(&self) -> SimplicialComplex {
        let n = self.vertex_count();
        assert!(n <= 63, "independence complex enumeration uses u64 masks");
        let mut adjacency = vec![0u64; n];
        for &(u, v) in &self.edges {
            adjacency[u] |= 1 << v;
            adjacency[v] |= 1 << u;
        }
        let mut maximal: Vec<BTreeSet<usize>> = Vec::new();
        for mask in 1u64..(1u64 << n) {
            let independent =
                (0..n).all(|v| mask & (1 << v) == 0 || adjacency[v] & mask == 0);
            if !independent {
                continue;
            }
            let extendable =
                (0..n).any(|v| mask & (1 << v) == 0 && adjacency[v] & mask == 0);
            if extendable {
                continue;
            }
            maximal.push((0..n).filter(|v| mask & (1 << v) != 0).collect());
        }
        SimplicialComplex::new_from_faces(self.vertices.clone(), maximal)
            .expect("maximal independent sets cover every vertex")
    }
}
