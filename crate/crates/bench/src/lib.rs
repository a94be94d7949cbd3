//! Deterministic complex families used as benchmark inputs.

use std::collections::BTreeSet;

use levelable::{SimplicialComplex, VertexSet};

/// A triangle with a tail of `edge_count` edges: {1,2,3}, {3,4}, {4,5}, ...
/// Mixed dimensions keep the solver pivoting, and the facet graph is a
/// forest, so the same input exercises the constructive route.
pub fn chain(edge_count: usize) -> SimplicialComplex {
    assert!(edge_count >= 1);
    let n = edge_count + 3;
    let mut faces: Vec<BTreeSet<usize>> = vec![(0..3).collect()];
    for k in 2..n - 1 {
        faces.push(BTreeSet::from([k, k + 1]));
    }
    SimplicialComplex::new_from_faces(VertexSet::numbered(n).unwrap(), faces).unwrap()
}

/// The boundary of the (n-1)-simplex: every (n-1)-subset is a facet, so the
/// complex has 2^n - 2 faces and the Hilbert sum does real work.
pub fn simplex_boundary(n: usize) -> SimplicialComplex {
    assert!(n >= 2);
    let faces = (0..n)
        .map(|skip| (0..n).filter(|&v| v != skip).collect())
        .collect();
    SimplicialComplex::new_from_faces(VertexSet::numbered(n).unwrap(), faces).unwrap()
}

/// A path of `edge_count` edges; with t facets the definitional forest check
/// walks all 2^t sub-collections.
pub fn edge_path(edge_count: usize) -> SimplicialComplex {
    assert!(edge_count >= 1);
    let faces = (0..edge_count)
        .map(|k| BTreeSet::from([k, k + 1]))
        .collect();
    SimplicialComplex::new_from_faces(VertexSet::numbered(edge_count + 1).unwrap(), faces)
        .unwrap()
}
