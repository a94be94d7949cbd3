//! Input documents: labeled complexes and graphs as they appear on disk.

use anyhow::{anyhow, bail, Context, Result};
use levelable::{Graph, SimplicialComplex, VertexSet};
use serde::{Deserialize, Serialize};

/// A simplicial complex given by vertex labels and facet label lists,
/// optionally with one exponent per vertex.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDocument {
    pub vertices: Vec<String>,
    pub facets: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exponents: Option<Vec<u64>>,
}

/// A graph given by vertex labels and label-pair edges.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String)>,
}

fn resolve(vertices: &VertexSet, label: &str, place: &str) -> Result<usize> {
    vertices
        .index_of(label)
        .ok_or_else(|| anyhow!("unknown vertex \"{label}\" in {place}"))
}

impl ComplexDocument {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).context("parsing complex document")
    }

    /// Builds the complex, checking every facet label against the vertex list.
    pub fn to_complex(&self) -> Result<SimplicialComplex> {
        let vertices = VertexSet::new(self.vertices.clone())?;
        let mut facets = Vec::with_capacity(self.facets.len());
        for (k, facet) in self.facets.iter().enumerate() {
            let mut members = std::collections::BTreeSet::new();
            for label in facet {
                members.insert(resolve(&vertices, label, &format!("facet {}", k + 1))?);
            }
            facets.push(members);
        }
        Ok(SimplicialComplex::new_from_faces(vertices, facets)?)
    }

    /// The exponents field, checked for arity. Errors when absent.
    pub fn exponents(&self) -> Result<Vec<u64>> {
        let exponents = self
            .exponents
            .as_ref()
            .ok_or_else(|| anyhow!("document has no exponents field"))?;
        if exponents.len() != self.vertices.len() {
            bail!(
                "expected {} exponents, got {}",
                self.vertices.len(),
                exponents.len()
            );
        }
        Ok(exponents.clone())
    }
}

impl GraphDocument {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).context("parsing graph document")
    }

    pub fn to_graph(&self) -> Result<Graph> {
        let vertices = VertexSet::new(self.vertices.clone())?;
        let mut edges = Vec::with_capacity(self.edges.len());
        for (k, (u, v)) in self.edges.iter().enumerate() {
            let place = format!("edge {}", k + 1);
            edges.push((
                resolve(&vertices, u, &place)?,
                resolve(&vertices, v, &place)?,
            ));
        }
        Ok(Graph::new(vertices, edges)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_document_round_trip() {
        let doc = ComplexDocument::parse(
            r#"{"vertices": ["a", "b", "c"], "facets": [["a", "b"], ["c"]], "exponents": [2, 2, 3]}"#,
        )
        .unwrap();
        let complex = doc.to_complex().unwrap();
        assert_eq!(complex.facets().len(), 2);
        assert_eq!(doc.exponents().unwrap(), vec![2, 2, 3]);
    }

    #[test]
    fn unknown_facet_label_is_rejected() {
        let doc = ComplexDocument::parse(
            r#"{"vertices": ["a", "b"], "facets": [["a", "z"]]}"#,
        )
        .unwrap();
        let err = doc.to_complex().unwrap_err().to_string();
        assert!(err.contains("\"z\""), "{err}");
        assert!(err.contains("facet 1"), "{err}");
    }

    #[test]
    fn exponent_arity_is_checked() {
        let doc = ComplexDocument::parse(
            r#"{"vertices": ["a", "b"], "facets": [["a", "b"]], "exponents": [2]}"#,
        )
        .unwrap();
        let err = doc.exponents().unwrap_err().to_string();
        assert!(err.contains("expected 2 exponents"), "{err}");
    }

    #[test]
    fn stray_fields_are_rejected() {
        assert!(ComplexDocument::parse(
            r#"{"vertices": ["a"], "facets": [["a"]], "edges": []}"#
        )
        .is_err());
    }

    #[test]
    fn graph_document_round_trip() {
        let doc = GraphDocument::parse(
            r#"{"vertices": ["a", "b", "c"], "edges": [["a", "b"], ["b", "c"]]}"#,
        )
        .unwrap();
        let graph = doc.to_graph().unwrap();
        assert_eq!(graph.edge_count(), 2);
    }
}
