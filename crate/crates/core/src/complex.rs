use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};

/// Ordered collection of distinct vertex labels. Vertex `i` carries label
/// `names()[i]`; all other types in this crate speak in indices and only the
/// boundary layers touch labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexSet {
    names: Vec<String>,
}

impl VertexSet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let mut seen = BTreeSet::new();
        for name in &names {
            if !seen.insert(name.as_str()) {
                return Err(Error::DuplicateLabel(name.clone()));
            }
        }
        Ok(VertexSet { names })
    }

    /// Labels `x1..xn`.
    pub fn numbered(n: usize) -> Result<Self> {
        VertexSet::new((1..=n).map(|i| format!("x{i}")))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn label(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.names.iter().position(|n| n == label)
    }
}

/// Nonempty set of vertex indices. The derived order is lexicographic on the
/// sorted members, which fixes the canonical facet order everywhere.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Facet {
    members: BTreeSet<usize>,
}

impl Facet {
    pub fn new<I: IntoIterator<Item = usize>>(members: I) -> Result<Self> {
        let members: BTreeSet<usize> = members.into_iter().collect();
        if members.is_empty() {
            return Err(Error::EmptyComplex);
        }
        Ok(Facet { members })
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn as_set(&self) -> &BTreeSet<usize> {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.contains(&v)
    }

    pub fn is_subset_of(&self, other: &Facet) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn intersection(&self, other: &Facet) -> BTreeSet<usize> {
        &self.members & &other.members
    }
}

impl fmt::Display for Facet {
    /// Members shown 1-based, matching the usual written form of a face.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.members.iter().map(|v| v + 1).join(", "))
    }
}

/// Outcome of testing one facet for the leaf property.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LeafCheck {
    /// The complex has no other facet; a lone facet is its own leaf.
    OnlyFacet,
    /// Some other facet contains every intersection of the tested facet with
    /// the rest of the complex.
    Leaf { witness: Facet },
    NotLeaf,
}

/// Largest facet count for which the forest check will enumerate all
/// sub-collections.
pub const FOREST_FACET_CAP: usize = 20;

/// A simplicial complex stored by its facets, always canonical: facets are
/// pairwise incomparable, sorted, and jointly cover the vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: VertexSet,
    facets: Vec<Facet>,
}

impl SimplicialComplex {
    /// Builds the complex generated by `faces`. Redundant and duplicate faces
    /// are dropped; the survivors are the facets. Every vertex must appear in
    /// some face and every index must be in range.
    pub fn new_from_faces(vertices: VertexSet, faces: Vec<BTreeSet<usize>>) -> Result<Self> {
        if faces.is_empty() {
            return Err(Error::EmptyComplex);
        }
        let n = vertices.len();
        for face in &faces {
            if let Some(&v) = face.iter().find(|&&v| v >= n) {
                return Err(Error::UnknownVertex(v, n));
            }
        }
        let mut covered = vec![false; n];
        for face in &faces {
            for &v in face {
                covered[v] = true;
            }
        }
        if let Some(v) = covered.iter().position(|c| !c) {
            return Err(Error::UncoveredVertex(v));
        }
        let mut maximal: Vec<BTreeSet<usize>> = Vec::new();
        for face in faces {
            if face.is_empty() {
                continue;
            }
            if maximal.iter().any(|m| face.is_subset(m)) {
                continue;
            }
            maximal.retain(|m| !m.is_subset(&face));
            maximal.push(face);
        }
        if maximal.is_empty() {
            return Err(Error::EmptyComplex);
        }
        let mut facets: Vec<Facet> = maximal.into_iter().map(|m| Facet { members: m }).collect();
        facets.sort();
        Ok(SimplicialComplex { vertices, facets })
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn has_singleton_facet(&self) -> bool {
        self.facets.iter().any(|f| f.len() == 1)
    }

    /// A set is a face exactly when some facet contains it. The empty set is
    /// a face of every (nonempty) complex.
    pub fn is_face(&self, subset: &BTreeSet<usize>) -> bool {
        subset.iter().all(|&v| v < self.vertices.len())
            && self
                .facets
                .iter()
                .any(|f| subset.is_subset(&f.members))
    }

    /// All faces, the empty face included, in graded order: by size, then
    /// lexicographically.
    pub fn faces(&self) -> Vec<BTreeSet<usize>> {
        let mut seen: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        for facet in &self.facets {
            let members: Vec<usize> = facet.members().collect();
            for k in 0..=members.len() {
                for subset in members.iter().copied().combinations(k) {
                    seen.insert(subset.into_iter().collect());
                }
            }
        }
        let mut faces: Vec<BTreeSet<usize>> = seen.into_iter().collect();
        faces.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        faces
    }

    pub fn is_pure(&self) -> bool {
        let d = self.facets[0].len();
        self.facets.iter().all(|f| f.len() == d)
    }

    /// Leaf test for one facet of this complex: `facet` is a leaf when a
    /// single other facet (the witness) absorbs all its intersections.
    pub fn leaf_check(&self, facet: &Facet) -> Result<LeafCheck> {
        let idx = self
            .facets
            .iter()
            .position(|f| f == facet)
            .ok_or_else(|| Error::NotAFacet(facet.to_string()))?;
        if self.facets.len() == 1 {
            return Ok(LeafCheck::OnlyFacet);
        }
        let all: Vec<usize> = (0..self.facets.len()).collect();
        Ok(match find_witness(&self.facets, &all, idx) {
            Some(w) => LeafCheck::Leaf {
                witness: self.facets[w].clone(),
            },
            None => LeafCheck::NotLeaf,
        })
    }

    pub fn is_leaf(&self, facet: &Facet) -> Result<bool> {
        Ok(!matches!(self.leaf_check(facet)?, LeafCheck::NotLeaf))
    }

    /// Forest test by definition: every nonempty sub-collection of facets has
    /// a leaf. Exponential in the facet count, so it refuses to run past
    /// `cap` facets.
    pub fn is_forest_with_cap(&self, cap: usize) -> Result<bool> {
        let t = self.facets.len();
        if t > cap {
            return Err(Error::TooManyFacets { t, cap });
        }
        // Size-one sub-collections are leaves by convention, so start at pairs.
        for mask in 1u32..(1u32 << t) {
            if mask.count_ones() < 2 {
                continue;
            }
            let members: Vec<usize> = (0..t).filter(|i| mask & (1 << i) != 0).collect();
            let has_leaf = members
                .iter()
                .any(|&fi| find_witness(&self.facets, &members, fi).is_some());
            if !has_leaf {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_forest(&self) -> Result<bool> {
        self.is_forest_with_cap(FOREST_FACET_CAP)
    }

    /// Induced subcomplex on `keep`, reindexed to 0..keep.len() with the
    /// original labels carried over.
    pub fn restrict(&self, keep: &BTreeSet<usize>) -> Result<SimplicialComplex> {
        let n = self.vertices.len();
        if let Some(&v) = keep.iter().find(|&&v| v >= n) {
            return Err(Error::UnknownVertex(v, n));
        }
        if keep.is_empty() {
            return Err(Error::EmptyComplex);
        }
        let order: Vec<usize> = keep.iter().copied().collect();
        let reindex = |v: usize| order.binary_search(&v).expect("kept vertex");
        let vertices = VertexSet::new(order.iter().map(|&v| self.vertices.label(v)))?;
        let faces: Vec<BTreeSet<usize>> = self
            .facets
            .iter()
            .map(|f| f.members().filter(|v| keep.contains(v)).map(reindex).collect())
            .collect();
        SimplicialComplex::new_from_faces(vertices, faces)
    }
}

/// Finds the canonically first witness making `facets[fi]` a leaf of the
/// sub-collection `members` (indices into `facets`, assumed to contain `fi`
/// and at least one other element).
pub(crate) fn find_witness(facets: &[Facet], members: &[usize], fi: usize) -> Option<usize> {
    let f = &facets[fi];
    members
        .iter()
        .copied()
        .filter(|&gi| gi != fi)
        .find(|&gi| {
            let absorbed = facets[gi].intersection(f);
            members
                .iter()
                .all(|&hi| hi == fi || hi == gi || facets[hi].intersection(f).is_subset(&absorbed))
        })
}
