use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex set is empty")]
    EmptyVertexSet,
    #[error("duplicate vertex label {0:?}")]
    DuplicateLabel(String),
    #[error("a complex needs at least one nonempty face")]
    EmptyComplex,
    #[error("vertex index {0} out of range for {1} vertices")]
    UnknownVertex(usize, usize),
    #[error("vertex {0} lies on no face; drop it or add a singleton face")]
    UncoveredVertex(usize),
    #[error("edge {0}-{0} is a loop")]
    LoopEdge(usize),
    #[error("{0} is not a facet of the complex")]
    NotAFacet(String),
    #[error("forest check enumerates all 2^t facet subsets; t = {t} exceeds the cap {cap}")]
    TooManyFacets { t: usize, cap: usize },
    #[error("exponent a_{index} = {value} but every exponent must be at least {min}")]
    BadExponent { index: usize, value: u64, min: u64 },
    #[error("expected {expected} exponents, got {got}")]
    WrongArity { expected: usize, got: usize },
    #[error("normalization removed every vertex; the algebra is the base field")]
    CollapsedToEmpty,
    #[error("enumeration box has {size} monomials, above the cap {cap}")]
    BoxTooLarge { size: u128, cap: u64 },
    #[error("the complex has a single facet; the level system needs at least two")]
    SingleFacet,
    #[error("facet {0} is a single vertex, which the level criterion excludes")]
    SingletonFacet(String),
    #[error("facets do not all have the same dimension")]
    NotPure,
    #[error("facets are not pairwise disjoint")]
    NotDisjoint,
    #[error("the facet complex is not a forest")]
    NotForest,
    #[error("the non-levelable family starts at n = 5, got n = {0}")]
    FamilyTooSmall(usize),
}
