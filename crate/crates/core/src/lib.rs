//! Simplicial complexes, the artinian monomial algebras they define, and
//! levelability.
//!
//! Given a complex Δ on vertices x1..xn and exponents a_i ≥ 2, the algebra
//! A(Δ, a) = k[x]/(I_Δ, x1^a1, ..., xn^an) has its socle spelled out by the
//! facets: facet F contributes an inverse-system generator of degree
//! Σ_{i∈F}(a_i - 1). The algebra is level when those degrees all agree,
//! which turns levelability of Δ into an exact linear feasibility question.
//! This crate computes the numerical data (h-vector, socle-vector, type,
//! Betti tail of edge-ideal quotients), decides levelability with an exact
//! rational solver, and builds certificate tuples for pure, disjoint-facet,
//! and forest complexes, plus the classical families that admit none.

mod algebra;
mod complex;
mod error;
mod feasible;
mod graph;
mod level;
mod monomial;

pub use algebra::{
    artinian_ideal, betti_tail, cm_type, hilbert_vector, inverse_system_generators,
    is_gorenstein, normalize, socle_bruteforce, socle_bruteforce_with_cap, socle_vector,
    stanley_reisner_ideal, BettiShift, BettiTail, HVector, SocleVector, SOCLE_BOX_CAP,
};
pub use complex::{Facet, LeafCheck, SimplicialComplex, VertexSet, FOREST_FACET_CAP};
pub use error::{Error, Result};
pub use graph::Graph;
pub use level::{
    build_system, decide_levelable, level_tuple_disjoint, level_tuple_forest, level_tuple_pure,
    nonlevelable_family, nonlevelable_family_facets, verify_certificate, InfeasibilityReport,
    LevelDecision, LinearSystem, SystemRow, Verdict,
};
pub use monomial::{ExponentTuple, Monomial, MonomialIdeal};
