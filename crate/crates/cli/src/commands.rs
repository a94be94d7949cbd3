//! Subcommand implementations. Each returns the rendered JSON report plus the
//! process exit code, so the binary and the tests share one code path.

use std::collections::{BTreeMap, BTreeSet};

use anyhow::{anyhow, bail, Result};
use levelable::{
    betti_tail, build_system, decide_levelable, hilbert_vector, inverse_system_generators,
    level_tuple_disjoint, level_tuple_forest, level_tuple_pure, nonlevelable_family_facets,
    normalize, socle_bruteforce_with_cap, socle_vector, verify_certificate, Error, ExponentTuple,
    InfeasibilityReport, Monomial, SimplicialComplex, Verdict, VertexSet,
};
use serde::Serialize;
use serde_json::Number;

use crate::document::{ComplexDocument, GraphDocument};

/// A finished subcommand: the JSON to print and the exit code to return.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub json: String,
    pub code: i32,
}

fn render<T: Serialize>(report: &T, code: i32) -> Result<Outcome> {
    let mut json = serde_json::to_string_pretty(report)?;
    json.push('\n');
    Ok(Outcome { json, code })
}

/// Wraps core errors that the user can fix by normalizing first.
fn with_hint(e: Error) -> anyhow::Error {
    match e {
        Error::SingletonFacet(_) => anyhow!(
            "{e}; set that vertex's exponent to 1 and rerun with --normalize to drop it"
        ),
        Error::BadExponent {
            value: 1, min: 2, ..
        } => anyhow!("{e}; rerun with --normalize to drop exponent-1 vertices"),
        _ => anyhow::Error::new(e),
    }
}

fn complex_with_exponents(
    doc: &ComplexDocument,
    normalize_first: bool,
) -> Result<(SimplicialComplex, ExponentTuple)> {
    let complex = doc.to_complex()?;
    let raw = doc.exponents()?;
    if normalize_first {
        Ok(normalize(&complex, &raw)?)
    } else {
        let a = ExponentTuple::new(raw).map_err(with_hint)?;
        Ok((complex, a))
    }
}

fn complex_maybe_normalized(
    doc: &ComplexDocument,
    normalize_first: bool,
) -> Result<SimplicialComplex> {
    let complex = doc.to_complex()?;
    if normalize_first && doc.exponents.is_some() {
        let (reduced, _) = normalize(&complex, &doc.exponents()?)?;
        return Ok(reduced);
    }
    Ok(complex)
}

/// A monomial as a label-to-exponent object; zero exponents are omitted.
fn monomial_map(m: &Monomial, vertices: &VertexSet) -> BTreeMap<String, u64> {
    m.exponents()
        .iter()
        .enumerate()
        .filter(|&(_, &e)| e > 0)
        .map(|(i, &e)| (vertices.label(i).to_string(), e))
        .collect()
}

fn big_numbers<T: std::fmt::Display>(values: &[T]) -> Vec<Number> {
    values
        .iter()
        .map(|v| v.to_string().parse().expect("decimal digits"))
        .collect()
}

#[derive(Serialize)]
struct SocleReport {
    h_vector: Vec<Number>,
    socle_vector: Vec<usize>,
    socle_degree: usize,
    #[serde(rename = "type")]
    cm_type: usize,
    inverse_system_generators: Vec<BTreeMap<String, u64>>,
    is_level: bool,
    is_gorenstein: bool,
}

pub fn cmd_socle(doc: &ComplexDocument, normalize_first: bool) -> Result<Outcome> {
    let (complex, a) = complex_with_exponents(doc, normalize_first)?;
    let h = hilbert_vector(&complex, &a)?;
    let s = socle_vector(&complex, &a)?;
    let generators = inverse_system_generators(&complex, &a)?;
    let report = SocleReport {
        h_vector: big_numbers(h.values()),
        socle_vector: s.values().to_vec(),
        socle_degree: s.socle_degree(),
        cm_type: s.cm_type(),
        inverse_system_generators: generators
            .iter()
            .map(|m| monomial_map(m, complex.vertices()))
            .collect(),
        is_level: s.is_level(),
        is_gorenstein: s.cm_type() == 1,
    };
    render(&report, 0)
}

#[derive(Serialize)]
struct SystemJson {
    rows: Vec<Vec<i64>>,
    rhs: Vec<i64>,
}

fn system_json(complex: &SimplicialComplex) -> Result<SystemJson> {
    let system = build_system(complex).map_err(with_hint)?;
    Ok(SystemJson {
        rows: system
            .rows()
            .iter()
            .map(|r| r.coefficients.clone())
            .collect(),
        rhs: system.rows().iter().map(|r| r.rhs).collect(),
    })
}

#[derive(Serialize)]
struct ReportJson {
    forced: Vec<String>,
    equations: Vec<String>,
}

fn report_json(report: &InfeasibilityReport, vertices: &VertexSet) -> ReportJson {
    ReportJson {
        forced: report
            .forced_nonpositive()
            .iter()
            .map(|&i| vertices.label(i).to_string())
            .collect(),
        equations: report.equations(vertices),
    }
}

fn exit_code(verdict: Verdict) -> i32 {
    match verdict {
        Verdict::NotLevelable => 1,
        Verdict::Levelable | Verdict::TriviallyGorenstein => 0,
    }
}

#[derive(Serialize)]
struct LevelableReport {
    verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<Vec<u64>>,
    system: SystemJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<ReportJson>,
}

pub fn cmd_levelable(doc: &ComplexDocument, normalize_first: bool) -> Result<Outcome> {
    let complex = complex_maybe_normalized(doc, normalize_first)?;
    let decision = decide_levelable(&complex).map_err(with_hint)?;
    let system = match decision.verdict {
        // One facet: nothing to compare, the system is empty.
        Verdict::TriviallyGorenstein => SystemJson {
            rows: Vec::new(),
            rhs: Vec::new(),
        },
        _ => system_json(&complex)?,
    };
    let report = LevelableReport {
        verdict: decision.verdict.as_str(),
        certificate: decision.certificate.as_ref().map(|a| a.values().to_vec()),
        system,
        report: decision
            .report
            .as_ref()
            .map(|r| report_json(r, complex.vertices())),
    };
    render(&report, exit_code(decision.verdict))
}

/// How `construct` should pick the exponent tuple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Strategy {
    /// All facets share one dimension: assign every vertex the exponent 2.
    Pure,
    /// Pairwise disjoint facets: balance weights through one slack vertex per facet.
    Disjoint,
    /// Simplicial forest: peel a leaf, recurse, then rescale to absorb it.
    Forest,
    /// Try pure, then disjoint, then forest, then fall back to the solver.
    Auto,
}

impl Strategy {
    fn name(self) -> &'static str {
        match self {
            Strategy::Pure => "pure",
            Strategy::Disjoint => "disjoint",
            Strategy::Forest => "forest",
            Strategy::Auto => "auto",
        }
    }
}

#[derive(Serialize)]
struct ConstructReport {
    strategy: &'static str,
    verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verified: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<ReportJson>,
}

fn constructed(
    complex: &SimplicialComplex,
    strategy: Strategy,
    tuple: ExponentTuple,
) -> Result<Outcome> {
    let verified = verify_certificate(complex, &tuple)?;
    if !verified {
        bail!(
            "strategy {} produced ({}) but the socle is not level; this is a bug",
            strategy.name(),
            tuple
                .values()
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        );
    }
    let report = ConstructReport {
        strategy: strategy.name(),
        verdict: Verdict::Levelable.as_str(),
        certificate: Some(tuple.values().to_vec()),
        verified: Some(true),
        report: None,
    };
    render(&report, 0)
}

pub fn cmd_construct(
    doc: &ComplexDocument,
    strategy: Strategy,
    normalize_first: bool,
) -> Result<Outcome> {
    let complex = complex_maybe_normalized(doc, normalize_first)?;
    let attempt = |s: Strategy| -> levelable::Result<ExponentTuple> {
        match s {
            Strategy::Pure => level_tuple_pure(&complex, 2),
            Strategy::Disjoint => level_tuple_disjoint(&complex),
            Strategy::Forest => level_tuple_forest(&complex),
            Strategy::Auto => unreachable!("auto is dispatched below"),
        }
    };
    match strategy {
        Strategy::Pure | Strategy::Disjoint | Strategy::Forest => {
            let tuple = attempt(strategy)
                .map_err(|e| anyhow!("strategy {} inapplicable: {e}", strategy.name()))?;
            constructed(&complex, strategy, tuple)
        }
        Strategy::Auto => {
            for s in [Strategy::Pure, Strategy::Disjoint, Strategy::Forest] {
                if let Ok(tuple) = attempt(s) {
                    return constructed(&complex, s, tuple);
                }
            }
            let decision = decide_levelable(&complex).map_err(with_hint)?;
            let verified = match &decision.certificate {
                Some(a) => Some(verify_certificate(&complex, a)?),
                None => None,
            };
            let report = ConstructReport {
                strategy: "solver",
                verdict: decision.verdict.as_str(),
                certificate: decision.certificate.as_ref().map(|a| a.values().to_vec()),
                verified,
                report: decision
                    .report
                    .as_ref()
                    .map(|r| report_json(r, complex.vertices())),
            };
            render(&report, exit_code(decision.verdict))
        }
    }
}

pub fn cmd_family(n: usize) -> Result<Outcome> {
    let facets = nonlevelable_family_facets(n)?;
    let vertices: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let doc = ComplexDocument {
        facets: facets
            .iter()
            .map(|f| f.iter().map(|&v| vertices[v].clone()).collect())
            .collect(),
        vertices,
        exponents: None,
    };
    render(&doc, 0)
}

#[derive(Serialize)]
struct BettiPair {
    shift: usize,
    multiplicity: usize,
}

#[derive(Serialize)]
struct GraphReport {
    independence_complex: Vec<Vec<String>>,
    max_independent_set_count: usize,
    betti_tail: Vec<BettiPair>,
    #[serde(rename = "type")]
    cm_type: usize,
}

pub fn cmd_graph(doc: &GraphDocument) -> Result<Outcome> {
    let graph = doc.to_graph()?;
    let complex = graph.independence_complex();
    let tail = betti_tail(&graph);
    let facets: Vec<Vec<String>> = complex
        .facets()
        .iter()
        .map(|f| {
            f.members()
                .map(|v| complex.vertices().label(v).to_string())
                .collect()
        })
        .collect();
    let report = GraphReport {
        max_independent_set_count: facets.len(),
        cm_type: facets.len(),
        independence_complex: facets,
        betti_tail: tail
            .pairs()
            .iter()
            .map(|p| BettiPair {
                shift: p.shift,
                multiplicity: p.multiplicity,
            })
            .collect(),
    };
    render(&report, 0)
}

#[derive(Serialize)]
struct OracleReport {
    monomials: Vec<BTreeMap<String, u64>>,
    #[serde(rename = "match")]
    matches: bool,
}

pub fn cmd_oracle(doc: &ComplexDocument, max_box: u64, normalize_first: bool) -> Result<Outcome> {
    let (complex, a) = complex_with_exponents(doc, normalize_first)?;
    let found = socle_bruteforce_with_cap(&complex, &a, max_box)?;
    let expected = inverse_system_generators(&complex, &a)?;
    let found_set: BTreeSet<&[u64]> = found.iter().map(|m| m.exponents()).collect();
    let expected_set: BTreeSet<&[u64]> = expected.iter().map(|m| m.exponents()).collect();
    let report = OracleReport {
        monomials: found
            .iter()
            .map(|m| monomial_map(m, complex.vertices()))
            .collect(),
        matches: found_set == expected_set,
    };
    render(&report, 0)
}
