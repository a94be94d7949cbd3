//! Levelability: deciding whether some exponent tuple makes the socle land
//! in a single degree, and constructing such tuples.
//!
//! A tuple works exactly when all facet weights Σ_{i∈F}(a_i - 1) agree, a
//! linear condition on the shifted variables b_i = a_i - 1. The system in b
//! is homogeneous, so rational feasibility with b_i ≥ 1 and integer
//! feasibility with a_i ≥ 2 coincide: clear denominators and every
//! constraint survives. The solver works in u_i = b_i - 1 ≥ 0 so a stock
//! phase-1 simplex applies.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::socle_vector;
use crate::complex::{find_witness, Facet, SimplicialComplex, VertexSet};
use crate::error::{Error, Result};
use crate::monomial::ExponentTuple;

type Q = BigRational;

/// One equation of the level criterion, over the original a-variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemRow {
    pub coefficients: Vec<i64>,
    pub rhs: i64,
}

/// The t-1 equations comparing consecutive facets: row k says the a-sum
/// over F_k minus the a-sum over F_{k+1} equals d_k - d_{k+1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSystem {
    rows: Vec<SystemRow>,
}

impl LinearSystem {
    pub fn rows(&self) -> &[SystemRow] {
        &self.rows
    }
}

pub fn build_system(c: &SimplicialComplex) -> Result<LinearSystem> {
    if c.facet_count() < 2 {
        return Err(Error::SingleFacet);
    }
    if let Some(f) = c.facets().iter().find(|f| f.len() == 1) {
        return Err(Error::SingletonFacet(f.to_string()));
    }
    let n = c.vertex_count();
    let rows = c
        .facets()
        .windows(2)
        .map(|pair| {
            let mut coefficients = vec![0i64; n];
            for v in pair[0].members() {
                coefficients[v] += 1;
            }
            for v in pair[1].members() {
                coefficients[v] -= 1;
            }
            SystemRow {
                coefficients,
                rhs: pair[0].len() as i64 - pair[1].len() as i64,
            }
        })
        .collect();
    Ok(LinearSystem { rows })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Levelable,
    NotLevelable,
    TriviallyGorenstein,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Levelable => "LEVELABLE",
            Verdict::NotLevelable => "NOT_LEVELABLE",
            Verdict::TriviallyGorenstein => "TRIVIALLY_GORENSTEIN",
        }
    }
}

/// Why no tuple exists: the reduced homogeneous system in the b-variables,
/// plus any variable it forces to be nonpositive (b_i ≤ 0 means a_i ≤ 1,
/// off the admissible range).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfeasibilityReport {
    forced_nonpositive: Vec<usize>,
    reduced_rows: Vec<Vec<Q>>,
}

impl InfeasibilityReport {
    /// Indices whose shifted variable is forced ≤ 0 by the reduced system.
    pub fn forced_nonpositive(&self) -> &[usize] {
        &self.forced_nonpositive
    }

    pub fn reduced_rows(&self) -> &[Vec<Q>] {
        &self.reduced_rows
    }

    /// The reduced equations rendered over b-variables named by labels.
    pub fn equations(&self, vertices: &VertexSet) -> Vec<String> {
        self.reduced_rows
            .iter()
            .map(|row| {
                let mut out = String::new();
                for (i, coeff) in row.iter().enumerate() {
                    if coeff.is_zero() {
                        continue;
                    }
                    let magnitude = coeff.abs();
                    if out.is_empty() {
                        if coeff.is_negative() {
                            out.push('-');
                        }
                    } else {
                        out.push_str(if coeff.is_negative() { " - " } else { " + " });
                    }
                    if !magnitude.is_one() {
                        out.push_str(&format!("{magnitude}*"));
                    }
                    out.push_str(&format!("b[{}]", vertices.label(i)));
                }
                if out.is_empty() {
                    out.push('0');
                }
                out.push_str(" = 0");
                out
            })
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct LevelDecision {
    pub verdict: Verdict,
    pub certificate: Option<ExponentTuple>,
    pub report: Option<InfeasibilityReport>,
}

/// Decides levelability. One facet is the Gorenstein case and any tuple
/// works; otherwise the b-system is solved exactly, and a feasible rational
/// point is cleared to the integer certificate a_i = b_i + 1. Every
/// LEVELABLE answer re-verifies its certificate before returning.
pub fn decide_levelable(c: &SimplicialComplex) -> Result<LevelDecision> {
    let n = c.vertex_count();
    if c.facet_count() == 1 {
        return Ok(LevelDecision {
            verdict: Verdict::TriviallyGorenstein,
            certificate: Some(ExponentTuple::uniform(n, 2)?),
            report: None,
        });
    }
    let system = build_system(c)?;
    let rows: Vec<Vec<Q>> = system
        .rows()
        .iter()
        .map(|r| {
            r.coefficients
                .iter()
                .map(|&v| Q::from_integer(BigInt::from(v)))
                .collect()
        })
        .collect();
    // In u = a - 2 the right side flips: the constant parts contribute
    // 2·(d_k - d_{k+1}) on the left.
    let rhs: Vec<Q> = system
        .rows()
        .iter()
        .map(|r| Q::from_integer(BigInt::from(-r.rhs)))
        .collect();
    match crate::feasible::feasible_point(n, &rows, &rhs) {
        Some(u) => {
            let b: Vec<Q> = u.into_iter().map(|ui| ui + Q::one()).collect();
            let denominator_lcm = b
                .iter()
                .fold(BigInt::one(), |l, q| l.lcm(q.denom()));
            let integers: Vec<BigInt> = b
                .iter()
                .map(|q| q.numer() * (&denominator_lcm / q.denom()))
                .collect();
            let common = integers
                .iter()
                .fold(BigInt::zero(), |g, v| g.gcd(v));
            let values: Vec<u64> = integers
                .iter()
                .map(|v| {
                    u64::try_from(v / &common).expect("certificate entry fits u64") + 1
                })
                .collect();
            let certificate = ExponentTuple::new(values)?;
            assert!(
                verify_certificate(c, &certificate)?,
                "solver produced a non-level certificate"
            );
            Ok(LevelDecision {
                verdict: Verdict::Levelable,
                certificate: Some(certificate),
                report: None,
            })
        }
        None => {
            let (reduced_rows, pivots) = crate::feasible::rref(&rows);
            let forced_nonpositive = pivots
                .iter()
                .zip(&reduced_rows)
                .filter(|(&p, row)| {
                    row.iter()
                        .enumerate()
                        .all(|(j, v)| j == p || !v.is_negative())
                })
                .map(|(&p, _)| p)
                .collect();
            Ok(LevelDecision {
                verdict: Verdict::NotLevelable,
                certificate: None,
                report: Some(InfeasibilityReport {
                    forced_nonpositive,
                    reduced_rows,
                }),
            })
        }
    }
}

/// True when the tuple levels the algebra: the socle sits entirely in its
/// top degree.
pub fn verify_certificate(c: &SimplicialComplex, a: &ExponentTuple) -> Result<bool> {
    Ok(socle_vector(c, a)?.is_level())
}

pub fn level_tuple_pure(c: &SimplicialComplex, d: u64) -> Result<ExponentTuple> {
    if !c.is_pure() {
        return Err(Error::NotPure);
    }
    ExponentTuple::uniform(c.vertex_count(), d)
}

pub fn level_tuple_disjoint(c: &SimplicialComplex) -> Result<ExponentTuple> {
    let facets = c.facets();
    for (i, f) in facets.iter().enumerate() {
        for g in &facets[i + 1..] {
            if !f.intersection(g).is_empty() {
                return Err(Error::NotDisjoint);
            }
        }
    }
    let assignment = disjoint_assignment(facets);
    collect_assignment(c.vertex_count(), &assignment)
}

pub fn level_tuple_forest(c: &SimplicialComplex) -> Result<ExponentTuple> {
    if let Some(f) = c.facets().iter().find(|f| f.len() == 1) {
        return Err(Error::SingletonFacet(f.to_string()));
    }
    if !c.is_forest()? {
        return Err(Error::NotForest);
    }
    let assignment = forest_assignment(c.facets());
    collect_assignment(c.vertex_count(), &assignment)
}

fn collect_assignment(n: usize, assignment: &BTreeMap<usize, u64>) -> Result<ExponentTuple> {
    debug_assert_eq!(assignment.len(), n, "assignment must cover all vertices");
    ExponentTuple::new((0..n).map(|v| assignment[&v]).collect())
}

fn weight(f: &Facet, assignment: &BTreeMap<usize, u64>) -> u64 {
    f.members().map(|v| assignment[&v] - 1).sum()
}

/// Smallest c ≥ 1 with c·unit ≥ need.
fn smallest_scale(need: u64, unit: u64) -> u64 {
    need.div_ceil(unit).max(1)
}

fn scale_assignment(assignment: &mut BTreeMap<usize, u64>, c: u64) {
    if c > 1 {
        for v in assignment.values_mut() {
            *v = c * (*v - 1) + 1;
        }
    }
}

/// Induction for pairwise disjoint facets. Base: two facets, everything 2
/// except one slack vertex in each, solving (a_x - 1) + (d_1 - 1) =
/// (a_y - 1) + (d_2 - 1) with the smallest admissible values. Step: level
/// the first t-1 facets, scale so the last facet (all 2, one slack) can
/// match their common weight.
fn disjoint_assignment(facets: &[Facet]) -> BTreeMap<usize, u64> {
    let t = facets.len();
    let mut assignment: BTreeMap<usize, u64> = BTreeMap::new();
    match t {
        1 => {
            for v in facets[0].members() {
                assignment.insert(v, 2);
            }
        }
        2 => {
            let d1 = facets[0].len() as i64;
            let d2 = facets[1].len() as i64;
            for v in facets[0].members().chain(facets[1].members()) {
                assignment.insert(v, 2);
            }
            let slack2 = (2i64).max(2 + d1 - d2) as u64;
            let slack1 = ((d2 - d1) + slack2 as i64) as u64;
            let first1 = facets[0].members().next().expect("nonempty facet");
            let first2 = facets[1].members().next().expect("nonempty facet");
            assignment.insert(first1, slack1);
            assignment.insert(first2, slack2);
        }
        _ => {
            assignment = disjoint_assignment(&facets[..t - 1]);
            let target = weight(&facets[0], &assignment);
            let last = &facets[t - 1];
            let d = last.len() as u64;
            let c = smallest_scale(d, target);
            scale_assignment(&mut assignment, c);
            for v in last.members() {
                assignment.insert(v, 2);
            }
            let slack = last.members().last().expect("nonempty facet");
            assignment.insert(slack, c * target - d + 2);
        }
    }
    assignment
}

/// Induction along leaves. Base: two facets share S, the slack pair sits on
/// the first private vertex of F_1 and the last of F_2. Step: remove the
/// first leaf, level the rest, then scale until the leaf's private zone Z
/// (nonempty for a leaf) plus one slack exponent e ≥ 2 can match. The gap
/// between the witness weight and the shared part is positive because S is
/// a proper subset of the witness, so a large enough scale always exists.
fn forest_assignment(facets: &[Facet]) -> BTreeMap<usize, u64> {
    let t = facets.len();
    let mut assignment: BTreeMap<usize, u64> = BTreeMap::new();
    match t {
        1 => {
            for v in facets[0].members() {
                assignment.insert(v, 2);
            }
        }
        2 => {
            let d1 = facets[0].len() as i64;
            let d2 = facets[1].len() as i64;
            for v in facets[0].members().chain(facets[1].members()) {
                assignment.insert(v, 2);
            }
            let shared = facets[0].intersection(&facets[1]);
            let e = d2 - d1;
            let slack2 = (2i64).max(2 - e) as u64;
            let slack1 = (e + slack2 as i64) as u64;
            let first1 = facets[0]
                .members()
                .find(|v| !shared.contains(v))
                .expect("facets are incomparable");
            let last2 = facets[1]
                .members()
                .filter(|v| !shared.contains(v))
                .last()
                .expect("facets are incomparable");
            assignment.insert(first1, slack1);
            assignment.insert(last2, slack2);
        }
        _ => {
            let all: Vec<usize> = (0..t).collect();
            let leaf_idx = (0..t)
                .find(|&i| find_witness(facets, &all, i).is_some())
                .expect("a forest has a leaf");
            let leaf = &facets[leaf_idx];
            let rest: Vec<Facet> = facets
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != leaf_idx)
                .map(|(_, f)| f.clone())
                .collect();
            assignment = forest_assignment(&rest);
            let covered: BTreeSet<usize> =
                rest.iter().flat_map(|f| f.members()).collect();
            let zone: Vec<usize> = leaf
                .members()
                .filter(|v| !covered.contains(v))
                .collect();
            debug_assert!(!zone.is_empty(), "a leaf keeps a private vertex");
            let target = weight(&rest[0], &assignment);
            let shared_weight: u64 = leaf
                .members()
                .filter(|v| covered.contains(v))
                .map(|v| assignment[&v] - 1)
                .sum();
            let gap = target - shared_weight;
            debug_assert!(gap > 0, "witness weight exceeds the shared part");
            let zlen = zone.len() as u64;
            let c = smallest_scale(zlen, gap);
            scale_assignment(&mut assignment, c);
            for &v in &zone {
                assignment.insert(v, 2);
            }
            let slack = *zone.last().expect("nonempty zone");
            assignment.insert(slack, c * gap - zlen + 2);
        }
    }
    assignment
}

/// Facets of the n-vertex complex that no exponent tuple levels, in the
/// order they are usually written (0-based indices).
pub fn nonlevelable_family_facets(n: usize) -> Result<Vec<Vec<usize>>> {
    if n < 5 {
        return Err(Error::FamilyTooSmall(n));
    }
    let facets = if n % 2 == 1 {
        vec![
            (0..n).step_by(2).collect(),
            (1..n - 1).step_by(2).collect(),
            std::iter::once(0).chain((3..n - 1).step_by(2)).collect(),
            std::iter::once(1).chain((4..n).step_by(2)).collect(),
        ]
    } else {
        vec![
            [0, 2].into_iter().chain(4..n).collect(),
            std::iter::once(1).chain(4..n).collect(),
            vec![0, 3],
            vec![1, 3],
        ]
    };
    Ok(facets)
}

pub fn nonlevelable_family(n: usize) -> Result<SimplicialComplex> {
    let facets = nonlevelable_family_facets(n)?;
    SimplicialComplex::new_from_faces(
        VertexSet::numbered(n)?,
        facets.into_iter().map(|f| f.into_iter().collect()).collect(),
    )
}
