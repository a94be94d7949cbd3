//! The artinian monomial algebra A(Δ, a) = R/(I_Δ, x1^a1, ..., xn^an) and
//! its numerical data: h-vector, socle-vector, inverse system generators,
//! Cohen-Macaulay type, and the shifts of the last module in the minimal
//! free resolution.
//!
//! The socle-vector comes from the inverse system: each facet F contributes
//! the generator ∏_{i∈F} y_i^{a_i - 1}, so s_j counts facets of weight
//! Σ_{i∈F}(a_i - 1) = j. `socle_bruteforce` recomputes the socle straight
//! from its definition and exists to keep that theorem honest.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::Zero;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::monomial::{ExponentTuple, Monomial, MonomialIdeal};

/// Hard ceiling on box points the definitional socle oracle will enumerate.
pub const SOCLE_BOX_CAP: u64 = 1_000_000;

fn check_arity(c: &SimplicialComplex, len: usize) -> Result<()> {
    if len != c.vertex_count() {
        return Err(Error::WrongArity {
            expected: c.vertex_count(),
            got: len,
        });
    }
    Ok(())
}

/// Squarefree ideal of the minimal non-faces, found by ascending over subset
/// sizes; supersets of found generators are pruned, so each survivor has all
/// proper subsets faces.
pub fn stanley_reisner_ideal(c: &SimplicialComplex) -> MonomialIdeal {
    let n = c.vertex_count();
    let mut found: Vec<BTreeSet<usize>> = Vec::new();
    for size in 2..=n {
        for subset in (0..n).combinations(size) {
            let w: BTreeSet<usize> = subset.into_iter().collect();
            if found.iter().any(|g| g.is_subset(&w)) {
                continue;
            }
            if !c.is_face(&w) {
                found.push(w);
            }
        }
    }
    MonomialIdeal::new(
        n,
        found
            .iter()
            .map(|w| Monomial::squarefree(w, n))
            .collect(),
    )
}

/// Generators of (I_Δ, x1^a1, ..., xn^an). The pure powers never collide
/// with the squarefree generators when every a_i ≥ 2, so the union is
/// already minimal.
pub fn artinian_ideal(c: &SimplicialComplex, a: &ExponentTuple) -> Result<MonomialIdeal> {
    check_arity(c, a.len())?;
    let n = c.vertex_count();
    let mut generators = stanley_reisner_ideal(c).generators().to_vec();
    for (i, &ai) in a.values().iter().enumerate() {
        generators.push(Monomial::pure_power(i, ai, n));
    }
    Ok(MonomialIdeal::new(n, generators))
}

/// Strips every vertex with a_i = 1. Setting a_i = 1 kills x_i outright, and
/// the quotient is the same algebra built on the complex without that
/// vertex, so this loops until all remaining exponents are at least 2.
pub fn normalize(c: &SimplicialComplex, a: &[u64]) -> Result<(SimplicialComplex, ExponentTuple)> {
    check_arity(c, a.len())?;
    if let Some(index) = a.iter().position(|&ai| ai == 0) {
        return Err(Error::BadExponent {
            index,
            value: 0,
            min: 1,
        });
    }
    let mut complex = c.clone();
    let mut a: Vec<u64> = a.to_vec();
    while let Some(i) = a.iter().position(|&ai| ai == 1) {
        if a.len() == 1 {
            return Err(Error::CollapsedToEmpty);
        }
        let keep: BTreeSet<usize> = (0..a.len()).filter(|&v| v != i).collect();
        complex = complex.restrict(&keep)?;
        a.remove(i);
    }
    Ok((complex, ExponentTuple::new(a)?))
}

/// Graded vector-space dimensions of the algebra, h_0 = 1 first, trailing
/// zeros trimmed (the top entry is positive anyway).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HVector {
    values: Vec<BigUint>,
}

impl HVector {
    pub fn values(&self) -> &[BigUint] {
        &self.values
    }

    pub fn top_degree(&self) -> usize {
        self.values.len() - 1
    }

    pub fn total(&self) -> BigUint {
        self.values.iter().sum()
    }
}

/// h-vector by the face-product formula: the monomials outside the ideal
/// are exactly those supported on a face with every exponent below a_i, so
/// h(t) = Σ_{F face} ∏_{i∈F} (t + t² + ... + t^{a_i - 1}).
pub fn hilbert_vector(c: &SimplicialComplex, a: &ExponentTuple) -> Result<HVector> {
    check_arity(c, a.len())?;
    let mut total: Vec<BigUint> = vec![BigUint::zero()];
    for face in c.faces() {
        let mut poly: Vec<BigUint> = vec![BigUint::from(1u32)];
        for v in face {
            let block_len = a.values()[v] as usize; // degrees 1..a_i-1
            let mut next = vec![BigUint::zero(); poly.len() + block_len - 1];
            for (d, coeff) in poly.iter().enumerate() {
                for e in 1..block_len {
                    next[d + e] += coeff;
                }
            }
            poly = next;
        }
        if total.len() < poly.len() {
            total.resize(poly.len(), BigUint::zero());
        }
        for (d, coeff) in poly.into_iter().enumerate() {
            total[d] += coeff;
        }
    }
    while total.len() > 1 && total.last() == Some(&BigUint::zero()) {
        total.pop();
    }
    Ok(HVector { values: total })
}

/// Minimal generators of the inverse system: one dual monomial
/// ∏_{i∈F} y_i^{a_i - 1} per facet, in canonical facet order.
pub fn inverse_system_generators(
    c: &SimplicialComplex,
    a: &ExponentTuple,
) -> Result<Vec<Monomial>> {
    check_arity(c, a.len())?;
    let n = c.vertex_count();
    Ok(c.facets()
        .iter()
        .map(|f| {
            let mut exponents = vec![0; n];
            for v in f.members() {
                exponents[v] = a.values()[v] - 1;
            }
            Monomial::new_dual(exponents)
        })
        .collect())
}

/// Socle dimensions by degree. Entries sum to the facet count, the top
/// entry is positive, and s_0 = 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SocleVector {
    values: Vec<usize>,
}

impl SocleVector {
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn socle_degree(&self) -> usize {
        self.values.len() - 1
    }

    /// Cohen-Macaulay type: total socle dimension.
    pub fn cm_type(&self) -> usize {
        self.values.iter().sum()
    }

    /// Level means the socle lives entirely in the top degree.
    pub fn is_level(&self) -> bool {
        self.values[..self.values.len() - 1]
            .iter()
            .all(|&s| s == 0)
    }
}

/// Socle-vector as the histogram of facet weights Σ_{i∈F}(a_i - 1), padded
/// with s_0 = 0 up to the maximum weight.
pub fn socle_vector(c: &SimplicialComplex, a: &ExponentTuple) -> Result<SocleVector> {
    check_arity(c, a.len())?;
    let weights: Vec<u64> = c.facets().iter().map(|f| a.facet_weight(f)).collect();
    let top = *weights.iter().max().expect("at least one facet") as usize;
    let mut values = vec![0usize; top + 1];
    for w in weights {
        values[w as usize] += 1;
    }
    debug_assert_eq!(values[0], 0);
    Ok(SocleVector { values })
}

pub fn socle_bruteforce(c: &SimplicialComplex, a: &ExponentTuple) -> Result<Vec<Monomial>> {
    socle_bruteforce_with_cap(c, a, SOCLE_BOX_CAP)
}

/// The socle straight from its definition: enumerate every monomial in the
/// box ∏ [0, a_i - 1], keep those outside the ideal that every variable
/// multiplies into the ideal. Exact but exponential, hence the cap.
pub fn socle_bruteforce_with_cap(
    c: &SimplicialComplex,
    a: &ExponentTuple,
    cap: u64,
) -> Result<Vec<Monomial>> {
    check_arity(c, a.len())?;
    let size: u128 = a.values().iter().map(|&ai| ai as u128).product();
    if size > cap as u128 {
        return Err(Error::BoxTooLarge { size, cap });
    }
    let n = c.vertex_count();
    // The box bound keeps n small (2^n ≤ ∏ a_i), so a face table over all
    // supports fits comfortably.
    let facet_masks: Vec<u64> = c
        .facets()
        .iter()
        .map(|f| f.members().fold(0u64, |m, v| m | (1 << v)))
        .collect();
    let is_face = |mask: u64| facet_masks.iter().any(|&f| mask & !f == 0);

    let mut socle = Vec::new();
    let mut exponents = vec![0u64; n];
    loop {
        let mask = exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |m, (i, _)| m | (1 << i));
        if is_face(mask) {
            let annihilated = (0..n).all(|i| {
                exponents[i] + 1 >= a.values()[i] || !is_face(mask | (1 << i))
            });
            if annihilated {
                socle.push(Monomial::new(exponents.clone()));
            }
        }
        // Odometer step through the box.
        let mut i = 0;
        loop {
            if i == n {
                socle.sort_by(|x, y| y.exponents().cmp(x.exponents()));
                return Ok(socle);
            }
            exponents[i] += 1;
            if exponents[i] < a.values()[i] {
                break;
            }
            exponents[i] = 0;
            i += 1;
        }
    }
}

/// Cohen-Macaulay type of A(Δ, a): the facet count, whatever the exponents.
pub fn cm_type(c: &SimplicialComplex) -> usize {
    c.facet_count()
}

/// Gorenstein exactly when the complex has a unique facet.
pub fn is_gorenstein(c: &SimplicialComplex) -> bool {
    c.facet_count() == 1
}

/// Shift and multiplicity of one summand of the last free module in the
/// minimal free resolution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiShift {
    pub shift: usize,
    pub multiplicity: usize,
}

/// The last module of the minimal free resolution of R/(I(G), x²) written as
/// ⊕ R^{d_i}(-c_i), shifts strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTail {
    pairs: Vec<BettiShift>,
}

impl BettiTail {
    pub fn pairs(&self) -> &[BettiShift] {
        &self.pairs
    }

    pub fn total_multiplicity(&self) -> usize {
        self.pairs.iter().map(|p| p.multiplicity).sum()
    }
}

/// Reads the last Betti module of the edge-ideal quotient off the socle of
/// the independence complex with all exponents 2: a maximal independent set
/// of size j contributes to the summand shifted by j + n.
pub fn betti_tail(g: &Graph) -> BettiTail {
    let n = g.vertex_count();
    let complex = g.independence_complex();
    let a = ExponentTuple::uniform(n, 2).expect("2 ≥ 2");
    let socle = socle_vector(&complex, &a).expect("matching arity");
    let pairs = socle
        .values()
        .iter()
        .enumerate()
        .filter(|(_, &s)| s > 0)
        .map(|(j, &s)| BettiShift {
            shift: j + n,
            multiplicity: s,
        })
        .collect();
    BettiTail { pairs }
}
