use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;

use crate::complex::Facet;
use crate::error::{Error, Result};

/// Monomial in a fixed number of variables, written multiplicatively over
/// `x1..xn`, or over the dual variables `y1..yn` when it lives in the inverse
/// system. The dual flag only changes how it prints and compares; arithmetic
/// treats both sides the same way.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exponents: Vec<u64>,
    dual: bool,
}

impl Monomial {
    pub fn new(exponents: Vec<u64>) -> Self {
        Monomial {
            exponents,
            dual: false,
        }
    }

    pub fn new_dual(exponents: Vec<u64>) -> Self {
        Monomial {
            exponents,
            dual: true,
        }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial::new(vec![0; nvars])
    }

    /// The squarefree monomial with the given support.
    pub fn squarefree(support: &BTreeSet<usize>, nvars: usize) -> Self {
        let mut exponents = vec![0; nvars];
        for &v in support {
            exponents[v] = 1;
        }
        Monomial::new(exponents)
    }

    pub fn pure_power(var: usize, exponent: u64, nvars: usize) -> Self {
        let mut exponents = vec![0; nvars];
        exponents[var] = exponent;
        Monomial::new(exponents)
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn exponent(&self, var: usize) -> u64 {
        self.exponents[var]
    }

    pub fn num_vars(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_dual(&self) -> bool {
        self.dual
    }

    pub fn degree(&self) -> u64 {
        self.exponents.iter().sum()
    }

    pub fn support(&self) -> BTreeSet<usize> {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exponents.len() == other.exponents.len()
            && self
                .exponents
                .iter()
                .zip(&other.exponents)
                .all(|(a, b)| a <= b)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        let var = if self.dual { 'y' } else { 'x' };
        let parts = self
            .exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    format!("{var}{}", i + 1)
                } else {
                    format!("{var}{}^{e}", i + 1)
                }
            })
            .join("*");
        write!(f, "{parts}")
    }
}

/// Exponent tuple (a_1, ..., a_n) with every entry at least 2, the shape the
/// artinian reduction and the level criterion both require.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentTuple {
    values: Vec<u64>,
}

impl ExponentTuple {
    pub fn new(values: Vec<u64>) -> Result<Self> {
        for (index, &value) in values.iter().enumerate() {
            if value < 2 {
                return Err(Error::BadExponent {
                    index,
                    value,
                    min: 2,
                });
            }
        }
        Ok(ExponentTuple { values })
    }

    pub fn uniform(nvars: usize, value: u64) -> Result<Self> {
        ExponentTuple::new(vec![value; nvars])
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The shifted entries b_i = a_i - 1 that weight the facets.
    pub fn shifted(&self) -> Vec<u64> {
        self.values.iter().map(|&a| a - 1).collect()
    }

    /// Replaces each a_i by c(a_i - 1) + 1. Scaling preserves which facets
    /// share a weight, so it maps level tuples to level tuples.
    pub fn scaled(&self, factor: u64) -> ExponentTuple {
        assert!(factor >= 1, "scale factor must be positive");
        ExponentTuple {
            values: self.values.iter().map(|&a| factor * (a - 1) + 1).collect(),
        }
    }

    /// Weight of a facet: the sum of a_i - 1 over its vertices. This is the
    /// degree of the inverse system generator the facet contributes.
    pub fn facet_weight(&self, facet: &Facet) -> u64 {
        facet.members().map(|v| self.values[v] - 1).sum()
    }
}

/// Monomial ideal given by generators; construction minimalizes, so the
/// stored generators are exactly the minimal ones, listed in descending
/// exponent order (x1-first, the order a person would write them in).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    nvars: usize,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(nvars: usize, generators: Vec<Monomial>) -> Self {
        let mut minimal: Vec<Monomial> = Vec::new();
        for g in generators {
            assert_eq!(g.num_vars(), nvars, "generator arity mismatch");
            if g.degree() == 0 {
                // The unit ideal: one generator says it all.
                return MonomialIdeal {
                    nvars,
                    generators: vec![g],
                };
            }
            if minimal.iter().any(|m| m.divides(&g)) {
                continue;
            }
            minimal.retain(|m| !g.divides(m));
            minimal.push(g);
        }
        minimal.sort_by(|a, b| b.exponents.cmp(&a.exponents));
        MonomialIdeal {
            nvars,
            generators: minimal,
        }
    }

    pub fn num_vars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn contains(&self, monomial: &Monomial) -> bool {
        assert_eq!(monomial.num_vars(), self.nvars, "arity mismatch");
        self.generators.iter().any(|g| g.divides(monomial))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_forms() {
        assert_eq!(Monomial::one(3).to_string(), "1");
        assert_eq!(Monomial::new(vec![1, 0, 2]).to_string(), "x1*x3^2");
        assert_eq!(Monomial::new_dual(vec![0, 3, 0]).to_string(), "y2^3");
    }

    #[test]
    fn divisibility() {
        let m = Monomial::new(vec![1, 2, 0]);
        assert!(Monomial::new(vec![1, 0, 0]).divides(&m));
        assert!(Monomial::one(3).divides(&m));
        assert!(!Monomial::new(vec![0, 3, 0]).divides(&m));
        assert!(!Monomial::new(vec![0, 0, 1]).divides(&m));
    }

    #[test]
    fn exponent_tuple_floor() {
        assert!(ExponentTuple::new(vec![2, 3, 4]).is_ok());
        assert_eq!(
            ExponentTuple::new(vec![2, 1, 4]).unwrap_err(),
            Error::BadExponent {
                index: 1,
                value: 1,
                min: 2
            }
        );
    }

    #[test]
    fn scaling_shifts_and_stretches() {
        let a = ExponentTuple::new(vec![3, 2, 5]).unwrap();
        assert_eq!(a.scaled(1), a);
        assert_eq!(a.scaled(3).values(), &[7, 4, 13]);
    }

    #[test]
    fn facet_weight_sums_shifted_entries() {
        let a = ExponentTuple::new(vec![3, 2, 5, 2]).unwrap();
        let f = Facet::new([0, 2]).unwrap();
        assert_eq!(a.facet_weight(&f), 2 + 4);
    }

    #[test]
    fn ideal_minimalizes_generators() {
        let ideal = MonomialIdeal::new(
            2,
            vec![
                Monomial::new(vec![1, 1]),
                Monomial::new(vec![2, 1]),
                Monomial::new(vec![0, 3]),
            ],
        );
        assert_eq!(
            ideal.generators(),
            &[Monomial::new(vec![1, 1]), Monomial::new(vec![0, 3])]
        );
        assert!(ideal.contains(&Monomial::new(vec![3, 1])));
        assert!(!ideal.contains(&Monomial::new(vec![3, 0])));
    }

    #[test]
    fn unit_ideal_contains_everything() {
        let ideal = MonomialIdeal::new(2, vec![Monomial::one(2), Monomial::new(vec![1, 1])]);
        assert_eq!(ideal.generators().len(), 1);
        assert!(ideal.contains(&Monomial::one(2)));
    }
}
