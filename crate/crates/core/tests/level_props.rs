//! The decision procedure against exhaustive search, and the constructive
//! certificates against the verifier.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use levelable::{
    decide_levelable, level_tuple_disjoint, level_tuple_forest, level_tuple_pure,
    nonlevelable_family, verify_certificate, ExponentTuple, SimplicialComplex, Verdict, VertexSet,
};

/// Random complex without singleton facets, the shape the level system
/// accepts.
fn random_level_candidate(rng: &mut ChaCha8Rng, max_n: usize) -> SimplicialComplex {
    let n = rng.gen_range(2..=max_n);
    let t = rng.gen_range(1..=4);
    let mut faces: Vec<BTreeSet<usize>> = Vec::new();
    for _ in 0..t {
        let size = rng.gen_range(2..=n);
        let mut face = BTreeSet::new();
        while face.len() < size {
            face.insert(rng.gen_range(0..n));
        }
        faces.push(face);
    }
    let covered: BTreeSet<usize> = faces.iter().flatten().copied().collect();
    for v in 0..n {
        if !covered.contains(&v) {
            let mut pair = BTreeSet::from([v]);
            while pair.len() < 2 {
                pair.insert(rng.gen_range(0..n));
            }
            faces.push(pair);
        }
    }
    SimplicialComplex::new_from_faces(VertexSet::numbered(n).unwrap(), faces).unwrap()
}

/// First tuple in {2..=bound}^n giving every facet the same weight, if any.
fn exhaustive_level_tuple(c: &SimplicialComplex, bound: u64) -> Option<Vec<u64>> {
    let n = c.vertex_count();
    let mut values = vec![2u64; n];
    loop {
        let a = ExponentTuple::new(values.clone()).unwrap();
        let first = a.facet_weight(&c.facets()[0]);
        if c.facets().iter().all(|f| a.facet_weight(f) == first) {
            return Some(values);
        }
        let mut i = 0;
        loop {
            if i == n {
                return None;
            }
            values[i] += 1;
            if values[i] <= bound {
                break;
            }
            values[i] = 2;
            i += 1;
        }
    }
}

#[test]
fn solver_agrees_with_exhaustive_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xdec1de);
    let mut corpus: Vec<SimplicialComplex> = (0..150)
        .map(|_| random_level_candidate(&mut rng, 5))
        .collect();
    corpus.push(nonlevelable_family(5).unwrap());
    let mut levelable = 0usize;
    let mut not_levelable = 0usize;
    for c in &corpus {
        let decision = decide_levelable(c).unwrap();
        let found = exhaustive_level_tuple(c, 6);
        match decision.verdict {
            Verdict::NotLevelable => {
                not_levelable += 1;
                assert!(found.is_none(), "search beat the solver on {:?}", c.facets());
            }
            Verdict::Levelable | Verdict::TriviallyGorenstein => {
                levelable += 1;
                let a = decision.certificate.clone().expect("certificate");
                assert!(verify_certificate(c, &a).unwrap());
            }
        }
        if let Some(values) = found {
            assert_ne!(
                decision.verdict,
                Verdict::NotLevelable,
                "solver missed {values:?} on {:?}",
                c.facets()
            );
        }
    }
    // The corpus must exercise both outcomes for the test to mean anything.
    assert!(levelable > 20, "only {levelable} levelable cases");
    assert!(not_levelable >= 1, "no non-levelable cases");
}

#[test]
fn certificates_scale() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5ca1e);
    for _ in 0..80 {
        let c = random_level_candidate(&mut rng, 6);
        if c.has_singleton_facet() {
            continue;
        }
        let decision = decide_levelable(&c).unwrap();
        if let Some(a) = decision.certificate {
            for factor in 1..=5 {
                assert!(verify_certificate(&c, &a.scaled(factor)).unwrap());
            }
        }
    }
}

#[test]
fn pure_complexes_are_levelable_at_every_uniform_exponent() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x9b4e);
    for _ in 0..60 {
        let n = rng.gen_range(2..=7);
        let d = rng.gen_range(2..=n.min(4));
        let mut faces: Vec<BTreeSet<usize>> = Vec::new();
        for _ in 0..rng.gen_range(1..=4) {
            let mut face = BTreeSet::new();
            while face.len() < d {
                face.insert(rng.gen_range(0..n));
            }
            faces.push(face);
        }
        let covered: BTreeSet<usize> = faces.iter().flatten().copied().collect();
        for v in 0..n {
            if !covered.contains(&v) {
                let mut face = BTreeSet::from([v]);
                while face.len() < d {
                    face.insert(rng.gen_range(0..n));
                }
                faces.push(face);
            }
        }
        let c =
            SimplicialComplex::new_from_faces(VertexSet::numbered(n).unwrap(), faces).unwrap();
        assert!(c.is_pure());
        for exponent in 2..=4 {
            let a = level_tuple_pure(&c, exponent).unwrap();
            assert!(verify_certificate(&c, &a).unwrap());
        }
        let decision = decide_levelable(&c).unwrap();
        assert_ne!(decision.verdict, Verdict::NotLevelable);
        if decision.verdict == Verdict::Levelable {
            assert_eq!(
                decision.certificate.unwrap().values(),
                vec![2; n].as_slice()
            );
        }
    }
}

#[test]
fn disjoint_construction_verifies_and_matches_the_solver() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xd15101);
    for _ in 0..80 {
        let t = rng.gen_range(1..=4);
        let sizes: Vec<usize> = (0..t).map(|_| rng.gen_range(2..=4)).collect();
        let n: usize = sizes.iter().sum();
        let mut faces = Vec::new();
        let mut next = 0;
        for size in sizes {
            faces.push((next..next + size).collect::<BTreeSet<usize>>());
            next += size;
        }
        let c =
            SimplicialComplex::new_from_faces(VertexSet::numbered(n).unwrap(), faces).unwrap();
        let a = level_tuple_disjoint(&c).unwrap();
        assert!(verify_certificate(&c, &a).unwrap());
        let decision = decide_levelable(&c).unwrap();
        assert_ne!(decision.verdict, Verdict::NotLevelable);
    }
}

fn random_forest(rng: &mut ChaCha8Rng) -> SimplicialComplex {
    let t = rng.gen_range(1..=5);
    let mut facets: Vec<BTreeSet<usize>> = Vec::new();
    let mut next_vertex = 0usize;
    let first_size = rng.gen_range(2..=4);
    facets.push((0..first_size).collect());
    next_vertex += first_size;
    for _ in 1..t {
        let host = rng.gen_range(0..facets.len());
        let private: Vec<usize> = facets[host]
            .iter()
            .copied()
            .filter(|v| {
                facets
                    .iter()
                    .enumerate()
                    .all(|(j, f)| j == host || !f.contains(v))
            })
            .collect();
        let max_shared = private.len().min(facets[host].len() - 1);
        let shared = rng.gen_range(0..=max_shared);
        let min_fresh = if shared == 0 { 2 } else { 1 };
        let fresh = rng.gen_range(min_fresh..=3);
        let mut facet: BTreeSet<usize> = private[..shared].iter().copied().collect();
        facet.extend(next_vertex..next_vertex + fresh);
        next_vertex += fresh;
        facets.push(facet);
    }
    SimplicialComplex::new_from_faces(VertexSet::numbered(next_vertex).unwrap(), facets).unwrap()
}

#[test]
fn forest_construction_verifies_and_matches_the_solver() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xf04e57);
    for _ in 0..80 {
        let c = random_forest(&mut rng);
        let a = level_tuple_forest(&c).unwrap();
        assert!(
            verify_certificate(&c, &a).unwrap(),
            "facets {:?} tuple {:?}",
            c.facets(),
            a
        );
        let decision = decide_levelable(&c).unwrap();
        assert_ne!(decision.verdict, Verdict::NotLevelable);
    }
}

#[test]
fn families_are_never_levelable_and_name_the_obstruction() {
    for n in 5..=12 {
        let c = nonlevelable_family(n).unwrap();
        let decision = decide_levelable(&c).unwrap();
        assert_eq!(decision.verdict, Verdict::NotLevelable, "n = {n}");
        let report = decision.report.expect("report on NOT_LEVELABLE");
        assert!(
            report.forced_nonpositive().contains(&2),
            "n = {n}: expected the third variable to be forced out"
        );
        if n <= 8 {
            assert!(exhaustive_level_tuple(&c, 4).is_none(), "n = {n}");
        }
    }
}
