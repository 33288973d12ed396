//! Monomial ideal combinatorics against independent oracles: exhaustive
//! vertex-cover enumeration for minimal primes, divisibility for
//! intersections, and the face-ideal round trip.

mod common;

use std::collections::BTreeSet;

use rand::Rng;

use radgen::complex::SimplicialComplex;
use radgen::construct::{stci_complex, ChainInput};
use radgen::ideals::MonomialIdeal;
use radgen::poly::Polynomial;
use radgen::ring::{Monomial, VarSet};

fn ideal(ring: &VarSet, gens: &[&str]) -> MonomialIdeal {
    let polys: Vec<Polynomial> = gens
        .iter()
        .map(|t| Polynomial::parse(t, ring).unwrap())
        .collect();
    MonomialIdeal::from_polys(ring, &polys).unwrap()
}

/// Exhaustive minimal vertex covers over at most 16 vertices: every subset
/// is tested for covering, then the inclusion-minimal ones are kept.
fn brute_force_covers(supports: &[BTreeSet<usize>], nvars: usize) -> Vec<Vec<usize>> {
    assert!(nvars <= 16);
    let mut covers: Vec<u32> = Vec::new();
    for mask in 0u32..(1 << nvars) {
        let covered = supports
            .iter()
            .all(|s| s.iter().any(|&v| mask & (1 << v) != 0));
        if covered {
            covers.push(mask);
        }
    }
    let minimal: Vec<u32> = covers
        .iter()
        .copied()
        .filter(|&m| !covers.iter().any(|&o| o != m && o & m == o))
        .collect();
    let mut out: Vec<Vec<usize>> = minimal
        .into_iter()
        .map(|m| (0..nvars).filter(|v| m & (1 << v) != 0).collect())
        .collect();
    out.sort();
    out
}

#[test]
fn minimal_primes_match_exhaustive_cover_enumeration() {
    let mut rng = common::rng(501);
    for _ in 0..150 {
        let ring = common::named_ring("v", rng.random_range(2..=7));
        let ideal = common::random_squarefree_ideal(&mut rng, &ring, 4);
        let primes = ideal.minimal_primes().unwrap();
        let supports: Vec<BTreeSet<usize>> = ideal
            .gens()
            .iter()
            .map(|g| g.support().collect())
            .collect();
        let expected = brute_force_covers(&supports, ring.len());
        assert_eq!(primes.primes(), &expected[..]);
        assert_eq!(primes.recombine(), ideal);
    }
}

#[test]
fn intersection_agrees_with_divisibility() {
    let mut rng = common::rng(321);
    for _ in 0..100 {
        let ring = common::named_ring("v", rng.random_range(2..=5));
        let a = common::random_squarefree_ideal(&mut rng, &ring, 3);
        let b = common::random_squarefree_ideal(&mut rng, &ring, 3);
        let meet = a.intersect(&b).unwrap();
        for _ in 0..10 {
            let m = common::random_monomial(&mut rng, &ring, 2);
            assert_eq!(
                meet.contains_monomial(&m),
                a.contains_monomial(&m) && b.contains_monomial(&m)
            );
        }
    }
}

#[test]
fn radical_is_idempotent_on_random_inputs() {
    let mut rng = common::rng(17);
    for _ in 0..50 {
        let ring = common::named_ring("v", rng.random_range(2..=5));
        let gens: Vec<Monomial> = (0..rng.random_range(1..=4))
            .map(|_| common::random_monomial(&mut rng, &ring, 3))
            .collect();
        let ideal = MonomialIdeal::new(&ring, gens);
        let rad = ideal.radical();
        assert!(rad.is_squarefree());
        assert_eq!(rad.radical(), rad);
    }
}

#[test]
fn face_ideal_round_trip_on_random_squarefree_ideals() {
    let mut rng = common::rng(88);
    for _ in 0..60 {
        let ring = common::named_ring("v", rng.random_range(2..=6));
        let ideal = common::random_squarefree_ideal(&mut rng, &ring, 4);
        if ideal.is_unit() {
            continue;
        }
        let complex = SimplicialComplex::from_ideal(&ideal).unwrap();
        assert_eq!(complex.face_ideal(), ideal);
    }
}

#[test]
fn six_component_intersection_in_seven_variables() {
    let ring = common::named_ring("x", 7);
    let components: Vec<MonomialIdeal> = [
        ["x1", "x3", "x5"],
        ["x2", "x4", "x5"],
        ["x1", "x4", "x5"],
        ["x2", "x3", "x5"],
        ["x1", "x3", "x6"],
        ["x2", "x5", "x7"],
    ]
    .iter()
    .map(|names| ideal(&ring, names))
    .collect();
    let meet = components
        .iter()
        .skip(1)
        .fold(components[0].clone(), |acc, i| acc.intersect(i).unwrap());
    let expected = ideal(
        &ring,
        &["x1*x2", "x1*x5", "x3*x5", "x5*x6", "x3*x4*x7", "x2*x3*x4"],
    );
    assert_eq!(meet, expected);

    let primes = meet.minimal_primes().unwrap();
    assert_eq!(primes.len(), 6);
    let height = meet.height().unwrap();
    assert_eq!(height.height, 3);
    assert!(height.pure);
}

#[test]
fn triple_intersection_has_fifteen_minimal_generators() {
    let ring = common::named_ring("x", 10);
    let meet = ideal(&ring, &["x1*x4", "x2*x5", "x3*x6"])
        .intersect(&ideal(&ring, &["x1", "x7", "x8"]))
        .unwrap()
        .intersect(&ideal(&ring, &["x2", "x9", "x10"]))
        .unwrap();
    assert_eq!(meet.num_gens(), 15);
}

#[test]
fn full_flag_primes_for_t_two() {
    let input = ChainInput::new(2, 2, vec![1, 2]).unwrap();
    let meet = input.intersection();
    let primes = meet.minimal_primes().unwrap();
    // Independent oracle: exhaustive cover enumeration on four vertices.
    let supports: Vec<BTreeSet<usize>> =
        meet.gens().iter().map(|g| g.support().collect()).collect();
    assert_eq!(primes.primes(), &brute_force_covers(&supports, 4)[..]);
    let names = primes.name_lists();
    assert_eq!(
        names,
        vec![
            vec!["x1".to_string(), "x2".to_string()],
            vec!["x2".to_string(), "y1".to_string()],
            vec!["y1".to_string(), "y2".to_string()],
        ]
    );
}

#[test]
fn flag_complexes_are_shellable_in_the_natural_order() {
    for t in 2..=5 {
        let complex = stci_complex(t).unwrap();
        assert!(complex.is_pure());
        let order: Vec<usize> = (0..=t).collect();
        assert!(complex.check_shelling(&order).unwrap(), "t = {}", t);
        // The face ideal coincides with the chain intersection.
        let input = ChainInput::new(t, t, (1..=t).collect()).unwrap();
        assert_eq!(complex.face_ideal(), input.intersection());
    }
}
