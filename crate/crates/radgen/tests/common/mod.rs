//! Deterministic instance generators shared by the integration suites.
#![allow(dead_code)]

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use radgen::construct::TheoremInput;
use radgen::ideals::MonomialIdeal;
use radgen::poly::Polynomial;
use radgen::ring::{Monomial, VarSet};
use radgen::svlemma::PartitionSystem;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn named_ring(prefix: &str, n: usize) -> VarSet {
    VarSet::new((1..=n).map(|i| format!("{}{}", prefix, i))).expect("fresh names")
}

/// A nonzero monomial with one or two variables in its support and small
/// exponents.
pub fn random_monomial(rng: &mut ChaCha8Rng, ring: &VarSet, max_exp: u32) -> Monomial {
    let n = ring.len();
    let support = rng.random_range(1..=2.min(n));
    let mut exps = vec![0u32; n];
    for _ in 0..support {
        let v = rng.random_range(0..n);
        exps[v] = rng.random_range(1..=max_exp);
    }
    Monomial::from_exps(exps)
}

pub fn random_monomial_poly(rng: &mut ChaCha8Rng, ring: &VarSet, max_exp: u32) -> Polynomial {
    Polynomial::from_monomial(ring, random_monomial(rng, ring, max_exp))
}

/// A random squarefree monomial ideal with a few generators, none of them
/// the unit.
pub fn random_squarefree_ideal(rng: &mut ChaCha8Rng, ring: &VarSet, max_gens: usize) -> MonomialIdeal {
    let count = rng.random_range(1..=max_gens);
    let gens = (0..count)
        .map(|_| random_monomial(rng, ring, 1))
        .collect();
    MonomialIdeal::new(ring, gens)
}

/// A random monomial theorem instance with the nested-containment
/// hypothesis enforced by construction: every constrained mu is a multiple
/// of an earlier nu.
pub fn random_theorem_instance(rng: &mut ChaCha8Rng) -> TheoremInput {
    let nvars = rng.random_range(2..=6);
    let ring = named_ring("v", nvars);
    let u = rng.random_range(1..=4usize);
    let v = rng.random_range(1..=4usize);
    let s = rng.random_range(0..=(u - 1).min(v));
    let nu: Vec<Polynomial> = (0..v).map(|_| random_monomial_poly(rng, &ring, 2)).collect();
    let mu: Vec<Polynomial> = (0..u)
        .map(|i| {
            if i < s {
                let j = rng.random_range(0..=i);
                nu[j].mul(&random_monomial_poly(rng, &ring, 2))
            } else {
                random_monomial_poly(rng, &ring, 2)
            }
        })
        .collect();
    TheoremInput::new(&ring, mu, nu, s)
}

/// The summand sets of built generators, read off the provenance: the
/// antidiagonal products plus the carried mu. Returns None when two
/// summands of one generator coincide as polynomials (the set would merge
/// them and the exact-reproduction bridge does not apply).
pub fn summand_partition(
    input: &TheoremInput,
    built: &radgen::construct::GammaResult,
) -> Option<PartitionSystem> {
    let mut parts: Vec<Vec<Polynomial>> = Vec::with_capacity(built.r());
    for prov in &built.provenance {
        let mut part: Vec<Polynomial> = Vec::new();
        for &(h, k) in &prov.products {
            part.push(input.mu[h - 1].mul(&input.nu[k - 1]));
        }
        if let Some(mi) = prov.carried_mu {
            part.push(input.mu[mi - 1].clone());
        }
        for (i, p) in part.iter().enumerate() {
            if part[..i].contains(p) {
                return None;
            }
        }
        parts.push(part);
    }
    Some(PartitionSystem::new(&input.ring, parts).expect("nonempty parts"))
}

/// A random partition system that is valid by construction: within each
/// later part, at most one element is fresh and every other one is a
/// multiple of an element of an earlier part, so every pair product lies in
/// the ideal of the earlier parts. Exponents are drawn from {1, 2}.
pub fn random_partition_system(rng: &mut ChaCha8Rng) -> PartitionSystem {
    let nvars = rng.random_range(3..=6);
    let ring = named_ring("v", nvars);
    let parts_count = rng.random_range(1..=4usize);
    let mut parts: Vec<Vec<(Polynomial, u32)>> = Vec::with_capacity(parts_count);
    let mut earlier: Vec<Polynomial> = Vec::new();

    let first = random_monomial_poly(rng, &ring, 2);
    earlier.push(first.clone());
    parts.push(vec![(first, rng.random_range(1..=2))]);

    for _ in 1..parts_count {
        let size = rng.random_range(1..=3usize);
        let fresh_slot = rng.random_range(0..size);
        let mut part: Vec<(Polynomial, u32)> = Vec::with_capacity(size);
        for k in 0..size {
            // Retry until the element is distinct within its part.
            let element = loop {
                let candidate = if k == fresh_slot {
                    random_monomial_poly(rng, &ring, 2)
                } else {
                    let base = &earlier[rng.random_range(0..earlier.len())];
                    base.mul(&random_monomial_poly(rng, &ring, 2))
                };
                if !part.iter().any(|(p, _)| *p == candidate) {
                    break candidate;
                }
            };
            part.push((element, rng.random_range(1..=2)));
        }
        earlier.extend(part.iter().map(|(p, _)| p.clone()));
        parts.push(part);
    }
    PartitionSystem::with_exponents(&ring, parts).expect("structurally valid by construction")
}
