//! Combinatorics of squarefree monomial ideals: minimal generators,
//! intersections, radicals, minimal primes and height.
//!
//! Minimal primes of a squarefree monomial ideal correspond to the minimal
//! vertex covers of the hypergraph of generator supports; everything here is
//! exact combinatorics, no Groebner machinery involved.

use std::collections::BTreeSet;
use std::fmt;

use crate::poly::Polynomial;
use crate::ring::{Monomial, VarSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealError {
    RingMismatch,
    NotSquarefree,
    /// A generator given as a polynomial had several terms.
    NotMonomial { text: String },
    ZeroIdeal,
    UnitIdeal,
}

impl fmt::Display for IdealError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealError::RingMismatch => write!(f, "ideals come from different rings"),
            IdealError::NotSquarefree => write!(f, "ideal is not squarefree"),
            IdealError::NotMonomial { text } => {
                write!(f, "generator `{}` is not a monomial", text)
            }
            IdealError::ZeroIdeal => write!(f, "operation undefined for the zero ideal"),
            IdealError::UnitIdeal => write!(f, "operation undefined for the whole ring"),
        }
    }
}

impl std::error::Error for IdealError {}

/// A monomial ideal stored by its unique minimal generating set, sorted
/// descending lexicographically on exponent vectors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialIdeal {
    ring: VarSet,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalizes an arbitrary generator set: duplicates and generators
    /// divisible by another generator are dropped.
    pub fn new(ring: &VarSet, gens: Vec<Monomial>) -> MonomialIdeal {
        for g in &gens {
            assert_eq!(g.nvars(), ring.len(), "monomial arity mismatch");
        }
        let mut minimal: Vec<Monomial> = Vec::new();
        for g in &gens {
            // h != g and h | g is strict divisibility (mutual divisibility
            // would force equality).
            if gens.iter().any(|h| h != g && h.divides(g)) {
                continue;
            }
            if !minimal.contains(g) {
                minimal.push(g.clone());
            }
        }
        minimal.sort_by(|a, b| b.exps().cmp(a.exps()));
        MonomialIdeal { ring: ring.clone(), gens: minimal }
    }

    pub fn zero(ring: &VarSet) -> MonomialIdeal {
        MonomialIdeal { ring: ring.clone(), gens: Vec::new() }
    }

    /// Accepts single-term polynomials as generators (coefficients ignored).
    pub fn from_polys(ring: &VarSet, gens: &[Polynomial]) -> Result<MonomialIdeal, IdealError> {
        let mut mons = Vec::with_capacity(gens.len());
        for g in gens {
            if g.ring() != ring {
                return Err(IdealError::RingMismatch);
            }
            if g.is_zero() {
                continue;
            }
            match g.as_single_term() {
                Some((_, m)) => mons.push(m.clone()),
                None => return Err(IdealError::NotMonomial { text: g.to_string() }),
            }
        }
        Ok(MonomialIdeal::new(ring, mons))
    }

    pub fn ring(&self) -> &VarSet {
        &self.ring
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_unit())
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.is_squarefree())
    }

    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Polynomial membership in a monomial ideal is term-by-term
    /// divisibility.
    pub fn contains_poly(&self, f: &Polynomial) -> bool {
        f.terms().iter().all(|(_, m)| self.contains_monomial(m))
    }

    /// Membership-equivalent intersection: pairwise lcms, minimalized.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal, IdealError> {
        if self.ring != other.ring {
            return Err(IdealError::RingMismatch);
        }
        let mut lcms = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                lcms.push(a.lcm(b));
            }
        }
        Ok(MonomialIdeal::new(&self.ring, lcms))
    }

    /// The radical: squarefree parts of the generators, minimalized.
    pub fn radical(&self) -> MonomialIdeal {
        MonomialIdeal::new(
            &self.ring,
            self.gens.iter().map(|g| g.squarefree()).collect(),
        )
    }

    /// Minimal primes of a squarefree monomial ideal, i.e. the minimal
    /// vertex covers of the generator supports. The zero ideal has the zero
    /// prime (empty cover); the whole ring has none.
    pub fn minimal_primes(&self) -> Result<PrimeList, IdealError> {
        if !self.is_squarefree() {
            return Err(IdealError::NotSquarefree);
        }
        if self.is_unit() {
            return Ok(PrimeList { ring: self.ring.clone(), primes: Vec::new() });
        }
        let edges: Vec<Vec<usize>> = self
            .gens
            .iter()
            .map(|g| g.support().collect())
            .collect();
        let mut found: Vec<BTreeSet<usize>> = Vec::new();
        let mut current: BTreeSet<usize> = BTreeSet::new();
        branch_covers(&edges, &mut current, &mut found);
        // Branching can emit non-minimal covers; keep the inclusion-minimal
        // ones and dedupe.
        let mut minimal: Vec<BTreeSet<usize>> = Vec::new();
        for c in &found {
            if found.iter().any(|d| d != c && d.is_subset(c)) {
                continue;
            }
            if !minimal.contains(c) {
                minimal.push(c.clone());
            }
        }
        let mut primes: Vec<Vec<usize>> = minimal
            .into_iter()
            .map(|c| c.into_iter().collect())
            .collect();
        primes.sort();
        Ok(PrimeList { ring: self.ring.clone(), primes })
    }

    /// Height (minimal size of a minimal prime) plus a purity flag telling
    /// whether all minimal primes share that size.
    pub fn height(&self) -> Result<Height, IdealError> {
        if self.is_zero() {
            return Err(IdealError::ZeroIdeal);
        }
        if !self.is_squarefree() {
            return Err(IdealError::NotSquarefree);
        }
        let primes = self.minimal_primes()?;
        let sizes: Vec<usize> = primes.primes.iter().map(|p| p.len()).collect();
        match sizes.iter().min() {
            None => Err(IdealError::UnitIdeal),
            Some(&min) => Ok(Height {
                height: min,
                pure: sizes.iter().all(|&s| s == min),
            }),
        }
    }

    pub fn to_polys(&self) -> Vec<Polynomial> {
        self.gens
            .iter()
            .map(|m| Polynomial::from_monomial(&self.ring, m.clone()))
            .collect()
    }

    pub fn gen_strings(&self) -> Vec<String> {
        self.gens
            .iter()
            .map(|m| m.display(&self.ring).to_string())
            .collect()
    }
}

fn branch_covers(
    edges: &[Vec<usize>],
    current: &mut BTreeSet<usize>,
    found: &mut Vec<BTreeSet<usize>>,
) {
    match edges
        .iter()
        .find(|e| !e.iter().any(|v| current.contains(v)))
    {
        None => found.push(current.clone()),
        Some(edge) => {
            for &v in edge {
                current.insert(v);
                branch_covers(edges, current, found);
                current.remove(&v);
            }
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Height {
    pub height: usize,
    pub pure: bool,
}

/// Pairwise incomparable variable subsets, each a minimal prime of a
/// squarefree monomial ideal. Sorted ascending for reproducible output.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PrimeList {
    ring: VarSet,
    primes: Vec<Vec<usize>>,
}

impl PrimeList {
    pub fn ring(&self) -> &VarSet {
        &self.ring
    }

    pub fn primes(&self) -> &[Vec<usize>] {
        &self.primes
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn name_lists(&self) -> Vec<Vec<String>> {
        self.primes
            .iter()
            .map(|p| p.iter().map(|&v| self.ring.name(v).to_string()).collect())
            .collect()
    }

    /// Intersects the variable ideals of all primes; recovers the original
    /// squarefree ideal.
    pub fn recombine(&self) -> MonomialIdeal {
        let n = self.ring.len();
        let mut acc: Option<MonomialIdeal> = None;
        for p in &self.primes {
            let gens = p.iter().map(|&v| Monomial::var(v, n)).collect();
            let ideal = MonomialIdeal::new(&self.ring, gens);
            acc = Some(match acc {
                None => ideal,
                Some(a) => a.intersect(&ideal).expect("same ring"),
            });
        }
        // Only the unit ideal has an empty prime list; callers recombine
        // proper ideals.
        acc.unwrap_or_else(|| MonomialIdeal::zero(&self.ring))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(names: &[&str]) -> VarSet {
        VarSet::new(names.iter().copied()).unwrap()
    }

    fn ideal(ring: &VarSet, gens: &[&str]) -> MonomialIdeal {
        let polys: Vec<Polynomial> = gens
            .iter()
            .map(|t| Polynomial::parse(t, ring).unwrap())
            .collect();
        MonomialIdeal::from_polys(ring, &polys).unwrap()
    }

    #[test]
    fn minimalize_drops_multiples() {
        let r = ring(&["x", "y"]);
        let i = ideal(&r, &["x", "x*y"]);
        assert_eq!(i.gen_strings(), vec!["x"]);
        let i = ideal(&r, &["x^2*y", "x*y"]);
        assert_eq!(i.gen_strings(), vec!["x*y"]);
    }

    #[test]
    fn intersection_matches_divisibility() {
        let r = ring(&["x1", "x2", "x3", "x4", "x5", "x6"]);
        let i1 = ideal(&r, &["x1", "x5", "x6"]);
        let i2 = ideal(&r, &["x4", "x5", "x6"]);
        let meet = i1.intersect(&i2).unwrap();
        assert_eq!(meet.gen_strings(), vec!["x1*x4", "x5", "x6"]);
        let i = ideal(&r, &["x1*x4", "x2"]);
        assert_eq!(i.intersect(&i).unwrap(), i);
    }

    #[test]
    fn radical_takes_squarefree_parts() {
        let r = ring(&["x", "y"]);
        let i = ideal(&r, &["x^2*y"]);
        assert_eq!(i.radical().gen_strings(), vec!["x*y"]);
        assert_eq!(i.radical().radical(), i.radical());
        let sf = ideal(&r, &["x*y"]);
        assert_eq!(sf.radical(), sf);
    }

    #[test]
    fn principal_squarefree_primes() {
        let r = ring(&["x1", "x2"]);
        let i = ideal(&r, &["x1*x2"]);
        let primes = i.minimal_primes().unwrap();
        assert_eq!(primes.name_lists(), vec![vec!["x1"], vec!["x2"]]);
        assert_eq!(primes.recombine(), i);
    }

    #[test]
    fn non_squarefree_primes_rejected() {
        let r = ring(&["x", "y"]);
        let i = ideal(&r, &["x^2"]);
        assert_eq!(i.minimal_primes(), Err(IdealError::NotSquarefree));
    }

    #[test]
    fn height_of_linear_prime() {
        let r = ring(&["x1", "x2", "x3", "x4"]);
        let i = ideal(&r, &["x1", "x2", "x3", "x4"]);
        assert_eq!(i.height().unwrap(), Height { height: 4, pure: true });
        assert!(MonomialIdeal::zero(&r).height().is_err());
    }
}
