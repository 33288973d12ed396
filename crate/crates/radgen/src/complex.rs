//! Simplicial complexes given by their facets: face ideals and shelling
//! checks.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;

use crate::ideals::{IdealError, MonomialIdeal};
use crate::ring::{Monomial, VarSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComplexError {
    EmptyFacetList,
    VertexOutOfRange { facet: usize },
    FacetContained { inner: usize, outer: usize },
    NotPure,
    BadPermutation,
    Ideal(IdealError),
}

impl fmt::Display for ComplexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplexError::EmptyFacetList => write!(f, "facet list is empty"),
            ComplexError::VertexOutOfRange { facet } => {
                write!(f, "facet {} uses an undeclared vertex", facet)
            }
            ComplexError::FacetContained { inner, outer } => {
                write!(f, "facet {} is contained in facet {}", inner, outer)
            }
            ComplexError::NotPure => write!(f, "complex is not pure"),
            ComplexError::BadPermutation => write!(f, "order is not a facet permutation"),
            ComplexError::Ideal(e) => write!(f, "{}", e),
        }
    }
}

impl std::error::Error for ComplexError {}

/// A simplicial complex on the variables of a ring, stored by its ordered
/// facet list. No facet may contain another.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    ring: VarSet,
    facets: Vec<BTreeSet<usize>>,
}

impl SimplicialComplex {
    pub fn new(ring: &VarSet, facets: Vec<Vec<usize>>) -> Result<SimplicialComplex, ComplexError> {
        if facets.is_empty() {
            return Err(ComplexError::EmptyFacetList);
        }
        let sets: Vec<BTreeSet<usize>> = facets.iter().map(|f| f.iter().copied().collect()).collect();
        for (i, f) in sets.iter().enumerate() {
            if f.iter().any(|&v| v >= ring.len()) {
                return Err(ComplexError::VertexOutOfRange { facet: i });
            }
        }
        for (i, f) in sets.iter().enumerate() {
            for (j, g) in sets.iter().enumerate() {
                if i != j && f.is_subset(g) && (f != g || i > j) {
                    return Err(ComplexError::FacetContained { inner: i, outer: j });
                }
            }
        }
        Ok(SimplicialComplex { ring: ring.clone(), facets: sets })
    }

    /// Facets as the complements of the minimal primes: the inverse of
    /// `face_ideal` on proper squarefree ideals.
    pub fn from_ideal(ideal: &MonomialIdeal) -> Result<SimplicialComplex, ComplexError> {
        let primes = ideal.minimal_primes().map_err(ComplexError::Ideal)?;
        let n = ideal.ring().len();
        let facets: Vec<Vec<usize>> = primes
            .primes()
            .iter()
            .map(|p| (0..n).filter(|v| !p.contains(v)).collect())
            .collect();
        SimplicialComplex::new(ideal.ring(), facets)
    }

    pub fn ring(&self) -> &VarSet {
        &self.ring
    }

    pub fn facets(&self) -> &[BTreeSet<usize>] {
        &self.facets
    }

    pub fn facet_names(&self) -> Vec<Vec<String>> {
        self.facets
            .iter()
            .map(|f| f.iter().map(|&v| self.ring.name(v).to_string()).collect())
            .collect()
    }

    pub fn is_pure(&self) -> bool {
        let mut sizes = self.facets.iter().map(|f| f.len());
        match sizes.next() {
            None => true,
            Some(first) => sizes.all(|s| s == first),
        }
    }

    fn is_face(&self, s: &BTreeSet<usize>) -> bool {
        self.facets.iter().any(|f| s.is_subset(f))
    }

    /// The ideal generated by the products of the minimal non-faces.
    /// Enumerates candidate subsets by size; a minimal non-face of size k
    /// has all its (k-1)-subsets as faces, so sizes beyond the largest facet
    /// plus one cannot occur.
    pub fn face_ideal(&self) -> MonomialIdeal {
        let n = self.ring.len();
        let max_size = self.facets.iter().map(|f| f.len()).max().unwrap_or(0) + 1;
        let mut gens: Vec<Monomial> = Vec::new();
        for k in 1..=max_size.min(n) {
            for subset in (0..n).combinations(k) {
                let s: BTreeSet<usize> = subset.iter().copied().collect();
                if self.is_face(&s) {
                    continue;
                }
                let all_proper_faces = subset.iter().all(|v| {
                    let mut t = s.clone();
                    t.remove(v);
                    self.is_face(&t)
                });
                if all_proper_faces {
                    let mut exps = vec![0u32; n];
                    for &v in &s {
                        exps[v] = 1;
                    }
                    gens.push(Monomial::from_exps(exps));
                }
            }
        }
        MonomialIdeal::new(&self.ring, gens)
    }

    /// The shelling condition for a pure complex and a facet order: each
    /// facet must meet the union of the earlier ones in a nonempty
    /// subcomplex whose maximal faces all have codimension one.
    pub fn check_shelling(&self, order: &[usize]) -> Result<bool, ComplexError> {
        if !self.is_pure() {
            return Err(ComplexError::NotPure);
        }
        let mut seen = vec![false; self.facets.len()];
        if order.len() != self.facets.len() {
            return Err(ComplexError::BadPermutation);
        }
        for &i in order {
            if i >= self.facets.len() || seen[i] {
                return Err(ComplexError::BadPermutation);
            }
            seen[i] = true;
        }

        for (pos, &i) in order.iter().enumerate().skip(1) {
            let fi = &self.facets[i];
            let intersections: Vec<BTreeSet<usize>> = order[..pos]
                .iter()
                .map(|&j| fi.intersection(&self.facets[j]).copied().collect())
                .collect();
            // Maximal faces of the intersection subcomplex.
            let maximal: Vec<&BTreeSet<usize>> = intersections
                .iter()
                .filter(|s| !intersections.iter().any(|t| *s != t && s.is_subset(t)))
                .collect();
            if !maximal.iter().all(|s| s.len() + 1 == fi.len()) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
