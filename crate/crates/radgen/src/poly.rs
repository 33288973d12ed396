//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms are kept strictly sorted descending under degrevlex, with no zero
//! coefficients and no duplicate monomials, so structural equality is
//! canonical equality and printing is deterministic.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::ring::{Monomial, MonomialOrder, VarSet};

pub type Coeff = BigRational;

/// The canonical storage order for polynomial terms.
pub const CANONICAL_ORDER: MonomialOrder = MonomialOrder::DegRevLex;

#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: VarSet,
    /// Sorted descending under `CANONICAL_ORDER`; every coefficient nonzero.
    terms: Vec<(Coeff, Monomial)>,
}

impl Polynomial {
    pub fn zero(ring: &VarSet) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &VarSet) -> Polynomial {
        Polynomial::constant(ring, Coeff::one())
    }

    pub fn constant(ring: &VarSet, c: Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(ring);
        }
        Polynomial {
            ring: ring.clone(),
            terms: vec![(c, Monomial::one(ring.len()))],
        }
    }

    pub fn var(ring: &VarSet, index: usize) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Coeff::one(), Monomial::var(index, ring.len()))],
        }
    }

    pub fn from_monomial(ring: &VarSet, m: Monomial) -> Polynomial {
        assert_eq!(m.nvars(), ring.len(), "monomial arity mismatch");
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Coeff::one(), m)],
        }
    }

    /// Builds the canonical polynomial from an arbitrary term list: sorts,
    /// merges duplicate monomials, drops zero coefficients.
    pub fn from_terms(ring: &VarSet, terms: Vec<(Coeff, Monomial)>) -> Polynomial {
        for (_, m) in &terms {
            assert_eq!(m.nvars(), ring.len(), "monomial arity mismatch");
        }
        let mut terms = terms;
        terms.sort_by(|a, b| CANONICAL_ORDER.cmp(&b.1, &a.1));
        let mut canon: Vec<(Coeff, Monomial)> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            match canon.last_mut() {
                Some((lc, lm)) if *lm == m => {
                    *lc += c;
                    if lc.is_zero() {
                        canon.pop();
                    }
                }
                _ => {
                    if !c.is_zero() {
                        canon.push((c, m));
                    }
                }
            }
        }
        Polynomial { ring: ring.clone(), terms: canon }
    }

    pub fn ring(&self) -> &VarSet {
        &self.ring
    }

    pub fn terms(&self) -> &[(Coeff, Monomial)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].1.is_unit())
    }

    /// The single (coefficient, monomial) pair when the polynomial is one term.
    pub fn as_single_term(&self) -> Option<(&Coeff, &Monomial)> {
        if self.terms.len() == 1 {
            Some((&self.terms[0].0, &self.terms[0].1))
        } else {
            None
        }
    }

    pub fn total_degree(&self) -> u64 {
        self.terms
            .iter()
            .map(|(_, m)| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    pub fn same_ring(&self, other: &Polynomial) -> bool {
        self.ring == other.ring
    }

    fn assert_same_ring(&self, other: &Polynomial) {
        assert!(self.same_ring(other), "polynomial ring mismatch");
    }

    /// Leading (coefficient, monomial) pair under `order`.
    pub fn leading(&self, order: MonomialOrder) -> Option<(&Coeff, &Monomial)> {
        if order == CANONICAL_ORDER {
            return self.terms.first().map(|(c, m)| (c, m));
        }
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(&a.1, &b.1))
            .map(|(c, m)| (c, m))
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_ring(other);
        let mut out: Vec<(Coeff, Monomial)> =
            Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match CANONICAL_ORDER.cmp(&self.terms[i].1, &other.terms[j].1) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &self.terms[i].0 + &other.terms[j].0;
                    if !c.is_zero() {
                        out.push((c, self.terms[i].1.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(c, m)| (-c, m.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(a, m)| (a * c, m.clone())).collect(),
        }
    }

    /// `c * x^m * self`, the basic step of polynomial multiplication and
    /// division. Preserves sortedness (monomial orders are multiplicative).
    pub fn mul_term(&self, c: &Coeff, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(a, n)| (a * c, n.mul(m)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_ring(other);
        let mut acc = Polynomial::zero(&self.ring);
        for (c, m) in &other.terms {
            acc = acc.add(&self.mul_term(c, m));
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// The same polynomial viewed in a ring extending this one by trailing
    /// variables.
    pub fn lift(&self, bigger: &VarSet) -> Polynomial {
        assert!(
            self.ring.is_prefix_of(bigger),
            "target ring does not extend the polynomial's ring"
        );
        Polynomial {
            ring: bigger.clone(),
            terms: self
                .terms
                .iter()
                .map(|(c, m)| (c.clone(), m.extended(bigger.len())))
                .collect(),
        }
    }

    pub fn parse(text: &str, ring: &VarSet) -> Result<Polynomial, crate::parse::ParseError> {
        crate::parse::parse_polynomial(text, ring)
    }

    /// Deterministic string form with terms descending under `order`.
    pub fn to_string_with(&self, order: MonomialOrder) -> String {
        let mut terms: Vec<&(Coeff, Monomial)> = self.terms.iter().collect();
        if order != CANONICAL_ORDER {
            terms.sort_by(|a, b| order.cmp(&b.1, &a.1));
        }
        render_terms(&self.ring, &terms)
    }
}

fn render_terms(ring: &VarSet, terms: &[&(Coeff, Monomial)]) -> String {
    use fmt::Write;
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (c, m)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let mag = c.abs();
        if m.is_unit() {
            write!(out, "{}", mag).unwrap();
        } else if mag.is_one() {
            write!(out, "{}", m.display(ring)).unwrap();
        } else {
            write!(out, "{}*{}", mag, m.display(ring)).unwrap();
        }
    }
    out
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with(CANONICAL_ORDER))
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.ring.hash(state);
        self.terms.hash(state);
    }
}

// A total order so polynomials can key ordered collections; compares ring
// names, then term lists. Not a mathematically meaningful order.
impl PartialOrd for Polynomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Polynomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ring
            .names()
            .cmp(other.ring.names())
            .then_with(|| self.terms.cmp(&other.terms))
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::add(self, rhs)
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::sub(self, rhs)
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::mul(self, rhs)
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

pub fn int(n: i64) -> Coeff {
    Coeff::from_integer(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> VarSet {
        VarSet::new(["x1", "x2", "x3", "x4", "x5", "x6", "x7"]).unwrap()
    }

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(s, &ring()).unwrap()
    }

    #[test]
    fn addition_identities() {
        let g2 = p("x1*x2").add(&p("x3*x5"));
        assert_eq!(g2, p("x1*x2 + x3*x5"));
        let q = p("x3*x4*x7 - 2*x5");
        assert_eq!(q.add(&Polynomial::zero(&ring())), q);
        assert!(q.add(&q.neg()).is_zero());
    }

    #[test]
    fn product_expands_and_absorbs() {
        let lhs = p("(x3*x4 + x5*x6)*x5");
        assert_eq!(lhs, p("x3*x4*x5 + x5^2*x6"));
        assert!(p("x1*x2").mul(&Polynomial::zero(&ring())).is_zero());
        let a = p("x1");
        let b = p("x2");
        assert_eq!(a.add(&b).mul(&a.sub(&b)), p("x1^2 - x2^2"));
    }

    #[test]
    fn canonical_printing() {
        assert_eq!(Polynomial::zero(&ring()).to_string(), "0");
        assert_eq!(p("x5*x6 + x3*x4").to_string(), "x3*x4 + x5*x6");
        assert_eq!(p("2*x1 - 3").to_string(), "2*x1 - 3");
        assert_eq!(p("-x1 + 1/2").to_string(), "-x1 + 1/2");
        assert_eq!(p("x1^3").to_string(), "x1^3");
    }

    #[test]
    fn lift_into_extension() {
        let r = ring();
        let bigger = r.extended("w").unwrap();
        let f = p("x1*x5 + 2");
        let lifted = f.lift(&bigger);
        assert_eq!(lifted.to_string(), "x1*x5 + 2");
        assert_eq!(lifted.ring().len(), 8);
    }
}
