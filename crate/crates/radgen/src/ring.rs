//! Variable sets, exponent-vector monomials and monomial orders.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

/// Ordered list of distinct variable names. Declaration order fixes the
/// variable indices used by every monomial order, for the lifetime of the
/// ring. Cheap to clone (shared backing storage).
#[derive(Clone, Debug)]
pub struct VarSet {
    names: Arc<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VarSetError {
    DuplicateName(String),
    EmptyName,
}

impl fmt::Display for VarSetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarSetError::DuplicateName(n) => write!(f, "duplicate variable name `{}`", n),
            VarSetError::EmptyName => write!(f, "empty variable name"),
        }
    }
}

impl std::error::Error for VarSetError {}

impl VarSet {
    pub fn new<I, S>(names: I) -> Result<VarSet, VarSetError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() {
                return Err(VarSetError::EmptyName);
            }
            if names[..i].contains(n) {
                return Err(VarSetError::DuplicateName(n.clone()));
            }
        }
        Ok(VarSet {
            names: Arc::new(names),
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// New ring with one extra variable appended after the existing ones.
    pub fn extended(&self, extra: &str) -> Result<VarSet, VarSetError> {
        let mut names = self.names.as_ref().clone();
        names.push(extra.to_string());
        VarSet::new(names)
    }

    /// A variable name not yet present in the ring ("w", then "w1", "w2", ...).
    pub fn fresh_name(&self) -> String {
        if self.index("w").is_none() {
            return "w".to_string();
        }
        let mut k = 1usize;
        loop {
            let cand = format!("w{}", k);
            if self.index(&cand).is_none() {
                return cand;
            }
            k += 1;
        }
    }

    /// True if `bigger` has this ring's variables as a prefix.
    pub fn is_prefix_of(&self, bigger: &VarSet) -> bool {
        bigger.names.len() >= self.names.len() && bigger.names[..self.names.len()] == self.names[..]
    }
}

impl PartialEq for VarSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.names, &other.names) || self.names == other.names
    }
}

impl Eq for VarSet {}

impl std::hash::Hash for VarSet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.names.hash(state);
    }
}

/// Exponent vector over a fixed variable list. The zero vector is the unit
/// monomial. Length must always equal the ambient ring's variable count;
/// monomials do not carry the ring themselves.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    pub fn var(index: usize, nvars: usize) -> Monomial {
        assert!(index < nvars, "variable index out of range");
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        Monomial { exps }
    }

    pub fn from_exps(exps: Vec<u32>) -> Monomial {
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.exps.len(), other.exps.len(), "monomial arity mismatch");
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).expect("monomial exponent overflow"))
            .collect();
        Monomial { exps }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        assert_eq!(self.exps.len(), other.exps.len(), "monomial arity mismatch");
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(&b, &a)| b - a)
                .collect(),
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.exps.len(), other.exps.len(), "monomial arity mismatch");
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }

    /// True when the two monomials share no variable.
    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Squarefree part: every positive exponent clamped to one.
    pub fn squarefree(&self) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|&e| e.min(1)).collect(),
        }
    }

    /// Indices of the variables appearing in this monomial.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    /// Same monomial viewed in a ring with extra trailing variables.
    pub fn extended(&self, new_nvars: usize) -> Monomial {
        assert!(new_nvars >= self.exps.len());
        let mut exps = self.exps.clone();
        exps.resize(new_nvars, 0);
        Monomial { exps }
    }

    pub fn display<'a>(&'a self, ring: &'a VarSet) -> MonomialDisplay<'a> {
        MonomialDisplay { mon: self, ring }
    }
}

pub struct MonomialDisplay<'a> {
    mon: &'a Monomial,
    ring: &'a VarSet,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mon.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.mon.exps().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", self.ring.name(i))?;
            if e > 1 {
                write!(f, "^{}", e)?;
            }
        }
        Ok(())
    }
}

/// Total, multiplicative well-orders on monomials of a fixed ring.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MonomialOrder {
    /// Pure lexicographic, first variable strongest.
    Lex,
    /// Degree reverse lexicographic, the default order everywhere.
    DegRevLex,
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars(), "monomial arity mismatch");
        match self {
            MonomialOrder::Lex => {
                for (&x, &y) in a.exps().iter().zip(b.exps()) {
                    match x.cmp(&y) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::DegRevLex => {
                match a.total_degree().cmp(&b.total_degree()) {
                    Ordering::Equal => {}
                    other => return other,
                }
                // Equal degree: the monomial with the smaller exponent in the
                // last position where they differ is the larger one.
                for (&x, &y) in a.exps().iter().zip(b.exps()).rev() {
                    match x.cmp(&y) {
                        Ordering::Equal => continue,
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                    }
                }
                Ordering::Equal
            }
        }
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::DegRevLex => write!(f, "degrevlex"),
        }
    }
}
