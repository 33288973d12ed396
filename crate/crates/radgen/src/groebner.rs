//! Buchberger-based ideal membership, radical membership and radical
//! equality over the rationals or a prime field.
//!
//! The engine is the verification oracle for every "up to radical" claim in
//! this crate: radical membership is decided by the auxiliary-variable trick
//! (f lies in the radical of A iff 1 lies in A + (1 - w*f) after adjoining a
//! fresh variable w), so no radical generator sets are ever computed.
//!
//! All arithmetic is exact. Runs are bounded by a step budget counting
//! S-pair reductions; exceeding it yields an error, never a wrong answer.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::poly::{Coeff, Polynomial};
use crate::ring::{Monomial, MonomialOrder, VarSet};

/// Coefficient field for a verification run.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FieldMode {
    Rational,
    Prime(u64),
}

impl fmt::Display for FieldMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldMode::Rational => write!(f, "rational"),
            FieldMode::Prime(p) => write!(f, "mod:{}", p),
        }
    }
}

/// Shared knobs for every Groebner computation.
#[derive(Clone, Copy, Debug)]
pub struct GbConfig {
    pub order: MonomialOrder,
    pub mode: FieldMode,
    /// Upper bound on S-pair reductions per basis computation.
    pub max_steps: u64,
}

pub const DEFAULT_MAX_STEPS: u64 = 1_000_000;

impl Default for GbConfig {
    fn default() -> Self {
        GbConfig {
            order: MonomialOrder::DegRevLex,
            mode: FieldMode::Rational,
            max_steps: DEFAULT_MAX_STEPS,
        }
    }
}

impl GbConfig {
    pub fn with_mode(mode: FieldMode) -> GbConfig {
        GbConfig { mode, ..GbConfig::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GbError {
    RingMismatch,
    BudgetExceeded { steps: u64 },
    /// A rational coefficient has no image in the prime field (denominator
    /// divisible by the modulus).
    NotInvertible { modulus: u64 },
}

impl fmt::Display for GbError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GbError::RingMismatch => write!(f, "polynomials come from different rings"),
            GbError::BudgetExceeded { steps } => {
                write!(f, "computation budget exceeded after {} pair reductions", steps)
            }
            GbError::NotInvertible { modulus } => {
                write!(f, "coefficient denominator vanishes mod {}", modulus)
            }
        }
    }
}

impl std::error::Error for GbError {}

// ---------------------------------------------------------------------------
// Coefficient fields
// ---------------------------------------------------------------------------

trait CoeffField {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn embed(&self, c: &Coeff) -> Result<Self::Elem, GbError>;
    fn to_rat(&self, c: &Self::Elem) -> Coeff;
    fn one(&self) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }
}

struct RatField;

impl CoeffField for RatField {
    type Elem = BigRational;

    fn embed(&self, c: &Coeff) -> Result<BigRational, GbError> {
        Ok(c.clone())
    }
    fn to_rat(&self, c: &BigRational) -> Coeff {
        c.clone()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
}

struct PrimeField {
    p: u64,
}

impl PrimeField {
    fn reduce_int(&self, n: &BigInt) -> u64 {
        let p = BigInt::from(self.p);
        let mut r = n % &p;
        if r.is_negative() {
            r += &p;
        }
        r.to_u64().expect("residue fits in u64")
    }

    fn pow(&self, base: u64, mut e: u64) -> u64 {
        let p = self.p as u128;
        let mut acc: u128 = 1;
        let mut b = base as u128 % p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        acc as u64
    }
}

impl CoeffField for PrimeField {
    type Elem = u64;

    fn embed(&self, c: &Coeff) -> Result<u64, GbError> {
        let num = self.reduce_int(c.numer());
        let den = self.reduce_int(c.denom());
        if den == 0 {
            return Err(GbError::NotInvertible { modulus: self.p });
        }
        Ok(self.mul(&num, &self.inv(&den)))
    }
    fn to_rat(&self, c: &u64) -> Coeff {
        Coeff::from_integer(BigInt::from(*c))
    }
    fn one(&self) -> u64 {
        1
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + self.p as u128 - *b as u128) % self.p as u128) as u64
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - *a
        }
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero in prime field");
        self.pow(*a, self.p - 2)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
}

// ---------------------------------------------------------------------------
// Engine
// ---------------------------------------------------------------------------

/// Engine-internal polynomial: nonzero terms sorted descending under the
/// engine's order.
type GPoly<F> = Vec<(F, Monomial)>;

struct Engine<'f, F: CoeffField> {
    field: &'f F,
    order: MonomialOrder,
    max_steps: u64,
}

impl<'f, F: CoeffField> Engine<'f, F> {
    fn import(&self, p: &Polynomial) -> Result<GPoly<F::Elem>, GbError> {
        let mut terms = Vec::with_capacity(p.num_terms());
        for (c, m) in p.terms() {
            let e = self.field.embed(c)?;
            if !self.field.is_zero(&e) {
                terms.push((e, m.clone()));
            }
        }
        terms.sort_by(|a, b| self.order.cmp(&b.1, &a.1));
        Ok(terms)
    }

    fn export(&self, ring: &VarSet, p: &GPoly<F::Elem>) -> Polynomial {
        Polynomial::from_terms(
            ring,
            p.iter()
                .map(|(c, m)| (self.field.to_rat(c), m.clone()))
                .collect(),
        )
    }

    /// `p - c * x^shift * g`, merging the two sorted term lists.
    fn sub_scaled(
        &self,
        p: &GPoly<F::Elem>,
        g: &GPoly<F::Elem>,
        c: &F::Elem,
        shift: &Monomial,
    ) -> GPoly<F::Elem> {
        let mut out = Vec::with_capacity(p.len() + g.len());
        let (mut i, mut j) = (0, 0);
        while i < p.len() && j < g.len() {
            let gm = g[j].1.mul(shift);
            match self.order.cmp(&p[i].1, &gm) {
                Ordering::Greater => {
                    out.push(p[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let coeff = self.field.neg(&self.field.mul(c, &g[j].0));
                    out.push((coeff, gm));
                    j += 1;
                }
                Ordering::Equal => {
                    let coeff = self.field.sub(&p[i].0, &self.field.mul(c, &g[j].0));
                    if !self.field.is_zero(&coeff) {
                        out.push((coeff, gm));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&p[i..]);
        while j < g.len() {
            let coeff = self.field.neg(&self.field.mul(c, &g[j].0));
            out.push((coeff, g[j].1.mul(shift)));
            j += 1;
        }
        out
    }

    /// Full normal form of `p` modulo the list `basis`. The divisor for each
    /// reduction step is the first list element whose leading monomial
    /// divides the current leading monomial, so the result is deterministic
    /// for a fixed list order.
    fn normal_form(
        &self,
        mut p: GPoly<F::Elem>,
        basis: &[GPoly<F::Elem>],
    ) -> GPoly<F::Elem> {
        let mut remainder: GPoly<F::Elem> = Vec::new();
        'outer: while !p.is_empty() {
            let (lc, lm) = (&p[0].0, &p[0].1);
            for g in basis {
                if g.is_empty() {
                    continue;
                }
                if let Some(shift) = g[0].1.try_div(lm) {
                    let c = self.field.div(lc, &g[0].0);
                    p = self.sub_scaled(&p, g, &c, &shift);
                    continue 'outer;
                }
            }
            remainder.push(p.remove(0));
        }
        remainder
    }

    fn s_poly(&self, f: &GPoly<F::Elem>, g: &GPoly<F::Elem>) -> GPoly<F::Elem> {
        let lcm = f[0].1.lcm(&g[0].1);
        let sf = f[0].1.try_div(&lcm).expect("lcm divisible by lm");
        let sg = g[0].1.try_div(&lcm).expect("lcm divisible by lm");
        // (x^sf / lc_f) * f  -  (x^sg / lc_g) * g
        let inv_f = self.field.inv(&f[0].0);
        let scaled_f: GPoly<F::Elem> = f
            .iter()
            .map(|(c, m)| (self.field.mul(c, &inv_f), m.mul(&sf)))
            .collect();
        let c = self.field.inv(&g[0].0);
        self.sub_scaled(&scaled_f, g, &c, &sg)
    }

    fn make_monic(&self, p: &mut GPoly<F::Elem>) {
        if p.is_empty() {
            return;
        }
        let inv = self.field.inv(&p[0].0);
        for (c, _) in p.iter_mut() {
            *c = self.field.mul(c, &inv);
        }
    }

    fn constant_one(&self, nvars: usize) -> GPoly<F::Elem> {
        vec![(self.field.one(), Monomial::one(nvars))]
    }

    /// Buchberger's algorithm with the coprimality and chain criteria and
    /// normal (lowest lcm degree first) pair selection. Returns the unique
    /// reduced, monic basis sorted descending by leading monomial.
    ///
    /// Short-circuits to the basis `[1]` the moment a nonzero constant shows
    /// up, which is the common exit for radical membership queries.
    fn buchberger(
        &self,
        gens: &[GPoly<F::Elem>],
        nvars: usize,
    ) -> Result<Vec<GPoly<F::Elem>>, GbError> {
        let mut basis: Vec<GPoly<F::Elem>> = gens.iter().filter(|g| !g.is_empty()).cloned().collect();
        if basis.iter().any(|g| g[0].1.is_unit()) {
            return Ok(vec![self.constant_one(nvars)]);
        }

        // Pending pair keys: (lcm degree, lcm exponents, i, j). BTreeSet pops
        // the minimum, which implements normal selection deterministically.
        type PairKey = (u64, Vec<u32>, usize, usize);
        let key = |basis: &[GPoly<F::Elem>], i: usize, j: usize| -> PairKey {
            let lcm = basis[i][0].1.lcm(&basis[j][0].1);
            (lcm.total_degree(), lcm.exps().to_vec(), i, j)
        };
        let mut pending: BTreeSet<PairKey> = BTreeSet::new();
        for j in 1..basis.len() {
            for i in 0..j {
                pending.insert(key(&basis, i, j));
            }
        }

        let mut steps: u64 = 0;
        while let Some(k) = pending.pop_first() {
            let (_, _, i, j) = k;
            let (lm_i, lm_j) = (&basis[i][0].1, &basis[j][0].1);
            // First criterion: coprime leading monomials reduce to zero.
            if lm_i.coprime(lm_j) {
                continue;
            }
            // Chain criterion: skip when some other leading monomial divides
            // the pair's lcm and both companion pairs were already handled.
            let lcm = lm_i.lcm(lm_j);
            let chain = (0..basis.len()).any(|t| {
                t != i
                    && t != j
                    && basis[t][0].1.divides(&lcm)
                    && !pending.contains(&key(&basis, i.min(t), i.max(t)))
                    && !pending.contains(&key(&basis, j.min(t), j.max(t)))
            });
            if chain {
                continue;
            }

            if steps >= self.max_steps {
                return Err(GbError::BudgetExceeded { steps });
            }
            steps += 1;

            let s = self.s_poly(&basis[i], &basis[j]);
            let r = self.normal_form(s, &basis);
            if r.is_empty() {
                continue;
            }
            if r[0].1.is_unit() {
                return Ok(vec![self.constant_one(nvars)]);
            }
            let new_idx = basis.len();
            basis.push(r);
            for t in 0..new_idx {
                pending.insert(key(&basis, t, new_idx));
            }
        }

        Ok(self.reduce_basis(basis))
    }

    /// Minimalize and inter-reduce, producing the reduced Groebner basis.
    fn reduce_basis(&self, mut basis: Vec<GPoly<F::Elem>>) -> Vec<GPoly<F::Elem>> {
        // Drop elements whose leading monomial is divisible by another's.
        let mut keep = vec![true; basis.len()];
        for i in 0..basis.len() {
            if !keep[i] {
                continue;
            }
            for j in 0..basis.len() {
                if i == j || !keep[j] {
                    continue;
                }
                let (li, lj) = (&basis[i][0].1, &basis[j][0].1);
                if lj.divides(li) && (lj != li || j < i) {
                    keep[i] = false;
                    break;
                }
            }
        }
        let mut minimal: Vec<GPoly<F::Elem>> = basis
            .drain(..)
            .zip(keep)
            .filter_map(|(g, k)| if k { Some(g) } else { None })
            .collect();

        // Tail-reduce every element against the others. Leading monomials
        // are pairwise non-divisible here, so they survive reduction and one
        // pass reaches the fixed point.
        for i in 0..minimal.len() {
            let current = minimal[i].clone();
            let others: Vec<GPoly<F::Elem>> = minimal
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, g)| g.clone())
                .collect();
            minimal[i] = self.normal_form(current, &others);
        }
        minimal.retain(|g| !g.is_empty());
        for g in minimal.iter_mut() {
            self.make_monic(g);
        }
        minimal.sort_by(|a, b| self.order.cmp(&b[0].1, &a[0].1));
        minimal
    }
}

// ---------------------------------------------------------------------------
// Public surface
// ---------------------------------------------------------------------------

/// A computed Groebner basis with enough context to check itself.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    pub ring: VarSet,
    pub order: MonomialOrder,
    pub mode: FieldMode,
    /// Monic elements, sorted descending by leading monomial.
    pub basis: Vec<Polynomial>,
    pub reduced: bool,
}

impl GroebnerBasis {
    /// Re-verifies the defining property: every S-polynomial of basis pairs
    /// reduces to zero, and re-running the completion returns the basis
    /// unchanged.
    pub fn self_check(&self, max_steps: u64) -> Result<bool, GbError> {
        let cfg = GbConfig { order: self.order, mode: self.mode, max_steps };
        match self.mode {
            FieldMode::Rational => self.self_check_in(&RatField, &cfg),
            FieldMode::Prime(p) => self.self_check_in(&PrimeField { p }, &cfg),
        }
    }

    fn self_check_in<F: CoeffField>(&self, field: &F, cfg: &GbConfig) -> Result<bool, GbError> {
        let engine = Engine { field, order: cfg.order, max_steps: cfg.max_steps };
        let basis: Vec<GPoly<F::Elem>> = self
            .basis
            .iter()
            .map(|p| engine.import(p))
            .collect::<Result<_, _>>()?;
        for j in 1..basis.len() {
            for i in 0..j {
                let s = engine.s_poly(&basis[i], &basis[j]);
                if !engine.normal_form(s, &basis).is_empty() {
                    return Ok(false);
                }
            }
        }
        let again = buchberger(&self.basis, &GbConfig { ..*cfg })?;
        Ok(again.basis == self.basis)
    }
}

fn common_ring<'a>(polys: impl IntoIterator<Item = &'a Polynomial>) -> Result<Option<VarSet>, GbError> {
    let mut ring: Option<VarSet> = None;
    for p in polys {
        match &ring {
            None => ring = Some(p.ring().clone()),
            Some(r) => {
                if r != p.ring() {
                    return Err(GbError::RingMismatch);
                }
            }
        }
    }
    Ok(ring)
}

fn dispatch<T>(
    cfg: &GbConfig,
    rat: impl FnOnce(&Engine<RatField>) -> Result<T, GbError>,
    prime: impl FnOnce(&Engine<PrimeField>) -> Result<T, GbError>,
) -> Result<T, GbError> {
    match cfg.mode {
        FieldMode::Rational => {
            let field = RatField;
            rat(&Engine { field: &field, order: cfg.order, max_steps: cfg.max_steps })
        }
        FieldMode::Prime(p) => {
            let field = PrimeField { p };
            prime(&Engine { field: &field, order: cfg.order, max_steps: cfg.max_steps })
        }
    }
}

/// Reduced Groebner basis of the ideal generated by `gens`.
pub fn buchberger(gens: &[Polynomial], cfg: &GbConfig) -> Result<GroebnerBasis, GbError> {
    let ring = match common_ring(gens)? {
        Some(r) => r,
        None => {
            return Ok(GroebnerBasis {
                ring: VarSet::new(Vec::<String>::new()).expect("empty ring"),
                order: cfg.order,
                mode: cfg.mode,
                basis: Vec::new(),
                reduced: true,
            })
        }
    };
    let nvars = ring.len();

    fn run<F: CoeffField>(
        engine: &Engine<F>,
        gens: &[Polynomial],
        ring: &VarSet,
        nvars: usize,
    ) -> Result<Vec<Polynomial>, GbError> {
        let imported: Vec<GPoly<F::Elem>> = gens
            .iter()
            .map(|p| engine.import(p))
            .collect::<Result<_, _>>()?;
        let basis = engine.buchberger(&imported, nvars)?;
        Ok(basis.iter().map(|g| engine.export(ring, g)).collect())
    }

    let basis = dispatch(
        cfg,
        |e| run(e, gens, &ring, nvars),
        |e| run(e, gens, &ring, nvars),
    )?;
    Ok(GroebnerBasis { ring, order: cfg.order, mode: cfg.mode, basis, reduced: true })
}

/// Remainder of `f` on division by the list `g` (rational arithmetic). When
/// `g` is a Groebner basis this is the canonical normal form; in general it
/// is the deterministic first-match division remainder.
pub fn normal_form(
    f: &Polynomial,
    g: &[Polynomial],
    order: MonomialOrder,
) -> Result<Polynomial, GbError> {
    common_ring(std::iter::once(f).chain(g))?;
    let field = RatField;
    let engine = Engine { field: &field, order, max_steps: u64::MAX };
    let fe = engine.import(f)?;
    let ge: Vec<GPoly<BigRational>> = g
        .iter()
        .map(|p| engine.import(p))
        .collect::<Result<_, _>>()?;
    let r = engine.normal_form(fe, &ge);
    Ok(engine.export(f.ring(), &r))
}

/// Does `f` lie in the ideal generated by `gens`?
pub fn ideal_member(f: &Polynomial, gens: &[Polynomial], cfg: &GbConfig) -> Result<bool, GbError> {
    common_ring(std::iter::once(f).chain(gens))?;
    if f.is_zero() {
        return Ok(true);
    }
    // Membership in a monomial ideal is plain divisibility, term by term.
    if let Some(mons) = all_monomials(gens) {
        return Ok(f
            .terms()
            .iter()
            .all(|(_, m)| mons.iter().any(|g| g.divides(m))));
    }
    let gb = buchberger(gens, cfg)?;
    let r = match cfg.mode {
        FieldMode::Rational => normal_form(f, &gb.basis, cfg.order)?,
        FieldMode::Prime(p) => {
            let field = PrimeField { p };
            let engine = Engine { field: &field, order: cfg.order, max_steps: cfg.max_steps };
            let fe = engine.import(f)?;
            let ge: Vec<GPoly<u64>> = gb
                .basis
                .iter()
                .map(|q| engine.import(q))
                .collect::<Result<_, _>>()?;
            engine.export(f.ring(), &engine.normal_form(fe, &ge))
        }
    };
    Ok(r.is_zero())
}

fn all_monomials(gens: &[Polynomial]) -> Option<Vec<Monomial>> {
    let mut mons = Vec::with_capacity(gens.len());
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let (_, m) = g.as_single_term()?;
        mons.push(m.clone());
    }
    Some(mons)
}

/// Does `f` lie in the radical of the ideal generated by `gens`? Decided by
/// testing whether 1 lies in (gens, 1 - w*f) with w a fresh last variable.
pub fn radical_member(
    f: &Polynomial,
    gens: &[Polynomial],
    cfg: &GbConfig,
) -> Result<bool, GbError> {
    let ring = match common_ring(std::iter::once(f).chain(gens))? {
        Some(r) => r,
        None => unreachable!("iterator is nonempty"),
    };
    if f.is_zero() {
        return Ok(true);
    }
    let aux = ring.fresh_name();
    let ext = ring.extended(&aux).expect("fresh name is distinct");
    let w = Polynomial::var(&ext, ext.len() - 1);
    let mut extended: Vec<Polynomial> = gens.iter().map(|g| g.lift(&ext)).collect();
    extended.push(&Polynomial::one(&ext) - &(&w * &f.lift(&ext)));
    let gb = buchberger(&extended, cfg)?;
    Ok(is_unit_ideal_basis(&gb.basis))
}

fn is_unit_ideal_basis(basis: &[Polynomial]) -> bool {
    basis.len() == 1 && basis[0].is_constant() && !basis[0].is_zero()
}

/// Which inclusion a failed generator broke.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum InclusionSide {
    /// A generator of the left ideal is not in the radical of the right.
    LeftIntoRight,
    /// A generator of the right ideal is not in the radical of the left.
    RightIntoLeft,
}

impl fmt::Display for InclusionSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InclusionSide::LeftIntoRight => write!(f, "left_into_right"),
            InclusionSide::RightIntoLeft => write!(f, "right_into_left"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RadicalFailure {
    pub generator: Polynomial,
    pub side: InclusionSide,
}

/// Outcome of a radical-equality check between two generating sets.
#[derive(Clone, Debug)]
pub struct RadicalReport {
    pub verdict: bool,
    pub failures: Vec<RadicalFailure>,
    pub mode: FieldMode,
}

/// Do `a` and `b` generate ideals with the same radical? Checks every
/// generator of each side for radical membership in the other and lists the
/// failures.
pub fn radical_equal(
    a: &[Polynomial],
    b: &[Polynomial],
    cfg: &GbConfig,
) -> Result<RadicalReport, GbError> {
    common_ring(a.iter().chain(b))?;
    let mut failures = Vec::new();
    for f in a {
        if !radical_member(f, b, cfg)? {
            failures.push(RadicalFailure {
                generator: f.clone(),
                side: InclusionSide::LeftIntoRight,
            });
        }
    }
    for g in b {
        if !radical_member(g, a, cfg)? {
            failures.push(RadicalFailure {
                generator: g.clone(),
                side: InclusionSide::RightIntoLeft,
            });
        }
    }
    Ok(RadicalReport { verdict: failures.is_empty(), failures, mode: cfg.mode })
}
