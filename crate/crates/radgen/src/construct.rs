//! Constructive generators, up to radical, for intersections of ideals.
//!
//! Given I = (mu_1..mu_u) and J = (nu_1..nu_v) with the nested-containment
//! hypothesis [mu_1..mu_s] in [nu_1..nu_s], the builder emits r generators
//! of I meet J up to radical, where r = u+v-s-1 when s <= v-2 and r = u
//! otherwise. Each generator gathers the antidiagonal products
//!
//! ```text
//! gamma_i = sum over h+k = i+s+1, h >= s+1 of mu_h * nu_k,
//! ```
//!
//! with mu_{i-u+s} added on the middle range u-s+1 <= i <= u; indices out of
//! range contribute nothing. Iterating the construction handles chains of
//! nested ideals and produces, for the full flag of length t, exactly t
//! generators, matching the height of the intersection.
//!
//! Everything the builder claims is re-checkable: prefix-containment
//! certificates ride along with the output, and `verify_theorem` proves the
//! radical equality through the Groebner oracle, instance by instance.

use std::fmt;

use crate::groebner::{ideal_member, radical_member, GbConfig, GbError};
use crate::ideals::MonomialIdeal;
use crate::poly::Polynomial;
use crate::ring::{Monomial, VarSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstructError {
    RingMismatch,
    BadRange { what: String },
    /// mu_index is not contained in the ideal of the first `index` nu's.
    HypothesisViolation { index: usize },
    ZeroGenerator { list: &'static str, index: usize },
    Gb(GbError),
}

impl fmt::Display for ConstructError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructError::RingMismatch => write!(f, "generators come from different rings"),
            ConstructError::BadRange { what } => write!(f, "parameter out of range: {}", what),
            ConstructError::HypothesisViolation { index } => write!(
                f,
                "nested-containment hypothesis fails at index {}: mu_{} is not in (nu_1..nu_{})",
                index, index, index
            ),
            ConstructError::ZeroGenerator { list, index } => {
                write!(f, "{} generator {} is zero", list, index)
            }
            ConstructError::Gb(e) => write!(f, "{}", e),
        }
    }
}

impl std::error::Error for ConstructError {}

impl From<GbError> for ConstructError {
    fn from(e: GbError) -> ConstructError {
        ConstructError::Gb(e)
    }
}

/// Three-valued outcome used wherever a budget can interrupt a check.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    Pass,
    Fail,
    /// A sub-check ran out of budget; never reported as failure.
    Inconclusive,
}

impl Verdict {
    pub fn and(self, other: Verdict) -> Verdict {
        use Verdict::*;
        match (self, other) {
            (Fail, _) | (_, Fail) => Fail,
            (Inconclusive, _) | (_, Inconclusive) => Inconclusive,
            (Pass, Pass) => Pass,
        }
    }

    pub fn passed(self) -> bool {
        self == Verdict::Pass
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => write!(f, "pass"),
            Verdict::Fail => write!(f, "fail"),
            Verdict::Inconclusive => write!(f, "inconclusive"),
        }
    }
}

fn radical_check(f: &Polynomial, gens: &[Polynomial], cfg: &GbConfig) -> Result<Verdict, ConstructError> {
    match radical_member(f, gens, cfg) {
        Ok(true) => Ok(Verdict::Pass),
        Ok(false) => Ok(Verdict::Fail),
        Err(GbError::BudgetExceeded { .. }) => Ok(Verdict::Inconclusive),
        Err(e) => Err(e.into()),
    }
}

/// Prefix containment: for every i <= s, the i-th alpha lies in the ideal of
/// the first i betas.
pub fn check_prefix_containment(
    alpha: &[Polynomial],
    beta: &[Polynomial],
    s: usize,
    cfg: &GbConfig,
) -> Result<bool, ConstructError> {
    if s > alpha.len() || s > beta.len() {
        return Err(ConstructError::BadRange {
            what: format!("prefix length {} exceeds list lengths {}/{}", s, alpha.len(), beta.len()),
        });
    }
    for i in 1..=s {
        if !ideal_member(&alpha[i - 1], &beta[..i], cfg)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Input for one application of the construction.
#[derive(Clone, Debug)]
pub struct TheoremInput {
    pub ring: VarSet,
    pub mu: Vec<Polynomial>,
    pub nu: Vec<Polynomial>,
    pub s: usize,
}

impl TheoremInput {
    pub fn new(ring: &VarSet, mu: Vec<Polynomial>, nu: Vec<Polynomial>, s: usize) -> TheoremInput {
        TheoremInput { ring: ring.clone(), mu, nu, s }
    }

    pub fn u(&self) -> usize {
        self.mu.len()
    }

    pub fn v(&self) -> usize {
        self.nu.len()
    }

    fn validate(&self) -> Result<(), ConstructError> {
        for (list, name) in [(&self.mu, "mu"), (&self.nu, "nu")] {
            for (i, p) in list.iter().enumerate() {
                if p.ring() != &self.ring {
                    return Err(ConstructError::RingMismatch);
                }
                if p.is_zero() {
                    return Err(ConstructError::ZeroGenerator { list: name, index: i + 1 });
                }
            }
        }
        let (u, v) = (self.u(), self.v());
        if u == 0 {
            return Err(ConstructError::BadRange { what: "u must be at least 1".into() });
        }
        if !(self.s < u && self.s <= v) {
            return Err(ConstructError::BadRange {
                what: format!("s = {} requires s < u = {} and s <= v = {}", self.s, u, v),
            });
        }
        Ok(())
    }

    /// The nested-containment hypothesis, verified rather than assumed.
    fn check_hypothesis(&self, cfg: &GbConfig) -> Result<(), ConstructError> {
        for i in 1..=self.s {
            if !ideal_member(&self.mu[i - 1], &self.nu[..i], cfg)? {
                return Err(ConstructError::HypothesisViolation { index: i });
            }
        }
        Ok(())
    }
}

/// Where one output generator came from: the surviving antidiagonal product
/// indices and the optional carried mu index (all 1-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaProvenance {
    pub index: usize,
    pub products: Vec<(usize, usize)>,
    pub carried_mu: Option<usize>,
}

/// The constructed generators with provenance and the two
/// prefix-containment certificates.
#[derive(Clone, Debug)]
pub struct GammaResult {
    pub gammas: Vec<Polynomial>,
    pub provenance: Vec<GammaProvenance>,
    /// [gamma_1..gamma_u] sits prefix-wise inside the reordered mu list
    /// (mu_{s+1}, ..., mu_u, mu_1, ..., mu_s).
    pub prefix_mu: bool,
    /// [gamma_1..gamma_v] sits prefix-wise inside (nu_1, ..., nu_v).
    pub prefix_nu: bool,
}

impl GammaResult {
    pub fn r(&self) -> usize {
        self.gammas.len()
    }
}

/// Upper bound on the arithmetical rank of the intersection delivered by
/// the construction: u+v-s-1 when s <= v-2, else u. s = 0 is allowed and
/// yields the classical u+v-1 bound.
pub fn ara_upper_bound(u: usize, v: usize, s: usize) -> Result<usize, ConstructError> {
    if !(s < u && s <= v) {
        return Err(ConstructError::BadRange {
            what: format!("s = {} requires s < u = {} and s <= v = {}", s, u, v),
        });
    }
    Ok(if s + 2 <= v { u + v - s - 1 } else { u })
}

/// Builds the generators of I meet J up to radical. The hypothesis is
/// verified first; the output count always equals `ara_upper_bound` and the
/// two prefix-containment certificates are checked on the result.
pub fn build_gamma(input: &TheoremInput, cfg: &GbConfig) -> Result<GammaResult, ConstructError> {
    input.validate()?;
    input.check_hypothesis(cfg)?;
    let (u, v, s) = (input.u(), input.v(), input.s);
    let r = ara_upper_bound(u, v, s)?;

    let mut gammas = Vec::with_capacity(r);
    let mut provenance = Vec::with_capacity(r);
    for i in 1..=r {
        let mut gamma = Polynomial::zero(&input.ring);
        let mut products = Vec::new();
        // h + k = i + s + 1 with s+1 <= h <= u and 1 <= k <= v; out-of-range
        // factors are the zero convention and simply never enter the loop.
        let lo = (s + 1).max((i + s + 1).saturating_sub(v));
        let hi = u.min(i + s);
        for h in lo..=hi {
            let k = i + s + 1 - h;
            gamma = gamma.add(&input.mu[h - 1].mul(&input.nu[k - 1]));
            products.push((h, k));
        }
        let carried_mu = if i + s > u && i <= u {
            // Middle range: the generator also carries mu_{i-u+s}.
            let mi = i + s - u;
            gamma = gamma.add(&input.mu[mi - 1]);
            Some(mi)
        } else {
            None
        };
        gammas.push(gamma);
        provenance.push(GammaProvenance { index: i, products, carried_mu });
    }

    let reordered_mu: Vec<Polynomial> = input.mu[s..]
        .iter()
        .chain(&input.mu[..s])
        .cloned()
        .collect();
    let prefix_mu = check_prefix_containment(&gammas, &reordered_mu, u, cfg)?;
    let prefix_nu = check_prefix_containment(&gammas, &input.nu, v, cfg)?;

    Ok(GammaResult { gammas, provenance, prefix_mu, prefix_nu })
}

#[derive(Clone, Debug)]
pub struct GammaInclusion {
    pub index: usize,
    pub in_mu_ideal: Verdict,
    pub in_nu_ideal: Verdict,
}

#[derive(Clone, Debug)]
pub struct ProductInclusion {
    pub mu_index: usize,
    pub nu_index: usize,
    pub verdict: Verdict,
}

/// Machine check of the radical equality sqrt(I meet J) = sqrt(Gamma).
#[derive(Clone, Debug)]
pub struct TheoremReport {
    pub verdict: Verdict,
    /// Every gamma lies in sqrt(I) and in sqrt(J), which is containment in
    /// sqrt(I meet J).
    pub gamma_inclusions: Vec<GammaInclusion>,
    /// Every product mu_h * nu_k lies in sqrt(Gamma); the products generate
    /// I*J, whose radical is that of the intersection.
    pub product_inclusions: Vec<ProductInclusion>,
}

/// Verifies both inclusions of the radical equality for a built result.
/// Budget exhaustion makes the affected sub-check (and hence the overall
/// verdict) inconclusive, never false.
pub fn verify_theorem(
    input: &TheoremInput,
    result: &GammaResult,
    cfg: &GbConfig,
) -> Result<TheoremReport, ConstructError> {
    input.validate()?;
    let mut verdict = Verdict::Pass;

    let mut gamma_inclusions = Vec::with_capacity(result.gammas.len());
    for (idx, gamma) in result.gammas.iter().enumerate() {
        let in_mu_ideal = radical_check(gamma, &input.mu, cfg)?;
        let in_nu_ideal = radical_check(gamma, &input.nu, cfg)?;
        verdict = verdict.and(in_mu_ideal).and(in_nu_ideal);
        gamma_inclusions.push(GammaInclusion { index: idx + 1, in_mu_ideal, in_nu_ideal });
    }

    let mut product_inclusions = Vec::with_capacity(input.u() * input.v());
    for h in 1..=input.u() {
        for k in 1..=input.v() {
            let product = input.mu[h - 1].mul(&input.nu[k - 1]);
            let v = radical_check(&product, &result.gammas, cfg)?;
            verdict = verdict.and(v);
            product_inclusions.push(ProductInclusion { mu_index: h, nu_index: k, verdict: v });
        }
    }

    Ok(TheoremReport { verdict, gamma_inclusions, product_inclusions })
}

// ---------------------------------------------------------------------------
// Chains of nested ideals
// ---------------------------------------------------------------------------

/// Parameters for the chain construction: variables x_1..x_t and
/// y_1..y_{a_h}, cut points 0 = a_0 < a_1 < ... < a_h <= t, and the ideals
///
/// ```text
/// I_0 = (x_1, ..., x_t),
/// I_i = (y_1, ..., y_{a_i}, x_{a_i+1}, ..., x_t).
/// ```
#[derive(Clone, Debug)]
pub struct ChainInput {
    t: usize,
    a: Vec<usize>,
    ring: VarSet,
}

impl ChainInput {
    pub fn new(t: usize, h: usize, a: Vec<usize>) -> Result<ChainInput, ConstructError> {
        if t == 0 {
            return Err(ConstructError::BadRange { what: "t must be at least 1".into() });
        }
        if h > t {
            return Err(ConstructError::BadRange {
                what: format!("h = {} exceeds t = {}", h, t),
            });
        }
        if a.len() != h {
            return Err(ConstructError::BadRange {
                what: format!("expected {} cut points, got {}", h, a.len()),
            });
        }
        let mut prev = 0usize;
        for (i, &ai) in a.iter().enumerate() {
            if ai <= prev {
                return Err(ConstructError::BadRange {
                    what: format!("cut points must increase strictly from 0; a_{} = {}", i + 1, ai),
                });
            }
            prev = ai;
        }
        if prev > t {
            return Err(ConstructError::BadRange {
                what: format!("last cut point {} exceeds t = {}", prev, t),
            });
        }
        let mut names: Vec<String> = (1..=t).map(|i| format!("x{}", i)).collect();
        names.extend((1..=prev).map(|j| format!("y{}", j)));
        let ring = VarSet::new(names).expect("generated names are distinct");
        Ok(ChainInput { t, a, ring })
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn h(&self) -> usize {
        self.a.len()
    }

    pub fn cut_points(&self) -> &[usize] {
        &self.a
    }

    pub fn ring(&self) -> &VarSet {
        &self.ring
    }

    fn last_cut(&self) -> usize {
        self.a.last().copied().unwrap_or(0)
    }

    /// x_i, 1-based.
    pub fn x(&self, i: usize) -> Polynomial {
        assert!(1 <= i && i <= self.t);
        Polynomial::var(&self.ring, i - 1)
    }

    /// y_j, 1-based.
    pub fn y(&self, j: usize) -> Polynomial {
        assert!(1 <= j && j <= self.last_cut());
        Polynomial::var(&self.ring, self.t + j - 1)
    }

    /// The monomial ideals I_0, ..., I_h of the chain.
    pub fn ideals(&self) -> Vec<MonomialIdeal> {
        let n = self.ring.len();
        let mut out = Vec::with_capacity(self.h() + 1);
        let i0 = (0..self.t).map(|i| Monomial::var(i, n)).collect();
        out.push(MonomialIdeal::new(&self.ring, i0));
        for &ai in &self.a {
            let gens = (0..ai)
                .map(|j| Monomial::var(self.t + j, n))
                .chain((ai..self.t).map(|i| Monomial::var(i, n)))
                .collect();
            out.push(MonomialIdeal::new(&self.ring, gens));
        }
        out
    }

    /// The intersection of all chain ideals as a monomial ideal.
    pub fn intersection(&self) -> MonomialIdeal {
        let mut ideals = self.ideals().into_iter();
        let first = ideals.next().expect("chain has at least I_0");
        ideals.fold(first, |acc, i| acc.intersect(&i).expect("same ring"))
    }
}

/// Runs the construction along the chain: level zero is (x_1, ..., x_t);
/// each level feeds the prefix of the previous output and the next block of
/// y's back into `build_gamma`, then re-appends the unused x tail. The
/// output has t + a_h - h elements and generates the full intersection up
/// to radical.
pub fn build_chain(input: &ChainInput, cfg: &GbConfig) -> Result<Vec<Polynomial>, ConstructError> {
    let t = input.t;
    let mut gens: Vec<Polynomial> = (1..=t).map(|i| input.x(i)).collect();
    let mut a_prev = 0usize;
    for (level, &a_cur) in input.a.iter().enumerate() {
        let level = level + 1;
        let u = a_cur + a_prev + 1 - level;
        debug_assert!(u <= gens.len());
        let mu = gens[..u].to_vec();
        let nu: Vec<Polynomial> = (1..=a_cur).map(|j| input.y(j)).collect();
        let step = build_gamma(&TheoremInput::new(&input.ring, mu, nu, a_prev), cfg)?;
        let mut next = step.gammas;
        debug_assert_eq!(next.len(), 2 * a_cur - level);
        for i in (2 * a_cur - level + 1)..=(t + a_cur - level) {
            next.push(input.x(i - a_cur + level));
        }
        gens = next;
        a_prev = a_cur;
    }
    debug_assert_eq!(gens.len(), t + input.last_cut() - input.h());
    Ok(gens)
}

/// The full flag instance: h = t and a_i = i gives exactly t generators for
/// the (t+1)-fold intersection, so the intersection is a set-theoretic
/// complete intersection (its height is also t).
pub fn build_stci(t: usize, cfg: &GbConfig) -> Result<(ChainInput, Vec<Polynomial>), ConstructError> {
    let input = ChainInput::new(t, t, (1..=t).collect())?;
    let gens = build_chain(&input, cfg)?;
    Ok((input, gens))
}

/// The simplicial complex whose face ideal is the full-flag intersection:
/// facets F_i = {x_1, ..., x_i, y_{i+1}, ..., y_t} for i = 0..t. In this
/// order, every facet meets the union of the earlier ones in a single
/// codimension-one face, so the listed order is a shelling.
pub fn stci_complex(t: usize) -> Result<crate::complex::SimplicialComplex, ConstructError> {
    let input = ChainInput::new(t, t, (1..=t).collect())?;
    let ring = input.ring().clone();
    let facets: Vec<Vec<usize>> = (0..=t)
        .map(|i| {
            (0..i).chain((i..t).map(|yj| t + yj)).collect()
        })
        .collect();
    crate::complex::SimplicialComplex::new(&ring, facets)
        .map_err(|e| ConstructError::BadRange { what: e.to_string() })
}
