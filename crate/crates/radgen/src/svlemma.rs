//! Partition systems: ordered families P_1, ..., P_r of polynomials where
//! the first part is a singleton and the product of any two distinct
//! elements of a later part falls into the radical of the union of the
//! earlier parts. For such a family, the combined elements
//! q_i = sum of p^e(p) over P_i generate the union up to radical, so a
//! validated r-part system caps the arithmetical rank of its union at r.

use std::fmt;

use crate::groebner::{radical_member, GbConfig, GbError};
use crate::poly::Polynomial;
use crate::ring::VarSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SvError {
    RingMismatch,
    EmptyPartsList,
    EmptyPart { part: usize },
    ZeroExponent { part: usize },
    Invalid(ValidationReport),
    Gb(GbError),
}

impl fmt::Display for SvError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SvError::RingMismatch => write!(f, "parts come from different rings"),
            SvError::EmptyPartsList => write!(f, "no parts given"),
            SvError::EmptyPart { part } => write!(f, "part {} is empty", part + 1),
            SvError::ZeroExponent { part } => {
                write!(f, "part {} carries an exponent below 1", part + 1)
            }
            SvError::Invalid(report) => {
                write!(f, "partition system fails validation: {:?}", report.violations)
            }
            SvError::Gb(e) => write!(f, "{}", e),
        }
    }
}

impl std::error::Error for SvError {}

impl From<GbError> for SvError {
    fn from(e: GbError) -> SvError {
        SvError::Gb(e)
    }
}

/// Ordered parts with one exponent e(p) >= 1 per element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionSystem {
    ring: VarSet,
    parts: Vec<Vec<(Polynomial, u32)>>,
}

impl PartitionSystem {
    /// All exponents one, the common case.
    pub fn new(ring: &VarSet, parts: Vec<Vec<Polynomial>>) -> Result<PartitionSystem, SvError> {
        PartitionSystem::with_exponents(
            ring,
            parts
                .into_iter()
                .map(|part| part.into_iter().map(|p| (p, 1)).collect())
                .collect(),
        )
    }

    pub fn with_exponents(
        ring: &VarSet,
        parts: Vec<Vec<(Polynomial, u32)>>,
    ) -> Result<PartitionSystem, SvError> {
        if parts.is_empty() {
            return Err(SvError::EmptyPartsList);
        }
        for (i, part) in parts.iter().enumerate() {
            if part.is_empty() {
                return Err(SvError::EmptyPart { part: i });
            }
            for (p, e) in part {
                if p.ring() != ring {
                    return Err(SvError::RingMismatch);
                }
                if *e == 0 {
                    return Err(SvError::ZeroExponent { part: i });
                }
            }
        }
        Ok(PartitionSystem { ring: ring.clone(), parts })
    }

    pub fn ring(&self) -> &VarSet {
        &self.ring
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[Vec<(Polynomial, u32)>] {
        &self.parts
    }

    /// All elements of all parts, in order (the generating set P).
    pub fn union(&self) -> Vec<Polynomial> {
        self.parts
            .iter()
            .flat_map(|part| part.iter().map(|(p, _)| p.clone()))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SvViolation {
    /// The first part must have exactly one element.
    FirstPartNotSingleton { found: usize },
    /// Parts are sets; a repeated polynomial is rejected, not summed twice.
    DuplicateElement { part: usize, poly: Polynomial },
    /// Some power of p*q must lie in the ideal of the earlier parts.
    PairProductNotInEarlierRadical { part: usize, p: Polynomial, q: Polynomial },
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<SvViolation>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the singleton condition on the first part structurally and the
/// pair condition on every later part through the radical-membership
/// oracle.
pub fn validate_partition(
    system: &PartitionSystem,
    cfg: &GbConfig,
) -> Result<ValidationReport, GbError> {
    let mut report = ValidationReport::default();
    if system.parts[0].len() != 1 {
        report.violations.push(SvViolation::FirstPartNotSingleton {
            found: system.parts[0].len(),
        });
    }
    for (i, part) in system.parts.iter().enumerate() {
        for (k, (p, _)) in part.iter().enumerate() {
            if part[..k].iter().any(|(q, _)| q == p) {
                report
                    .violations
                    .push(SvViolation::DuplicateElement { part: i, poly: p.clone() });
            }
        }
    }
    for (i, part) in system.parts.iter().enumerate().skip(1) {
        let earlier: Vec<Polynomial> = system.parts[..i]
            .iter()
            .flat_map(|part| part.iter().map(|(p, _)| p.clone()))
            .collect();
        for (a, (p, _)) in part.iter().enumerate() {
            for (q, _) in &part[a + 1..] {
                if p == q {
                    continue; // already reported as a duplicate
                }
                let product = p * q;
                if !radical_member(&product, &earlier, cfg)? {
                    report.violations.push(SvViolation::PairProductNotInEarlierRadical {
                        part: i,
                        p: p.clone(),
                        q: q.clone(),
                    });
                }
            }
        }
    }
    Ok(report)
}

/// The combined generators q_i = sum of p^e(p) over the i-th part. Only
/// valid systems may be combined; the union and the combined list then
/// generate the same radical.
pub fn combine(system: &PartitionSystem, cfg: &GbConfig) -> Result<Vec<Polynomial>, SvError> {
    let report = validate_partition(system, cfg)?;
    if !report.ok() {
        return Err(SvError::Invalid(report));
    }
    Ok(system
        .parts
        .iter()
        .map(|part| {
            let mut q = Polynomial::zero(&system.ring);
            for (p, e) in part {
                q = q.add(&p.pow(*e));
            }
            q
        })
        .collect())
}
