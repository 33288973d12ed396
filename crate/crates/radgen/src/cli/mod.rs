//! Batch front end: job files in, deterministic JSON reports out.
//!
//! A job is one command plus a JSON payload file; the report is a single
//! JSON document on stdout (or `--output`), byte-identical across runs for
//! the same job and build. Timing goes to stderr so it cannot perturb the
//! report. Exit codes: 0 all verdicts pass, 1 some verdict failed, 2 bad
//! input, 3 budget exceeded.

mod commands;
mod reproduce;

use std::fmt;
use std::fs;
use std::path::Path;

use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::construct::Verdict;
use crate::groebner::{FieldMode, GbConfig, GbError};
use crate::poly::Polynomial;
use crate::ring::VarSet;

pub use commands::{run_command, FileCommand};
pub use reproduce::run_reproduce;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Anything that stops a job: bad input (exit 2) or an exhausted budget
/// (exit 3).
#[derive(Debug)]
pub enum JobError {
    Input(String),
    Budget(String),
}

impl JobError {
    pub fn exit_code(&self) -> i32 {
        match self {
            JobError::Input(_) => EXIT_INPUT,
            JobError::Budget(_) => EXIT_BUDGET,
        }
    }

    pub fn input(msg: impl Into<String>) -> JobError {
        JobError::Input(msg.into())
    }
}

impl fmt::Display for JobError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JobError::Input(m) => write!(f, "{}", m),
            JobError::Budget(m) => {
                write!(f, "{}; consider --field mod:32003 or a larger --max-steps", m)
            }
        }
    }
}

impl From<GbError> for JobError {
    fn from(e: GbError) -> JobError {
        match e {
            GbError::BudgetExceeded { .. } => JobError::Budget(e.to_string()),
            other => JobError::Input(other.to_string()),
        }
    }
}

impl From<crate::construct::ConstructError> for JobError {
    fn from(e: crate::construct::ConstructError) -> JobError {
        match e {
            crate::construct::ConstructError::Gb(g) => g.into(),
            other => JobError::Input(other.to_string()),
        }
    }
}

/// The payload file: one JSON document whose fields the commands pick from.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputFile {
    pub ring: Option<Vec<String>>,
    pub command: Option<String>,
    pub ideals: Option<Vec<Vec<String>>>,
    pub parts: Option<Vec<Vec<String>>>,
    pub exponents: Option<Vec<Vec<u32>>>,
    pub s: Option<usize>,
    pub t: Option<usize>,
    pub h: Option<usize>,
    pub a: Option<Vec<usize>>,
    pub p: Option<u64>,
    /// Run the relevant radical-equality oracle on the constructed output.
    #[serde(default)]
    pub verify: bool,
}

impl InputFile {
    pub fn load(path: &Path) -> Result<InputFile, JobError> {
        let text = fs::read_to_string(path)
            .map_err(|e| JobError::input(format!("cannot read {}: {}", path.display(), e)))?;
        serde_json::from_str(&text)
            .map_err(|e| JobError::input(format!("malformed input file {}: {}", path.display(), e)))
    }

    pub fn ring(&self) -> Result<VarSet, JobError> {
        let names = self
            .ring
            .as_ref()
            .ok_or_else(|| JobError::input("input file is missing `ring`"))?;
        VarSet::new(names.iter().cloned())
            .map_err(|e| JobError::input(format!("bad ring: {}", e)))
    }

    pub fn parse_ideal(&self, ring: &VarSet, index: usize) -> Result<Vec<Polynomial>, JobError> {
        let ideals = self
            .ideals
            .as_ref()
            .ok_or_else(|| JobError::input("input file is missing `ideals`"))?;
        let gens = ideals.get(index).ok_or_else(|| {
            JobError::input(format!("input file needs at least {} ideals", index + 1))
        })?;
        gens.iter()
            .map(|text| {
                Polynomial::parse(text, ring).map_err(|e| {
                    JobError::input(format!("in generator `{}`: {}", text, e))
                })
            })
            .collect()
    }

    pub fn num_ideals(&self) -> usize {
        self.ideals.as_ref().map_or(0, |v| v.len())
    }
}

/// Field mode and budget resolved from the command line (and the file's
/// optional `p` fallback).
#[derive(Clone, Copy, Debug)]
pub struct JobOptions {
    pub mode: FieldMode,
    pub max_steps: u64,
}

impl JobOptions {
    pub fn config(&self) -> GbConfig {
        GbConfig {
            mode: self.mode,
            max_steps: self.max_steps,
            ..GbConfig::default()
        }
    }
}

/// Parses `rat` or `mod:<p>`; the modulus must be a prime.
pub fn parse_field_mode(text: &str) -> Result<FieldMode, JobError> {
    if text == "rat" || text == "rational" {
        return Ok(FieldMode::Rational);
    }
    if let Some(p) = text.strip_prefix("mod:") {
        let p: u64 = p
            .parse()
            .map_err(|_| JobError::input(format!("bad modulus in `{}`", text)))?;
        if p > (1 << 31) {
            return Err(JobError::input(format!("modulus {} exceeds 2^31", p)));
        }
        if !is_prime(p) {
            return Err(JobError::input(format!("modulus {} is not prime", p)));
        }
        return Ok(FieldMode::Prime(p));
    }
    Err(JobError::input(format!(
        "bad field `{}`: expected `rat` or `mod:<prime>`",
        text
    )))
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Accumulates a report; serialization order of the envelope keys is fixed
/// by serde_json's sorted maps, verdict order by insertion.
pub struct Report {
    command: String,
    mode: FieldMode,
    outputs: Map<String, Value>,
    verdicts: Vec<(String, Verdict)>,
}

impl Report {
    pub fn new(command: &str, mode: FieldMode) -> Report {
        Report {
            command: command.to_string(),
            mode,
            outputs: Map::new(),
            verdicts: Vec::new(),
        }
    }

    pub fn output(&mut self, key: &str, value: Value) {
        self.outputs.insert(key.to_string(), value);
    }

    pub fn verdict(&mut self, name: &str, v: Verdict) {
        self.verdicts.push((name.to_string(), v));
    }

    pub fn overall(&self) -> Verdict {
        self.verdicts
            .iter()
            .fold(Verdict::Pass, |acc, (_, v)| acc.and(*v))
    }

    pub fn exit_code(&self) -> i32 {
        match self.overall() {
            Verdict::Pass => EXIT_PASS,
            Verdict::Fail => EXIT_FAIL,
            Verdict::Inconclusive => EXIT_BUDGET,
        }
    }

    pub fn to_json(&self) -> Value {
        let verdicts: Vec<Value> = self
            .verdicts
            .iter()
            .map(|(name, v)| json!({ "name": name, "result": v.to_string() }))
            .collect();
        json!({
            "command": self.command,
            "field_mode": self.mode.to_string(),
            "outputs": Value::Object(self.outputs.clone()),
            "verdicts": verdicts,
        })
    }

    /// The exact bytes a run prints: pretty JSON plus a trailing newline.
    pub fn render(&self) -> String {
        let mut text = serde_json::to_string_pretty(&self.to_json()).expect("report serializes");
        text.push('\n');
        text
    }
}

pub fn poly_strings(polys: &[Polynomial]) -> Value {
    Value::Array(
        polys
            .iter()
            .map(|p| Value::String(p.to_string()))
            .collect(),
    )
}

pub fn string_list(items: &[String]) -> Value {
    Value::Array(items.iter().map(|s| Value::String(s.clone())).collect())
}
