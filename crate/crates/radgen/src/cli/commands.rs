//! The file-driven commands.

use serde_json::{json, Value};

use super::{poly_strings, string_list, InputFile, JobError, JobOptions, Report};
use crate::construct::{
    ara_upper_bound, build_chain, build_gamma, build_stci, verify_theorem, ChainInput,
    TheoremInput, Verdict,
};
use crate::groebner::{radical_equal, RadicalReport};
use crate::ideals::MonomialIdeal;
use crate::poly::Polynomial;
use crate::svlemma::{validate_partition, PartitionSystem, SvViolation};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FileCommand {
    Construct,
    Verify,
    Intersect,
    MinimalPrimes,
    Height,
    Stci,
    Chain,
    SvCombine,
}

impl FileCommand {
    pub fn name(&self) -> &'static str {
        match self {
            FileCommand::Construct => "construct",
            FileCommand::Verify => "verify",
            FileCommand::Intersect => "intersect",
            FileCommand::MinimalPrimes => "minimal-primes",
            FileCommand::Height => "height",
            FileCommand::Stci => "stci",
            FileCommand::Chain => "chain",
            FileCommand::SvCombine => "sv-combine",
        }
    }
}

/// Runs one command against a loaded payload file.
pub fn run_command(
    cmd: FileCommand,
    file: &InputFile,
    opts: &JobOptions,
) -> Result<Report, JobError> {
    if let Some(declared) = &file.command {
        if declared != cmd.name() {
            return Err(JobError::input(format!(
                "input file declares command `{}` but `{}` was invoked",
                declared,
                cmd.name()
            )));
        }
    }
    match cmd {
        FileCommand::Construct => construct(file, opts),
        FileCommand::Verify => verify(file, opts),
        FileCommand::Intersect => intersect(file, opts),
        FileCommand::MinimalPrimes => minimal_primes(file, opts),
        FileCommand::Height => height(file, opts),
        FileCommand::Stci => stci(file, opts),
        FileCommand::Chain => chain(file, opts),
        FileCommand::SvCombine => sv_combine(file, opts),
    }
}

fn provenance_json(result: &crate::construct::GammaResult) -> Value {
    Value::Array(
        result
            .provenance
            .iter()
            .map(|p| {
                json!({
                    "index": p.index,
                    "products": p.products.iter().map(|(h, k)| json!([h, k])).collect::<Vec<_>>(),
                    "carried_mu": p.carried_mu,
                })
            })
            .collect(),
    )
}

fn bool_verdict(ok: bool) -> Verdict {
    if ok {
        Verdict::Pass
    } else {
        Verdict::Fail
    }
}

fn radical_verdict(report: &RadicalReport) -> Verdict {
    bool_verdict(report.verdict)
}

fn failures_json(report: &RadicalReport) -> Value {
    Value::Array(
        report
            .failures
            .iter()
            .map(|f| {
                json!({
                    "generator": f.generator.to_string(),
                    "side": f.side.to_string(),
                })
            })
            .collect(),
    )
}

fn construct(file: &InputFile, opts: &JobOptions) -> Result<Report, JobError> {
    let ring = file.ring()?;
    let mu = file.parse_ideal(&ring, 0)?;
    let nu = file.parse_ideal(&ring, 1)?;
    let s = file
        .s
        .ok_or_else(|| JobError::input("`construct` needs the prefix length `s`"))?;
    let cfg = opts.config();
    let input = TheoremInput::new(&ring, mu, nu, s);
    let built = build_gamma(&input, &cfg)?;
    let bound = ara_upper_bound(input.u(), input.v(), s)?;

    let mut report = Report::new("construct", opts.mode);
    report.output("ring", string_list(ring.names()));
    report.output("gammas", poly_strings(&built.gammas));
    report.output("count", json!(built.r()));
    report.output("ara_upper_bound", json!(bound));
    report.output("provenance", provenance_json(&built));
    report.verdict("prefix_containment_mu", bool_verdict(built.prefix_mu));
    report.verdict("prefix_containment_nu", bool_verdict(built.prefix_nu));
    if file.verify {
        let theorem = verify_theorem(&input, &built, &cfg)?;
        report.verdict("radical_equality", theorem.verdict);
    }
    Ok(report)
}

fn verify(file: &InputFile, opts: &JobOptions) -> Result<Report, JobError> {
    let ring = file.ring()?;
    let left = file.parse_ideal(&ring, 0)?;
    let right = file.parse_ideal(&ring, 1)?;
    let cfg = opts.config();
    let outcome = radical_equal(&left, &right, &cfg)?;

    let mut report = Report::new("verify", opts.mode);
    report.output("ring", string_list(ring.names()));
    report.output("left", poly_strings(&left));
    report.output("right", poly_strings(&right));
    report.output("failures", failures_json(&outcome));
    report.verdict("radical_equal", radical_verdict(&outcome));
    Ok(report)
}

fn monomial_ideal(file: &InputFile, ring: &crate::ring::VarSet, index: usize) -> Result<MonomialIdeal, JobError> {
    let polys = file.parse_ideal(ring, index)?;
    MonomialIdeal::from_polys(ring, &polys).map_err(|e| JobError::input(e.to_string()))
}

fn intersect(file: &InputFile, opts: &JobOptions) -> Result<Report, JobError> {
    let ring = file.ring()?;
    let n = file.num_ideals();
    if n < 2 {
        return Err(JobError::input("`intersect` needs at least two ideals"));
    }
    let mut acc = monomial_ideal(file, &ring, 0)?;
    for i in 1..n {
        let next = monomial_ideal(file, &ring, i)?;
        acc = acc.intersect(&next).map_err(|e| JobError::input(e.to_string()))?;
    }
    let mut report = Report::new("intersect", opts.mode);
    report.output("ring", string_list(ring.names()));
    report.output("generators", string_list(&acc.gen_strings()));
    report.output("count", json!(acc.num_gens()));
    Ok(report)
}

fn minimal_primes(file: &InputFile, opts: &JobOptions) -> Result<Report, JobError> {
    let ring = file.ring()?;
    let ideal = monomial_ideal(file, &ring, 0)?;
    let primes = ideal
        .minimal_primes()
        .map_err(|e| JobError::input(e.to_string()))?;
    let mut report = Report::new("minimal-primes", opts.mode);
    report.output("ring", string_list(ring.names()));
    report.output("generators", string_list(&ideal.gen_strings()));
    report.output(
        "primes",
        Value::Array(primes.name_lists().iter().map(|p| string_list(p)).collect()),
    );
    report.output("count", json!(primes.len()));
    Ok(report)
}

fn height(file: &InputFile, opts: &JobOptions) -> Result<Report, JobError> {
    let ring = file.ring()?;
    let ideal = monomial_ideal(file, &ring, 0)?;
    let h = ideal.height().map_err(|e| JobError::input(e.to_string()))?;
    let mut report = Report::new("height", opts.mode);
    report.output("ring", string_list(ring.names()));
    report.output("generators", string_list(&ideal.gen_strings()));
    report.output("height", json!(h.height));
    report.output("pure", json!(h.pure));
    Ok(report)
}

fn stci(file: &InputFile, opts: &JobOptions) -> Result<Report, JobError> {
    let t = file
        .t
        .ok_or_else(|| JobError::input("`stci` needs the flag length `t`"))?;
    let cfg = opts.config();
    let (input, gens) = build_stci(t, &cfg)?;
    let meet = input.intersection();

    let mut report = Report::new("stci", opts.mode);
    report.output("t", json!(t));
    report.output("ring", string_list(input.ring().names()));
    report.output("generators", poly_strings(&gens));
    report.output("count", json!(gens.len()));
    report.output("intersection", string_list(&meet.gen_strings()));
    if file.verify {
        let outcome = radical_equal(&gens, &meet.to_polys(), &cfg)?;
        report.verdict("radical_equal", radical_verdict(&outcome));
        let h = meet.height().map_err(|e| JobError::input(e.to_string()))?;
        report.output("height", json!(h.height));
        report.output("pure", json!(h.pure));
        report.verdict("height_equals_count", bool_verdict(h.pure && h.height == gens.len()));
    }
    Ok(report)
}

fn chain(file: &InputFile, opts: &JobOptions) -> Result<Report, JobError> {
    let t = file
        .t
        .ok_or_else(|| JobError::input("`chain` needs `t`"))?;
    let h = file
        .h
        .ok_or_else(|| JobError::input("`chain` needs `h`"))?;
    let a = file
        .a
        .clone()
        .ok_or_else(|| JobError::input("`chain` needs the cut points `a`"))?;
    let cfg = opts.config();
    let input = ChainInput::new(t, h, a)?;
    let gens = build_chain(&input, &cfg)?;
    let meet = input.intersection();

    let mut report = Report::new("chain", opts.mode);
    report.output("t", json!(t));
    report.output("h", json!(h));
    report.output("a", json!(input.cut_points()));
    report.output("ring", string_list(input.ring().names()));
    report.output("generators", poly_strings(&gens));
    report.output("count", json!(gens.len()));
    report.output("intersection", string_list(&meet.gen_strings()));
    if file.verify {
        let outcome = radical_equal(&gens, &meet.to_polys(), &cfg)?;
        report.verdict("radical_equal", radical_verdict(&outcome));
    }
    Ok(report)
}

fn sv_combine(file: &InputFile, opts: &JobOptions) -> Result<Report, JobError> {
    let ring = file.ring()?;
    let part_texts = file
        .parts
        .as_ref()
        .ok_or_else(|| JobError::input("`sv-combine` needs `parts`"))?;
    let mut parts: Vec<Vec<(Polynomial, u32)>> = Vec::with_capacity(part_texts.len());
    for (i, part) in part_texts.iter().enumerate() {
        let mut out = Vec::with_capacity(part.len());
        for (j, text) in part.iter().enumerate() {
            let poly = Polynomial::parse(text, &ring)
                .map_err(|e| JobError::input(format!("in part {} element `{}`: {}", i + 1, text, e)))?;
            let e = match &file.exponents {
                None => 1,
                Some(rows) => *rows
                    .get(i)
                    .and_then(|row| row.get(j))
                    .ok_or_else(|| JobError::input("`exponents` must mirror the shape of `parts`"))?,
            };
            if e > 64 {
                return Err(JobError::input(format!(
                    "exponent {} in part {} is over the supported bound 64",
                    e,
                    i + 1
                )));
            }
            out.push((poly, e));
        }
        parts.push(out);
    }
    let system = PartitionSystem::with_exponents(&ring, parts)
        .map_err(|e| JobError::input(e.to_string()))?;
    let cfg = opts.config();
    let validation = validate_partition(&system, &cfg)?;

    let mut report = Report::new("sv-combine", opts.mode);
    report.output("ring", string_list(ring.names()));
    report.output(
        "violations",
        Value::Array(
            validation
                .violations
                .iter()
                .map(|v| match v {
                    SvViolation::FirstPartNotSingleton { found } => {
                        json!({ "kind": "first_part_not_singleton", "found": found })
                    }
                    SvViolation::DuplicateElement { part, poly } => {
                        json!({ "kind": "duplicate_element", "part": part + 1, "element": poly.to_string() })
                    }
                    SvViolation::PairProductNotInEarlierRadical { part, p, q } => json!({
                        "kind": "pair_product_not_in_earlier_radical",
                        "part": part + 1,
                        "p": p.to_string(),
                        "q": q.to_string(),
                    }),
                })
                .collect(),
        ),
    );
    report.verdict("partition_valid", bool_verdict(validation.ok()));
    if validation.ok() {
        let qs = crate::svlemma::combine(&system, &cfg).map_err(|e| match e {
            crate::svlemma::SvError::Gb(g) => JobError::from(g),
            other => JobError::input(other.to_string()),
        })?;
        report.output("combined", poly_strings(&qs));
        if file.verify {
            let outcome = radical_equal(&system.union(), &qs, &cfg)?;
            report.verdict("radical_equal", radical_verdict(&outcome));
        }
    }
    Ok(report)
}
