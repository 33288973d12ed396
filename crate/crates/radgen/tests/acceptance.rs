//! Acceptance suite: one test per shipped criterion, each printing a
//! pass/fail line and holding the stated tolerances and runtime budgets.

mod common;

use std::time::{Duration, Instant};

use serde_json::Value;

use radgen::cli::{run_reproduce, JobOptions, Report};
use radgen::construct::{
    ara_upper_bound, build_gamma, build_stci, stci_complex, verify_theorem, ChainInput,
    TheoremInput, Verdict,
};
use radgen::groebner::{buchberger, radical_equal, FieldMode, GbConfig, DEFAULT_MAX_STEPS};
use radgen::poly::Polynomial;
use radgen::svlemma::{combine, validate_partition};
use radgen::VarSet;

fn rational() -> JobOptions {
    JobOptions { mode: FieldMode::Rational, max_steps: DEFAULT_MAX_STEPS }
}

fn all_verdicts_pass(report: &Report) -> bool {
    report.overall() == Verdict::Pass
}

fn outputs(report: &Report) -> Value {
    report.to_json()["outputs"].clone()
}

fn strings_at(v: &Value, pointer: &str) -> Vec<String> {
    v.pointer(pointer)
        .and_then(Value::as_array)
        .expect("array output")
        .iter()
        .map(|s| s.as_str().expect("string entry").to_string())
        .collect()
}

fn canonical(ring: &VarSet, texts: &[&str]) -> Vec<String> {
    texts
        .iter()
        .map(|t| Polynomial::parse(t, ring).unwrap().to_string())
        .collect()
}

fn finish(name: &str, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    assert!(
        elapsed < budget,
        "{} took {:.2}s, over the {:.0}s budget",
        name,
        elapsed.as_secs_f64(),
        budget.as_secs_f64()
    );
    println!("{}: PASS in {:.2}s", name, elapsed.as_secs_f64());
}

#[test]
fn criterion_1_example1_reproduction() {
    let started = Instant::now();
    let report = run_reproduce("example1", 0, 4, &rational()).expect("runs");
    assert!(all_verdicts_pass(&report), "verdicts: {:?}", report.to_json()["verdicts"]);

    let out = outputs(&report);
    let ring = VarSet::new((1..=7).map(|i| format!("x{}", i))).unwrap();
    assert_eq!(
        strings_at(&out, "/stage1/gammas"),
        canonical(&ring, &["x1*x5", "x1*x2 + x3*x5", "x3*x4 + x5*x6"])
    );
    assert_eq!(
        strings_at(&out, "/stage2/gammas"),
        canonical(
            &ring,
            &[
                "(x3*x4 + x5*x6)*x5",
                "x1*x5 + (x3*x4 + x5*x6)*x2",
                "x1*x2 + x3*x5 + (x3*x4 + x5*x6)*x7",
            ]
        )
    );
    assert_eq!(out["height"], 3);
    assert_eq!(out["pure"], true);
    assert_eq!(out["ara_upper_bound"], 3);
    assert_eq!(out["minimal_primes"].as_array().unwrap().len(), 6);
    finish("criterion 1 (example1 reproduction)", started, Duration::from_secs(10));
}

#[test]
fn criterion_2_example2_reproduction() {
    let started = Instant::now();
    let report = run_reproduce("example2", 0, 4, &rational()).expect("runs");
    assert!(all_verdicts_pass(&report), "verdicts: {:?}", report.to_json()["verdicts"]);

    let out = outputs(&report);
    let ring = VarSet::new((1..=6).map(|i| format!("x{}", i))).unwrap();
    assert_eq!(
        strings_at(&out, "/stage1/gammas"),
        canonical(
            &ring,
            &["x1*x5", "x2*x5 + x1*x6", "x1*x4 + x3*x5 + x2*x6", "x3*x6"]
        )
    );
    assert_eq!(out["ara_upper_bound"], 4);
    assert_eq!(out["height"], 3);
    finish("criterion 2 (example2 reproduction)", started, Duration::from_secs(10));
}

#[test]
fn criterion_3_example3_reproduction() {
    let started = Instant::now();
    // Rational mode is the binding requirement; the prime-field run must
    // agree.
    let report = run_reproduce("example3", 0, 4, &rational()).expect("runs");
    assert!(all_verdicts_pass(&report), "verdicts: {:?}", report.to_json()["verdicts"]);

    let out = outputs(&report);
    assert_eq!(out["minimal_generator_count"], 15);
    let ring = VarSet::new((1..=10).map(|i| format!("x{}", i))).unwrap();
    assert_eq!(
        strings_at(&out, "/stage2/gammas"),
        canonical(
            &ring,
            &[
                "(x2*x5*x7 + x1*x3*x6)*x2",
                "(x2*x5*x7 + x1*x3*x6)*x9 + (x1*x4 + x2*x5*x8 + x3*x6*x7)*x2",
                "(x2*x5*x7 + x1*x3*x6)*x10 + (x1*x4 + x2*x5*x8 + x3*x6*x7)*x9 + x2*x3*x6*x8",
                "x1*x2*x5 + (x1*x4 + x2*x5*x8 + x3*x6*x7)*x10 + x3*x6*x8*x9",
                "x3*x6*x8*x10",
            ]
        )
    );

    let modular = JobOptions { mode: FieldMode::Prime(32003), max_steps: DEFAULT_MAX_STEPS };
    let mod_report = run_reproduce("example3", 0, 4, &modular).expect("runs");
    assert!(all_verdicts_pass(&mod_report));
    finish("criterion 3 (example3 reproduction)", started, Duration::from_secs(600));
}

#[test]
fn criterion_4_full_flag_family() {
    let started = Instant::now();
    let cfg = GbConfig::default();
    for t in 1..=4usize {
        let (input, gens) = build_stci(t, &cfg).unwrap();
        assert_eq!(gens.len(), t, "t = {}", t);
        let meet = input.intersection();
        let equal = radical_equal(&gens, &meet.to_polys(), &cfg).unwrap();
        assert!(equal.verdict, "t = {}: failures {:?}", t, equal.failures);
        let height = meet.height().unwrap();
        assert_eq!(height.height, t);
        assert!(height.pure, "t = {}", t);
    }
    for t in 2..=5usize {
        let complex = stci_complex(t).unwrap();
        let order: Vec<usize> = (0..=t).collect();
        assert!(complex.check_shelling(&order).unwrap(), "t = {}", t);
    }
    finish("criterion 4 (full-flag family)", started, Duration::from_secs(60));
}

#[test]
fn criterion_5_theorem_property_suite() {
    let started = Instant::now();
    let cfg = GbConfig::default();
    let mut rng = common::rng(20_240_817);
    let mut seen_s_zero = false;
    let mut exact_bridge = 0usize;
    for trial in 0..100 {
        let input = common::random_theorem_instance(&mut rng);
        seen_s_zero |= input.s == 0;
        let built = build_gamma(&input, &cfg)
            .unwrap_or_else(|e| panic!("trial {}: build failed: {}", trial, e));

        // Count law.
        assert_eq!(
            built.r(),
            ara_upper_bound(input.u(), input.v(), input.s).unwrap(),
            "trial {}", trial
        );
        // Prefix containments.
        assert!(built.prefix_mu && built.prefix_nu, "trial {}", trial);
        // Summand partitions validate; with unit exponents they combine
        // back to the exact generator list whenever no summands merged.
        if let Some(system) = common::summand_partition(&input, &built) {
            let validation = validate_partition(&system, &cfg).unwrap();
            assert!(validation.ok(), "trial {}: {:?}", trial, validation.violations);
            assert_eq!(combine(&system, &cfg).unwrap(), built.gammas, "trial {}", trial);
            exact_bridge += 1;
        }
        // The radical equality itself.
        let theorem = verify_theorem(&input, &built, &cfg).unwrap();
        assert_eq!(theorem.verdict, Verdict::Pass, "trial {}: {:?}", trial, theorem);
    }
    assert!(seen_s_zero, "the sample should include zero-prefix instances");
    assert!(exact_bridge >= 80, "only {} duplicate-free instances", exact_bridge);
    finish("criterion 5 (theorem property suite)", started, Duration::from_secs(300));
}

#[test]
fn criterion_6_lemma_property_suite() {
    let started = Instant::now();
    let cfg = GbConfig::default();
    let mut rng = common::rng(61_803);
    let mut nontrivial_exponents = 0usize;
    for trial in 0..50 {
        let system = common::random_partition_system(&mut rng);
        let validation = validate_partition(&system, &cfg).unwrap();
        assert!(validation.ok(), "trial {}: {:?}", trial, validation.violations);
        let qs = combine(&system, &cfg).unwrap();
        let equal = radical_equal(&system.union(), &qs, &cfg).unwrap();
        assert!(equal.verdict, "trial {}: failures {:?}", trial, equal.failures);
        if system.parts().iter().any(|p| p.iter().any(|(_, e)| *e > 1)) {
            nontrivial_exponents += 1;
        }
    }
    assert!(nontrivial_exponents >= 10, "only {} systems had exponent 2", nontrivial_exponents);
    finish("criterion 6 (lemma property suite)", started, Duration::from_secs(300));
}

/// The generator lists whose bases back criteria 1 through 4.
fn flagship_instances() -> Vec<(VarSet, Vec<Polynomial>, Vec<Polynomial>)> {
    let cfg = GbConfig::default();
    let mut out = Vec::new();

    // Seven-variable two-stage instance.
    let ring = VarSet::new((1..=7).map(|i| format!("x{}", i))).unwrap();
    let parse = |r: &VarSet, ts: &[&str]| -> Vec<Polynomial> {
        ts.iter().map(|t| Polynomial::parse(t, r).unwrap()).collect()
    };
    let stage1 = build_gamma(
        &TheoremInput::new(
            &ring,
            parse(&ring, &["x1*x2", "x3*x4", "x5"]),
            parse(&ring, &["x1", "x3", "x6"]),
            2,
        ),
        &cfg,
    )
    .unwrap();
    let stage2 = build_gamma(
        &TheoremInput::new(&ring, stage1.gammas.clone(), parse(&ring, &["x5", "x2", "x7"]), 2),
        &cfg,
    )
    .unwrap();
    let meet = parse(
        &ring,
        &["x1*x2", "x1*x5", "x3*x5", "x5*x6", "x3*x4*x7", "x2*x3*x4"],
    );
    out.push((ring.clone(), meet, stage2.gammas));

    // Six-variable one-stage instance.
    let ring = VarSet::new((1..=6).map(|i| format!("x{}", i))).unwrap();
    let built = build_gamma(
        &TheoremInput::new(
            &ring,
            parse(&ring, &["x1*x4", "x5", "x6"]),
            parse(&ring, &["x1", "x2", "x3"]),
            1,
        ),
        &cfg,
    )
    .unwrap();
    let meet = parse(
        &ring,
        &["x1*x4", "x1*x5", "x1*x6", "x2*x5", "x2*x6", "x3*x5", "x3*x6"],
    );
    out.push((ring.clone(), meet, built.gammas));

    // Ten-variable two-stage instance.
    let ring = VarSet::new((1..=10).map(|i| format!("x{}", i))).unwrap();
    let stage1 = build_gamma(
        &TheoremInput::new(
            &ring,
            parse(&ring, &["x1*x4", "x2*x5", "x3*x6"]),
            parse(&ring, &["x1", "x7", "x8"]),
            1,
        ),
        &cfg,
    )
    .unwrap();
    let stage2 = build_gamma(
        &TheoremInput::new(&ring, stage1.gammas.clone(), parse(&ring, &["x2", "x9", "x10"]), 1),
        &cfg,
    )
    .unwrap();
    let f1 = radgen::ideals::MonomialIdeal::from_polys(&ring, &parse(&ring, &["x1*x4", "x2*x5", "x3*x6"])).unwrap();
    let f2 = radgen::ideals::MonomialIdeal::from_polys(&ring, &parse(&ring, &["x1", "x7", "x8"])).unwrap();
    let f3 = radgen::ideals::MonomialIdeal::from_polys(&ring, &parse(&ring, &["x2", "x9", "x10"])).unwrap();
    let meet = f1.intersect(&f2).unwrap().intersect(&f3).unwrap();
    out.push((ring.clone(), meet.to_polys(), stage2.gammas));

    // Full-flag instances.
    for t in 1..=4usize {
        let (input, gens) = build_stci(t, &cfg).unwrap();
        let meet = input.intersection();
        out.push((input.ring().clone(), meet.to_polys(), gens));
    }
    out
}

#[test]
fn criterion_7_engine_self_checks() {
    let started = Instant::now();
    let rational = GbConfig::default();
    let modular = GbConfig::with_mode(FieldMode::Prime(32003));
    for (idx, (_, meet, gammas)) in flagship_instances().iter().enumerate() {
        for cfg in [&rational, &modular] {
            // Every computed basis re-verifies: all S-polynomials reduce to
            // zero and recompletion is a fixed point.
            let gb = buchberger(gammas, cfg).unwrap();
            assert!(gb.self_check(DEFAULT_MAX_STEPS).unwrap(), "instance {}", idx);
            let again = buchberger(&gb.basis, cfg).unwrap();
            assert_eq!(again.basis, gb.basis, "instance {}", idx);
            let gb_meet = buchberger(meet, cfg).unwrap();
            assert!(gb_meet.self_check(DEFAULT_MAX_STEPS).unwrap(), "instance {}", idx);
        }
        // The two coefficient fields agree on the flagship equalities.
        let r1 = radical_equal(meet, gammas, &rational).unwrap();
        let r2 = radical_equal(meet, gammas, &modular).unwrap();
        assert_eq!(r1.verdict, r2.verdict, "instance {}", idx);
        assert!(r1.verdict, "instance {}", idx);
    }
    finish("criterion 7 (engine self-checks)", started, Duration::from_secs(600));
}

#[test]
fn criterion_8_negative_control() {
    let started = Instant::now();
    let cfg = GbConfig::default();
    let ring = VarSet::new((1..=6).map(|i| format!("x{}", i))).unwrap();
    let parse = |ts: &[&str]| -> Vec<Polynomial> {
        ts.iter().map(|t| Polynomial::parse(t, &ring).unwrap()).collect()
    };
    let input = TheoremInput::new(
        &ring,
        parse(&["x1*x4", "x5", "x6"]),
        parse(&["x1", "x2", "x3"]),
        1,
    );
    let built = build_gamma(&input, &cfg).unwrap();
    assert_eq!(verify_theorem(&input, &built, &cfg).unwrap().verdict, Verdict::Pass);

    for drop in 0..built.gammas.len() {
        let mut mutilated = built.clone();
        mutilated.gammas.remove(drop);
        let report = verify_theorem(&input, &mutilated, &cfg).unwrap();
        assert_eq!(
            report.verdict,
            Verdict::Fail,
            "dropping generator {} should break the equality",
            drop + 1
        );
        assert!(
            report
                .product_inclusions
                .iter()
                .any(|p| p.verdict == Verdict::Fail),
            "some product must fail radical membership"
        );
    }
    finish("criterion 8 (negative control)", started, Duration::from_secs(60));
}

#[test]
fn chain_input_is_exercised_by_criterion_4() {
    // Sanity: the chain machinery behind criterion 4 accepts partial flags
    // and still verifies.
    let cfg = GbConfig::default();
    let input = ChainInput::new(2, 2, vec![1, 2]).unwrap();
    let gens = radgen::construct::build_chain(&input, &cfg).unwrap();
    assert_eq!(gens.len(), 2);
    let equal = radical_equal(&gens, &input.intersection().to_polys(), &cfg).unwrap();
    assert!(equal.verdict);
}
