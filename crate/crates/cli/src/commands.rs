//! The four commands, each producing a JSON report and an exit status.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Map, Value};
use stablecx::{presentation_complex, random_complex, Complex, RandomCaps};

use crate::instance::{ComplexDecl, Instance, InstanceFile};
use crate::suites::{self, Check, Settings, Status};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Violation,
    Error,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Pass => 0,
            Outcome::Violation => 1,
            Outcome::Error => 2,
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Violation => "violation",
            Outcome::Error => "error",
        }
    }
}

pub struct Report {
    pub outcome: Outcome,
    pub body: Value,
}

fn envelope(command: &str, outcome: Outcome, fields: Value) -> Report {
    let mut body = Map::new();
    body.insert("schema_version".into(), json!(SCHEMA_VERSION));
    body.insert("command".into(), json!(command));
    body.insert("status".into(), json!(outcome.as_str()));
    if let Value::Object(extra) = fields {
        body.extend(extra);
    }
    Report { outcome, body: Value::Object(body) }
}

pub fn error_report(command: &str, line: Option<usize>, message: &str) -> Report {
    envelope(command, Outcome::Error, json!({ "error": { "line": line, "message": message } }))
}

fn algebra_json(inst: &Instance) -> Value {
    let a = &inst.file.algebra;
    json!({
        "name": a.name,
        "p": a.p,
        "dim": a.dim,
        "self_injective": a.self_injective,
        "gldim": a.gldim,
    })
}

fn has_failure(checks: &[Check]) -> bool {
    checks.iter().any(|c| c.status == Status::Fail)
}

fn outcome_of(failed: bool) -> Outcome {
    if failed {
        Outcome::Violation
    } else {
        Outcome::Pass
    }
}

/// Tallies of each status per suite, in first-seen order.
fn tally<'a>(checks: impl Iterator<Item = &'a Check>) -> Value {
    let mut order: Vec<&str> = Vec::new();
    let mut counts: Map<String, Value> = Map::new();
    for c in checks {
        if !counts.contains_key(c.suite) {
            order.push(c.suite);
            counts.insert(c.suite.to_string(), json!({ "pass": 0, "fail": 0, "skip": 0, "unknown": 0 }));
        }
        let key = match c.status {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
            Status::Unknown => "unknown",
        };
        let slot = &mut counts[c.suite][key];
        *slot = json!(slot.as_u64().unwrap_or(0) + 1);
    }
    Value::Array(order.into_iter().map(|s| json!({ "suite": s, "counts": counts[s] })).collect())
}

pub fn validate(inst: &Instance, s: Settings) -> Report {
    let flags = suites::flag_checks(&inst.ring, &inst.modules, s.depth);
    let modules: Vec<Value> = inst.modules.iter().map(|(name, m)| json!({ "name": name, "dim": m.dim() })).collect();
    let complexes: Vec<Value> = inst.complexes.iter().map(|(name, x)| json!({ "name": name, "lo": x.lo(), "ranks": x.ranks() })).collect();
    envelope(
        "validate",
        outcome_of(has_failure(&flags)),
        json!({ "algebra": algebra_json(inst), "modules": modules, "complexes": complexes, "flag_checks": flags }),
    )
}

/// Analyzes a named complex, or a named module together with its
/// presentation complex. `None` when the name is not declared.
pub fn analyze(inst: &Instance, object: &str, s: Settings) -> Option<Report> {
    let settings = json!({ "depth": s.depth, "nmax": s.nmax });
    if let Some(x) = inst.complex(object) {
        let (value, ok) = suites::analyze_complex(x, s);
        return Some(envelope(
            "analyze",
            outcome_of(!ok),
            json!({ "algebra": algebra_json(inst), "settings": settings, "object": object, "result": value }),
        ));
    }
    let m = inst.module(object)?;
    let module = suites::analyze_module(m, s);
    let (complex, ok) = suites::analyze_complex(&presentation_complex(m), s);
    Some(envelope(
        "analyze",
        outcome_of(!ok),
        json!({
            "algebra": algebra_json(inst),
            "settings": settings,
            "object": object,
            "result": module,
            "presentation_complex": complex,
        }),
    ))
}

#[derive(Clone, Copy, Debug)]
pub struct FuzzOptions {
    pub seed: u64,
    pub count: usize,
    pub caps: RandomCaps,
    pub settings: Settings,
}

/// The random complex of a fuzz case: stream `case` of the ChaCha8 generator seeded with `seed`.
pub fn fuzz_case_complex(inst: &Instance, seed: u64, case: usize, caps: RandomCaps) -> Complex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(case as u64);
    random_complex(&inst.ring, caps, &mut rng)
}

/// A standalone instance file holding just `x`, for rerunning a failing case.
pub fn complex_instance_text(inst: &Instance, name: &str, x: &Complex) -> String {
    InstanceFile {
        algebra: inst.file.algebra.clone(),
        modules: inst.file.modules.clone(),
        complexes: vec![ComplexDecl::from_complex(name, x)],
    }
    .to_string()
}

pub struct FuzzCase {
    pub case: usize,
    pub complex: Complex,
    pub checks: Vec<Check>,
}

pub fn fuzz_cases(inst: &Instance, o: FuzzOptions) -> Vec<FuzzCase> {
    (0..o.count)
        .into_par_iter()
        .map(|case| {
            let complex = fuzz_case_complex(inst, o.seed, case, o.caps);
            let checks = suites::complex_suites(&complex, &inst.modules, o.settings);
            FuzzCase { case, complex, checks }
        })
        .collect()
}

pub fn fuzz(inst: &Instance, o: FuzzOptions) -> Report {
    let cases = fuzz_cases(inst, o);
    fuzz_report(inst, o, &cases)
}

pub fn fuzz_report(inst: &Instance, o: FuzzOptions, cases: &[FuzzCase]) -> Report {
    let failed = cases.iter().any(|c| has_failure(&c.checks));
    let records: Vec<Value> = cases
        .iter()
        .map(|c| {
            let mut rec = json!({
                "case": c.case,
                "lo": c.complex.lo(),
                "ranks": c.complex.ranks(),
                "checks": c.checks,
            });
            if has_failure(&c.checks) {
                rec["instance"] = json!(complex_instance_text(inst, &format!("case_{}", c.case), &c.complex));
            }
            rec
        })
        .collect();
    envelope(
        "fuzz",
        outcome_of(failed),
        json!({
            "algebra": algebra_json(inst),
            "settings": {
                "seed": o.seed,
                "count": o.count,
                "max_rank": o.caps.max_rank,
                "max_window": o.caps.max_window,
                "depth": o.settings.depth,
                "nmax": o.settings.nmax,
            },
            "summary": tally(cases.iter().flat_map(|c| c.checks.iter())),
            "cases": records,
        }),
    )
}

/// Every suite on every declared object: complex suites on named complexes and
/// on presentation complexes of named modules, module suites on named modules.
pub fn theorems(inst: &Instance, s: Settings) -> Report {
    let mut jobs: Vec<(String, Complex)> = inst.complexes.clone();
    jobs.extend(inst.modules.iter().map(|(name, m)| (format!("presentation({name})"), presentation_complex(m))));
    let mut objects: Vec<(String, Vec<Check>)> =
        jobs.par_iter().map(|(name, x)| (name.clone(), suites::complex_suites(x, &inst.modules, s))).collect();
    let module_checks: Vec<(String, Vec<Check>)> = inst
        .modules
        .par_iter()
        .map(|(name, m)| (name.clone(), vec![suites::kato(m), suites::dual_resolution_duality(m, &inst.modules)]))
        .collect();
    objects.extend(module_checks);
    let flags = suites::flag_checks(&inst.ring, &inst.modules, s.depth);
    let failed = has_failure(&flags) || objects.iter().any(|o| has_failure(&o.1));
    let all = flags.iter().chain(objects.iter().flat_map(|o| o.1.iter()));
    envelope(
        "theorems",
        outcome_of(failed),
        json!({
            "algebra": algebra_json(inst),
            "settings": { "depth": s.depth, "nmax": s.nmax },
            "summary": tally(all),
            "flag_checks": flags,
            "objects": objects.iter().map(|(name, checks)| json!({ "object": name, "checks": checks })).collect::<Vec<_>>(),
        }),
    )
}
