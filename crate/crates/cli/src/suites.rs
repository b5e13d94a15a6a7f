//! Named invariant and theorem checks over complexes and modules.

use serde::Serialize;
use serde_json::{json, Value};
use stablecx::invariants::{gdim_module, gorenstein_projective_module, is_n_torsionfree_module, pd_module, stable_fingerprint};
use stablecx::les::{hom_complex, tensor_complex};
use stablecx::resolution::ext_regular_dim;
use stablecx::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The hypothesis of the check does not hold for this input.
    Skip,
    /// The check could not be decided within the depth and size limits.
    Unknown,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub status: Status,
    /// Summary of what was computed.
    #[serde(skip_serializing_if = "Value::is_null")]
    pub data: Value,
    /// For `fail` and `unknown`: the data needed to rerun the failing step.
    #[serde(skip_serializing_if = "Value::is_null")]
    pub witness: Value,
}

impl Check {
    fn pass(suite: &'static str, data: Value) -> Self {
        Check { suite, status: Status::Pass, data, witness: Value::Null }
    }

    fn fail(suite: &'static str, witness: Value) -> Self {
        Check { suite, status: Status::Fail, data: Value::Null, witness }
    }

    fn skip(suite: &'static str, reason: &str) -> Self {
        Check { suite, status: Status::Skip, data: json!({ "reason": reason }), witness: Value::Null }
    }

    fn unknown(suite: &'static str, witness: Value) -> Self {
        Check { suite, status: Status::Unknown, data: Value::Null, witness }
    }

    fn from_error(suite: &'static str, e: Error) -> Self {
        match e {
            Error::PreconditionViolated(reason) => Check::skip(suite, &reason),
            other => Check::fail(suite, json!({ "error": other.to_string() })),
        }
    }
}

pub fn bounded(b: Bounded) -> Value {
    match b {
        Bounded::Value(v) => json!(v),
        Bounded::Unknown { depth } => json!({ "unknown_at_depth": depth }),
    }
}

/// Parameters shared by all checks.
#[derive(Clone, Copy, Debug)]
pub struct Settings {
    pub depth: usize,
    pub nmax: usize,
}

impl Default for Settings {
    fn default() -> Self {
        Settings { depth: 6, nmax: 4 }
    }
}

/// Names of the complex suites, in run order.
pub const COMPLEX_SUITES: &[&str] = &[
    "split_criteria",
    "syzygy_shift",
    "torsionfree_criteria",
    "torsionfree_tower",
    "gamma_rho",
    "dimensions",
    "gp_cohomology",
    "two_out_of_three",
    "complete_resolution",
    "approximation",
    "auslander_buchweitz",
    "rotation",
    "long_exact_sequences",
];

pub fn complex_suites(x: &Complex, modules: &[(String, FPModule)], s: Settings) -> Vec<Check> {
    vec![
        split_criteria(x),
        syzygy_shift(x, s),
        torsionfree_criteria(x, s),
        torsionfree_tower_check(x, s),
        gamma_rho(x),
        dimension_check(x, s),
        gp_cohomology(x, s),
        two_out_of_three(x, s),
        complete_resolution(x, s),
        approximation(x, s),
        auslander_buchweitz_check(x, s),
        rotation(x),
        long_exact_sequences(x, modules),
    ]
}

pub fn split_criteria(x: &Complex) -> Check {
    match x.is_split() {
        Ok(split) => Check::pass("split_criteria", json!({ "split": split })),
        Err(e) => Check::from_error("split_criteria", e),
    }
}

/// dim Ext^j(C^i(ΩX), R) = dim Ext^{j+1}(C^i(X), R), and the same for H^i.
pub fn syzygy_shift(x: &Complex, s: Settings) -> Check {
    const SUITE: &str = "syzygy_shift";
    let om = syzygy_complex(x);
    let lo = x.lo().min(om.lo()) - 1;
    let hi = x.hi().max(om.hi()) + 1;
    let jmax = s.depth.saturating_sub(1).max(1);
    for i in lo..=hi {
        for (object, a, b) in [("C", om.c(i), x.c(i)), ("H", om.h(i), x.h(i))] {
            for j in 1..=jmax {
                let (lhs, rhs) = (ext_regular_dim(&a, j), ext_regular_dim(&b, j + 1));
                if lhs != rhs {
                    return Check::fail(SUITE, json!({ "object": object, "degree": i, "j": j, "syzygy_ext": lhs, "shifted_ext": rhs }));
                }
            }
        }
    }
    Check::pass(SUITE, json!({ "degrees": [lo, hi], "max_j": jmax }))
}

/// The direct Ext criterion, the module criterion and the γ criterion agree
/// (disagreement surfaces as an engine error).
pub fn torsionfree_criteria(x: &Complex, s: Settings) -> Check {
    let mut flags = Vec::new();
    for n in 1..=s.nmax {
        match is_n_torsionfree_complex(x, n) {
            Ok(b) => flags.push(b),
            Err(e) => return Check::from_error("torsionfree_criteria", e),
        }
    }
    Check::pass("torsionfree_criteria", json!({ "torsionfree": flags }))
}

/// The tower is all ghost exactly when the predicate holds.
pub fn torsionfree_tower_check(x: &Complex, s: Settings) -> Check {
    const SUITE: &str = "torsionfree_tower";
    let mut ghost = Vec::new();
    for n in 1..=s.nmax {
        let predicate = match is_n_torsionfree_complex(x, n) {
            Ok(b) => b,
            Err(e) => return Check::from_error(SUITE, e),
        };
        let tower = match torsionfree_tower_unchecked(x, n) {
            Ok(t) => t,
            Err(e) => return Check::from_error(SUITE, e),
        };
        if !tower.is_chained() || tower.all_ghost() != predicate {
            return Check::fail(SUITE, json!({ "n": n, "predicate": predicate, "flags": tower.flags(), "chained": tower.is_chained() }));
        }
        ghost.push(tower.all_ghost());
        if !predicate {
            break;
        }
    }
    Check::pass(SUITE, json!({ "all_ghost": ghost }))
}

/// γ^i_X coincides with ρ^i of the dual complex.
pub fn gamma_rho(x: &Complex) -> Check {
    const SUITE: &str = "gamma_rho";
    let xs = x.dual();
    for i in -x.hi() - 1..=-x.lo() + 1 {
        match (natural_map_gamma(x, i), natural_map_rho(&xs, i)) {
            (Ok(g), Ok(r)) if g.matrix() == r.matrix() => {}
            (Ok(_), Ok(_)) => return Check::fail(SUITE, json!({ "degree": i })),
            (Err(e), _) | (_, Err(e)) => return Check::from_error(SUITE, e),
        }
    }
    Check::pass(SUITE, Value::Null)
}

fn routes(r: &DimensionRoutes) -> Value {
    json!({
        "value": bounded(r.value),
        "by_cokernels": bounded(r.by_cokernels),
        "by_syzygies": bounded(r.by_syzygies),
    })
}

/// Both routes agree when they resolve; gdim = pd over algebras of finite
/// global dimension and gdim = 0 over self-injective ones.
pub fn dimension_check(x: &Complex, s: Settings) -> Check {
    const SUITE: &str = "dimensions";
    let d = match dimensions(x, s.depth) {
        Ok(d) => d,
        Err(e) => return Check::from_error(SUITE, e),
    };
    let data = json!({ "pd": routes(&d.pd), "gdim": routes(&d.gdim) });
    let flags = x.ring().flags();
    if let Some(g) = flags.gldim {
        let ok = d.gdim.value == d.pd.value && d.pd.value.value().is_some_and(|v| v <= g);
        if !ok {
            return Check::fail(SUITE, json!({ "reason": "gdim must equal pd, bounded by gldim", "gldim": g, "dims": data }));
        }
    }
    if flags.self_injective && d.gdim.value != Bounded::Value(0) {
        return Check::fail(SUITE, json!({ "reason": "gdim must vanish over a self-injective algebra", "dims": data }));
    }
    Check::pass(SUITE, data)
}

/// A Gorenstein projective complex has no cohomology that is provably not
/// Gorenstein projective.
pub fn gp_cohomology(x: &Complex, s: Settings) -> Check {
    const SUITE: &str = "gp_cohomology";
    if is_gorenstein_projective_complex(x, s.depth) != Tri::Yes {
        return Check::skip(SUITE, "complex not known to be Gorenstein projective");
    }
    for i in x.padded_degrees() {
        let (answer, w) = gorenstein_projective_module(&x.h(i), s.depth);
        if answer == Tri::No {
            return Check::fail(SUITE, json!({ "degree": i, "ext": w.map(ext_witness) }));
        }
    }
    Check::pass(SUITE, Value::Null)
}

pub fn ext_witness(w: ExtWitness) -> Value {
    json!({ "j": w.j, "dim": w.dim, "of_transpose": w.transpose })
}

/// In a ghost triangle with Gorenstein projective third term, the first two
/// terms are Gorenstein projective together.
pub fn two_out_of_three(x: &Complex, s: Settings) -> Check {
    const SUITE: &str = "two_out_of_three";
    let mut triangles = vec![("syzygy", syzygy_triangle(x))];
    if let Ok(step) = torsionless_triangle(x) {
        triangles.push(("torsionless", step.triangle));
    }
    let mut decided = 0;
    for (kind, t) in triangles {
        match t.is_ghost() {
            Ok(true) => {}
            Ok(false) => continue,
            Err(e) => return Check::from_error(SUITE, e),
        }
        if is_gorenstein_projective_complex(&t.z, s.depth) != Tri::Yes {
            continue;
        }
        let gx = is_gorenstein_projective_complex(&t.x, s.depth);
        let gy = is_gorenstein_projective_complex(&t.y, s.depth);
        if gx != Tri::Unknown && gy != Tri::Unknown {
            if gx != gy {
                return Check::fail(SUITE, json!({ "triangle": kind, "first": gx.as_str(), "middle": gy.as_str() }));
            }
            decided += 1;
        }
    }
    if decided == 0 {
        return Check::skip(SUITE, "no ghost triangle with decidable Gorenstein projective terms");
    }
    Check::pass(SUITE, json!({ "triangles": decided }))
}

/// Window t ∈ [-3, 3] of a complete resolution: 7 triangles, 14 ghost flags,
/// re-certified by the verifier.
pub fn complete_resolution(x: &Complex, s: Settings) -> Check {
    const SUITE: &str = "complete_resolution";
    let w = match complete_resolution_window(x, -3, 3, s.depth) {
        Ok(w) => w,
        Err(e) => return Check::from_error(SUITE, e),
    };
    let flags = w.flags();
    let v = match verify_complete_window(&w, x, s.depth) {
        Ok(v) => v,
        Err(e) => return Check::from_error(SUITE, e),
    };
    let data = json!({
        "triangles": w.steps.len(),
        "flags": flags,
        "chained": v.chained,
        "ghost": v.ghost,
        "middle_split": v.middle_split,
        "ext_vanishing": v.ext_vanishing,
    });
    if w.steps.len() != 7 || flags.len() != 14 || !w.all_ghost() || !v.passes() {
        return Check::fail(SUITE, data);
    }
    Check::pass(SUITE, data)
}

fn approximation_data(a: &AbApproximation) -> Value {
    json!({
        "n": a.n,
        "ghost": a.ghost,
        "pd_y": bounded(a.pd_y),
        "g_dual_torsionfree": a.g_dual_torsionfree,
        "g_gp": a.g_gp.as_str(),
    })
}

fn judge_approximation(suite: &'static str, a: &AbApproximation) -> Option<Check> {
    if !a.ghost || !a.g_dual_torsionfree || a.pd_y.value().is_some_and(|v| v + 1 > a.n.max(1)) {
        return Some(Check::fail(suite, approximation_data(a)));
    }
    if a.pd_y.value().is_none() {
        return Some(Check::unknown(suite, approximation_data(a)));
    }
    None
}

/// For n = 1, 2 with Ω^n X n-torsionfree: a ghost triangle Y → G → X with
/// pd Y ≤ n - 1 and G* n-torsionfree.
pub fn approximation(x: &Complex, s: Settings) -> Check {
    const SUITE: &str = "approximation";
    let mut done = Vec::new();
    for n in 1..=2 {
        match ab_approximation(x, n, s.depth) {
            Ok(a) => {
                if let Some(bad) = judge_approximation(SUITE, &a) {
                    return bad;
                }
                done.push(approximation_data(&a));
            }
            Err(Error::PreconditionViolated(_)) => {}
            Err(e) => return Check::from_error(SUITE, e),
        }
    }
    if done.is_empty() {
        return Check::skip(SUITE, "no syzygy is torsionfree enough");
    }
    Check::pass(SUITE, json!(done))
}

/// At n = gdim X the approximation has Gorenstein projective middle term.
pub fn auslander_buchweitz_check(x: &Complex, s: Settings) -> Check {
    const SUITE: &str = "auslander_buchweitz";
    match auslander_buchweitz(x, s.depth) {
        Ok(a) => {
            if let Some(bad) = judge_approximation(SUITE, &a) {
                return bad;
            }
            match a.g_gp {
                Tri::Yes => Check::pass(SUITE, approximation_data(&a)),
                Tri::Unknown => Check::unknown(SUITE, approximation_data(&a)),
                Tri::No => Check::fail(SUITE, approximation_data(&a)),
            }
        }
        Err(e) => Check::from_error(SUITE, e),
    }
}

/// Rotating the syzygy triangle keeps it ghost with matching fingerprints.
pub fn rotation(x: &Complex) -> Check {
    const SUITE: &str = "rotation";
    match rotate_ghost(&syzygy_triangle(x), 3) {
        Ok(r) if r.ghost && r.fingerprints_match => Check::pass(SUITE, Value::Null),
        Ok(r) => Check::fail(SUITE, json!({ "ghost": r.ghost, "fingerprints_match": r.fingerprints_match })),
        Err(e) => Check::from_error(SUITE, e),
    }
}

/// The Hom, tensor and star sequences are exact at every interior spot of
/// their first 8 terms, in every degree of the padded window, for every
/// coefficient module and the regular module.
pub fn long_exact_sequences(x: &Complex, modules: &[(String, FPModule)]) -> Check {
    const SUITE: &str = "long_exact_sequences";
    const TERMS: usize = 8;
    let mut coefficients: Vec<(String, FPModule)> = modules.to_vec();
    coefficients.push(("R".to_string(), FPModule::free(x.ring(), 1)));
    let mut count = 0;
    for i in x.padded_degrees() {
        let star = starex_sequence(x, i, TERMS);
        if let Some(bad) = judge_sequence(SUITE, "star", None, i, star, &mut count) {
            return bad;
        }
        for (name, m) in &coefficients {
            let ab = ab_long_exact_sequence(x, m, i, TERMS);
            if let Some(bad) = judge_sequence(SUITE, "hom", Some(name), i, ab, &mut count) {
                return bad;
            }
            let tor = tor_long_exact_sequence(x, &m.reinterpret_op(), i, TERMS);
            if let Some(bad) = judge_sequence(SUITE, "tensor", Some(name), i, tor, &mut count) {
                return bad;
            }
        }
    }
    Check::pass(SUITE, json!({ "sequences": count }))
}

fn judge_sequence(
    suite: &'static str,
    kind: &str,
    module: Option<&String>,
    degree: i64,
    report: Result<LongExactSequenceReport>,
    count: &mut usize,
) -> Option<Check> {
    let report = match report {
        Ok(r) => r,
        Err(e) => return Some(Check::from_error(suite, e)),
    };
    *count += 1;
    if report.is_valid() {
        return None;
    }
    let spots: Vec<usize> = report.exact.iter().filter(|e| !e.1).map(|e| e.0).collect();
    let checks: Vec<Value> = report
        .cross_checks
        .iter()
        .filter(|c| !c.passes())
        .map(|c| json!({ "label": c.label, "computed": c.computed, "expected": c.expected }))
        .collect();
    Some(Check::fail(
        suite,
        json!({
            "sequence": kind,
            "module": module,
            "degree": degree,
            "dims": report.sequence.dims,
            "labels": report.sequence.labels,
            "inexact_spots": spots,
            "failed_cross_checks": checks,
        }),
    ))
}

/// Module-level checks: the spliced complex of M matches syzygies and
/// cosyzygies of M on the window [-2, 2].
pub fn kato(m: &FPModule) -> Check {
    const SUITE: &str = "kato";
    match kato_complex(m, 2, 2, 3) {
        Ok(r) if r.passes() => Check::pass(SUITE, json!({ "degrees": r.checks.iter().map(|c| c.0).collect::<Vec<_>>() })),
        Ok(r) => Check::fail(SUITE, json!({ "mismatched_degrees": r.checks.iter().filter(|c| !c.1).map(|c| c.0).collect::<Vec<_>>() })),
        Err(e) => Check::from_error(SUITE, e),
    }
}

/// For X the dual of a resolution of L and each coefficient module M:
/// dim H^{-i}(Hom(X, M)) = dim Tor_i(L, M) and dim H^i(X ⊗ M) = dim Ext^i(L, M)
/// for 0 ≤ i ≤ 3.
pub fn dual_resolution_duality(l: &FPModule, modules: &[(String, FPModule)]) -> Check {
    const SUITE: &str = "dual_resolution_duality";
    const TOP: usize = 3;
    let x = resolution_complex(l, TOP + 2).dual();
    let mut coefficients: Vec<(String, FPModule)> = modules.to_vec();
    coefficients.push(("R".to_string(), FPModule::free(l.ring(), 1)));
    for (name, m) in &coefficients {
        let m_op = m.reinterpret_op();
        let (hom, tensor) = match (hom_complex(&x, &m_op), tensor_complex(&x, m)) {
            (Ok(h), Ok(t)) => (h, t),
            (Err(e), _) | (_, Err(e)) => return Check::from_error(SUITE, e),
        };
        for i in 0..=TOP {
            let (tor, ext) = match (tor_dim(l, i, &m_op), ext_dim(l, i, m)) {
                (Ok(t), Ok(e)) => (t, e),
                (Err(e), _) | (_, Err(e)) => return Check::from_error(SUITE, e),
            };
            let h_hom = hom.cohomology_dim(-(i as i64));
            let h_tensor = tensor.cohomology_dim(i as i64);
            if h_hom != tor || h_tensor != ext {
                return Check::fail(
                    SUITE,
                    json!({ "module": name, "i": i, "hom_cohomology": h_hom, "tor": tor, "tensor_cohomology": h_tensor, "ext": ext }),
                );
            }
        }
    }
    Check::pass(SUITE, json!({ "max_i": TOP }))
}

/// Per-object summary for `analyze`.
pub fn analyze_complex(x: &Complex, s: Settings) -> (Value, bool) {
    let mut ok = true;
    let split = x.is_split().map_err(|e| {
        ok = false;
        e.to_string()
    });
    let torsionless = is_n_torsionfree_complex(x, 1);
    let mut torsionfree = Vec::new();
    for n in 1..=s.nmax {
        match is_n_torsionfree_complex(x, n) {
            Ok(b) => torsionfree.push(json!(b)),
            Err(e) => {
                ok = false;
                torsionfree.push(json!({ "error": e.to_string() }));
            }
        }
    }
    let gp = gorenstein_projective_complex(x, s.depth);
    let gp_witness = gp.witness.map(|(degree, w)| json!({ "degree": degree, "ext": w.map(ext_witness) }));
    let dims = match dimensions(x, s.depth) {
        Ok(d) => json!({ "pd": routes(&d.pd), "gdim": routes(&d.gdim) }),
        Err(e) => {
            ok = false;
            json!({ "error": e.to_string() })
        }
    };
    let cohomology: Vec<Value> =
        x.padded_degrees().map(|i| json!({ "degree": i, "dim": x.h(i).dim(), "cokernel_dim": x.c(i).dim() })).collect();
    let value = json!({
        "kind": "complex",
        "lo": x.lo(),
        "ranks": x.ranks(),
        "cohomology": cohomology,
        "split": split.map_or_else(|e| json!({ "error": e }), |b| json!(b)),
        "torsionless": torsionless.map_or_else(|e| json!({ "error": e.to_string() }), |b| json!(b)),
        "torsionfree": torsionfree,
        "gorenstein_projective": { "answer": gp.answer.as_str(), "witness": gp_witness },
        "dimensions": dims,
    });
    (value, ok)
}

pub fn analyze_module(m: &FPModule, s: Settings) -> Value {
    let (gp, w) = gorenstein_projective_module(m, s.depth);
    json!({
        "kind": "module",
        "dim": m.dim(),
        "generators": m.minimal_generators().len(),
        "projective": stablecx::module::is_projective(m),
        "torsionfree": (1..=s.nmax).map(|n| is_n_torsionfree_module(m, n)).collect::<Vec<_>>(),
        "gorenstein_projective": { "answer": gp.as_str(), "witness": w.map(ext_witness) },
        "pd": bounded(pd_module(m, s.depth)),
        "gdim": bounded(gdim_module(m, s.depth)),
        "fingerprint": stable_fingerprint(m, 3),
    })
}

/// Declared flags sampled on the named modules: self-injectivity through
/// Ext¹(M, R) = 0, a global dimension bound through pd M.
pub fn flag_checks(ring: &Ring, modules: &[(String, FPModule)], depth: usize) -> Vec<Check> {
    let flags = ring.flags();
    let mut out = Vec::new();
    if flags.self_injective {
        const SUITE: &str = "flag_self_injective";
        let bad = modules.iter().find(|(_, m)| ext_regular_dim(m, 1) != 0);
        out.push(match bad {
            Some((name, m)) => Check::fail(SUITE, json!({ "module": name, "ext1_into_r": ext_regular_dim(m, 1) })),
            None => Check::pass(SUITE, json!({ "sampled_modules": modules.len() })),
        });
    }
    if let Some(g) = flags.gldim {
        const SUITE: &str = "flag_gldim";
        let mut result = Check::pass(SUITE, json!({ "sampled_modules": modules.len() }));
        for (name, m) in modules {
            match pd_module(m, depth.max(g + 1)) {
                Bounded::Value(v) if v <= g => {}
                Bounded::Value(v) => {
                    result = Check::fail(SUITE, json!({ "module": name, "pd": v, "declared": g }));
                    break;
                }
                b @ Bounded::Unknown { .. } => {
                    result = Check::fail(SUITE, json!({ "module": name, "pd": bounded(b), "declared": g }));
                    break;
                }
            }
        }
        out.push(result);
    }
    out
}
