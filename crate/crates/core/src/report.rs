//! JSON reports. Objects have sorted keys and every number is tagged,
//! `{"exact": "p/q"}` for integers and rationals or `{"float": x}` for reals.

use num_rational::BigRational;
use serde_json::{json, Map, Value};

use crate::analysis::{CorrelationReport, DependencyCount, DependencyMode};
use crate::conditions::{ConditionReport, Param};
use crate::cover::{CoverInstance, DegreeProfile};
use crate::solvers::SolveOutcome;

pub fn exact(q: &BigRational) -> Value {
    let text = if q.is_integer() { q.numer().to_string() } else { format!("{}/{}", q.numer(), q.denom()) };
    json!({ "exact": text })
}

pub fn int(n: impl Into<u128>) -> Value {
    json!({ "exact": n.into().to_string() })
}

/// Non-finite values have no JSON number, so they are written as strings.
pub fn float(x: f64) -> Value {
    let v = if x.is_finite() {
        json!(x)
    } else if x.is_nan() {
        json!("nan")
    } else if x > 0.0 {
        json!("inf")
    } else {
        json!("-inf")
    };
    json!({ "float": v })
}

pub fn param(p: &Param) -> Value {
    match p {
        Param::Int(n) => int(*n),
        Param::Real(x) => float(*x),
        Param::Exact(q) => exact(q),
        Param::Text(s) => json!(s),
    }
}

fn params<'a>(it: impl IntoIterator<Item = (&'a String, &'a Param)>) -> Value {
    Value::Object(it.into_iter().map(|(k, v)| (k.clone(), param(v))).collect::<Map<_, _>>())
}

pub fn condition(r: &ConditionReport) -> Value {
    json!({
        "condition": r.condition,
        "holds": r.holds,
        "relation": r.relation,
        "lhs_log": float(r.lhs_log),
        "rhs_log": float(r.rhs_log),
        "inputs": params(&r.inputs),
        "details": params(&r.details),
        "notes": r.notes,
        "log_convention": "natural",
    })
}

pub fn profile(p: &DegreeProfile) -> Value {
    json!({
        "delta_A": int(p.delta_a as u64),
        "delta_B": int(p.delta_b as u64),
        "d_A": int(p.d_a as u64),
        "d_B": int(p.d_b as u64),
        "k_A": int(p.k_a as u64),
        "k_B": int(p.k_b as u64),
    })
}

/// Transversal as an object from base vertex id to cover vertex id.
pub fn transversal(inst: &CoverInstance, choice: &[usize]) -> Value {
    Value::Object(
        choice
            .iter()
            .enumerate()
            .map(|(v, &c)| (inst.base_id(v).to_string(), json!(inst.cover_id(c))))
            .collect(),
    )
}

/// Solver outcome; wall time only with `timing`, so that reports are
/// reproducible byte for byte by default.
pub fn solve_outcome(inst: &CoverInstance, algo: &str, out: &SolveOutcome, timing: bool) -> Value {
    let mut stats = json!({
        "nodes": int(out.stats.nodes),
        "rounds": int(out.stats.rounds),
    });
    if timing {
        stats["elapsed_seconds"] = float(out.stats.elapsed.as_secs_f64());
    }
    json!({
        "algo": algo,
        "status": out.status.as_str(),
        "transversal": out.solution.as_ref().map(|t| transversal(inst, &t.choice)),
        "stats": stats,
        "notes": out.notes,
    })
}

pub fn correlation(inst: &CoverInstance, r: &CorrelationReport) -> Value {
    let list = inst.part(r.vertex);
    json!({
        "vertex": inst.base_id(r.vertex),
        "passes": r.passes(),
        "outcomes": int(r.outcomes),
        "subsets_checked": int(r.subsets_checked),
        "violations": int(r.violations),
        "pr_all_blocked": exact(&r.pr_all_blocked),
        "product_of_marginals": exact(&r.product_of_marginals),
        "worst_ratio": r.worst_ratio.as_ref().map(|(q, set)| json!({
            "ratio": exact(q),
            "subset": list.iter().enumerate().filter(|(i, _)| set & (1 << i) != 0)
                .map(|(_, &c)| inst.cover_id(c)).collect::<Vec<_>>(),
        })),
    })
}

pub fn dependency(inst: &CoverInstance, d: &DependencyCount) -> Value {
    json!({
        "vertex": inst.base_id(d.vertex),
        "mode": match d.mode { DependencyMode::Cond2 => "cond2", DependencyMode::Cond3 => "cond3" },
        "count": int(d.count),
        "bound": int(d.bound),
        "within_bound": d.within_bound(),
    })
}

pub fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values always serialize")
}
