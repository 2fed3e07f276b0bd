//! One function per subcommand, each producing the JSON body of its output.

use serde_json::{json, Value};

use eidos_core::derive::axioms::check_axioms;
use eidos_core::expr::to_eidostate;
use eidos_core::measure::{self, ReservoirSpec};
use eidos_core::{
    canonical_form, entropic_probability, parse, reachable, search_derivation, tune_context,
    Declarations, Eidostate, LogExpr, Rational, SearchOutcome, Term,
};

use crate::encode;
use crate::error::CliError;

pub const DEFAULT_DEPTH: usize = 12;

/// `EIDOS_MAX_DEPTH`, else 12.
pub fn default_depth() -> usize {
    std::env::var("EIDOS_MAX_DEPTH")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_DEPTH)
}

pub fn parse_expr(text: &str, decls: &Declarations) -> Result<Value, CliError> {
    let e = parse(text)?;
    let value = to_eidostate(&e, decls)?;
    Ok(json!({
        "expr": e.to_string(),
        "kind": if e.is_term() { "term" } else { "eidostate" },
        "value": value.to_string(),
    }))
}

pub fn entropy(e: &Eidostate) -> Value {
    let w = e.weight();
    let s = LogExpr::log2(w.value().clone());
    json!({
        "weight": encode::weight(&w),
        "entropy": encode::log_value(&s),
        "entropy_bits_approx": s.to_f64(),
    })
}

pub fn content(e: &Eidostate) -> Value {
    json!({"content": encode::content(e.content_ref())})
}

pub fn canon(e: &Eidostate, with_certificate: bool) -> Result<Value, CliError> {
    let c = canonical_form(e)?;
    let mut out = json!({
        "form": c.form.to_string(),
        "coins": c.form.coins(),
        "records": c.form.records(),
        "canonical": c.form.realize().to_string(),
    });
    if with_certificate {
        out["certificate"] = encode::certificate(&c.certificate);
        out["verified"] = json!(c.certificate.verify().is_ok());
    }
    Ok(out)
}

pub fn prob(e: &Eidostate) -> Result<Value, CliError> {
    Ok(json!({
        "dist": encode::distribution(&entropic_probability(e)),
        "weight": encode::weight(&e.weight()),
    }))
}

/// The JSON body and exit code: 0 yes, 1 no, 2 search ran out of depth.
pub fn reach(
    e: &Eidostate,
    f: &Eidostate,
    with_certificate: bool,
    depth: usize,
) -> Result<(Value, i32), CliError> {
    let d = reachable(e, f);
    let mut out = json!({
        "reachable": d.reachable,
        "reason": d.reason.to_string(),
        "weight_src": encode::weight(&d.weight_src),
        "weight_dst": encode::weight(&d.weight_dst),
    });
    if !with_certificate {
        return Ok((out, if d.reachable { 0 } else { 1 }));
    }
    out["depth"] = json!(depth);
    let code = match search_derivation(e, f, depth)? {
        SearchOutcome::Found(c) => {
            out["status"] = json!("found");
            out["certificate"] = encode::certificate(&c);
            out["verified"] = json!(c.verify().is_ok());
            0
        }
        SearchOutcome::NotReachable => {
            out["status"] = json!("not-reachable");
            1
        }
        SearchOutcome::DepthExhausted => {
            out["status"] = json!("depth-exhausted");
            2
        }
    };
    Ok((out, code))
}

pub fn uniformize(
    states: &[Term],
    reservoir: Option<(&ReservoirSpec, &[i64])>,
) -> Result<Value, CliError> {
    let aug = match reservoir {
        Some((spec, levels)) => measure::uniformize_reservoir(states, spec, levels)?.0,
        None => measure::uniformize_mechanical(states)?,
    };
    let augmentations: Vec<Value> = aug
        .augmentations
        .iter()
        .map(|a| a.as_ref().map_or(Value::Null, |x| json!(x.to_string())))
        .collect();
    Ok(json!({
        "assembled": aug.assembled.to_string(),
        "augmentations": augmentations,
        "dist": encode::distribution(&aug.distribution()),
        "weight": encode::weight(&aug.weight()),
    }))
}

pub fn tune(e: &Eidostate, target: &[Rational]) -> Result<Value, CliError> {
    let t = tune_context(e, target)?;
    Ok(json!({
        "N": encode::integer(&t.n),
        "counts": t.counts.iter().map(encode::integer).collect::<Vec<_>>(),
        "dist": encode::distribution(&t.augmented.distribution()),
        "weight": encode::weight(&t.augmented.weight()),
    }))
}

/// The JSON body and exit code: 0 when every axiom passes.
pub fn axioms(bound: usize) -> (Value, i32) {
    let r = check_axioms(bound);
    let axioms: Vec<Value> = r
        .axioms
        .iter()
        .map(|a| {
            json!({
                "id": a.id,
                "title": a.title,
                "status": a.status.to_string(),
                "checked": a.checked,
                "witness": a.witness,
                "counterexample": a.counterexample,
                "caveat": a.caveat,
            })
        })
        .collect();
    let pass = r.all_pass();
    let out = json!({
        "bound": r.bound,
        "terms": r.terms,
        "eidostates": r.eidostates,
        "all_pass": pass,
        "axioms": axioms,
    });
    (out, if pass { 0 } else { 1 })
}
