//! Scenario files: declarations, then steps run in order, each with optional
//! expectations on its JSON result.
//!
//! ```json
//! {
//!   "schema": "eidos/1",
//!   "name": "erasure",
//!   "declarations": {
//!     "atoms": [{"name": "m1", "content": {"E": "1"}, "mechanical": true}],
//!     "reservoirs": {"boxes": {"kind": "basic"}},
//!     "ensembles": {"bit": {"states": ["r0", "r1"], "probs": ["1/2", "1/2"]}}
//!   },
//!   "steps": [
//!     {"id": "cost", "op": "landauer", "reservoir": "boxes",
//!      "expect": {"cost": "1"}}
//!   ]
//! }
//! ```

use std::collections::BTreeMap;

use serde::Deserialize;
use serde_json::{json, Value};

use eidos_core::ledger::{self, Augmentation, Ensemble};
use eidos_core::measure::{Increment, ReservoirSpec};
use eidos_core::rational::parse_rational;
use eidos_core::term::{AbstractAtom, CoinSet, ContentVector, Weight};
use eidos_core::{parse_eidostate, parse_term, Declarations, Term, COINS};

use crate::commands;
use crate::encode;
use crate::error::CliError;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub schema: String,
    #[serde(default)]
    pub name: String,
    #[serde(default)]
    pub description: Option<String>,
    #[serde(default)]
    pub declarations: DeclarationSection,
    #[serde(default)]
    pub steps: Vec<Step>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeclarationSection {
    #[serde(default)]
    pub atoms: Vec<AtomDecl>,
    #[serde(default)]
    pub reservoirs: BTreeMap<String, ReservoirDecl>,
    #[serde(default)]
    pub ensembles: BTreeMap<String, EnsembleDecl>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AtomDecl {
    pub name: String,
    #[serde(default)]
    pub content: BTreeMap<String, String>,
    #[serde(default = "one")]
    pub weight: String,
    #[serde(default)]
    pub mechanical: bool,
}

fn one() -> String {
    "1".into()
}

fn coins() -> String {
    COINS.into()
}

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum ReservoirDecl {
    /// Basic boxes `b_n`.
    Basic,
    /// Boxes over a coin set, `"{(h+h),(h+t),(t+h)}"`.
    Box { coins: String },
    /// Declared rungs `<name><n>`; exactly one of `ratio` and `bits`.
    Abstract {
        name: String,
        mu: String,
        #[serde(default)]
        content0: BTreeMap<String, String>,
        #[serde(default = "one")]
        w0: String,
        ratio: Option<String>,
        bits: Option<String>,
    },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EnsembleDecl {
    pub states: Vec<String>,
    pub probs: Vec<String>,
}

#[derive(Debug, Deserialize)]
pub struct Step {
    #[serde(default)]
    pub id: Option<String>,
    #[serde(flatten)]
    pub op: Op,
    #[serde(default)]
    pub expect: BTreeMap<String, Expect>,
}

#[derive(Debug, Deserialize)]
#[serde(tag = "op", rename_all = "kebab-case")]
pub enum Op {
    Prob {
        expr: String,
    },
    Entropy {
        expr: String,
    },
    Content {
        expr: String,
    },
    Reach {
        src: String,
        dst: String,
        #[serde(default)]
        certificate: bool,
        depth: Option<usize>,
    },
    Landauer {
        reservoir: String,
        #[serde(default = "coins")]
        component: String,
    },
    FreeEnergy {
        term: String,
        reservoir: String,
        #[serde(default = "coins")]
        component: String,
    },
    /// Synthesizes levels unless `levels` gives them as `[l, k]` pairs.
    Ledger {
        src: String,
        dst: String,
        reservoir: String,
        #[serde(default = "coins")]
        component: String,
        levels: Option<LevelsDecl>,
    },
}

impl Op {
    fn name(&self) -> &'static str {
        match self {
            Op::Prob { .. } => "prob",
            Op::Entropy { .. } => "entropy",
            Op::Content { .. } => "content",
            Op::Reach { .. } => "reach",
            Op::Landauer { .. } => "landauer",
            Op::FreeEnergy { .. } => "free-energy",
            Op::Ledger { .. } => "ledger",
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LevelsDecl {
    pub src: Vec<(i64, i64)>,
    pub dst: Vec<(i64, i64)>,
}

/// `{"approx": x, "tol": t}` matches numbers within `t`; anything else must
/// equal the result field exactly.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum Expect {
    Approx { approx: f64, tol: f64 },
    Exact(Value),
}

struct Context {
    decls: Declarations,
    reservoirs: BTreeMap<String, ReservoirSpec>,
    ensembles: BTreeMap<String, Ensemble>,
}

fn content_map(map: &BTreeMap<String, String>) -> Result<ContentVector, CliError> {
    let mut c = ContentVector::zero();
    for (k, v) in map {
        c.set(k, parse_rational(v)?);
    }
    Ok(c)
}

fn positive_weight(s: &str, what: &str) -> Result<Weight, CliError> {
    Weight::new(parse_rational(s)?)
        .ok_or_else(|| CliError::Scenario(format!("weight of `{what}` must be positive")))
}

/// Parses `basic` or `box:{...}` as used on the command line.
pub fn reservoir_from_flag(text: &str, decls: &Declarations) -> Result<ReservoirSpec, CliError> {
    match text.trim() {
        "basic" => Ok(ReservoirSpec::basic_box()),
        other => match other.strip_prefix("box:") {
            Some(set) => Ok(ReservoirSpec::box_backed(coin_set(set, decls)?)),
            None => Err(CliError::Usage(format!(
                "unknown reservoir `{text}`; use `basic` or `box:{{...}}`"
            ))),
        },
    }
}

fn coin_set(text: &str, decls: &Declarations) -> Result<CoinSet, CliError> {
    let e = parse_eidostate(text, decls)?;
    CoinSet::new(e.iter().cloned())
        .map_err(|err| CliError::Scenario(format!("bad coin set `{text}`: {err}")))
}

impl Context {
    fn build(section: &DeclarationSection) -> Result<Self, CliError> {
        let mut decls = Declarations::new();
        for a in &section.atoms {
            let atom = AbstractAtom {
                name: a.name.clone(),
                content: content_map(&a.content)?,
                weight: positive_weight(&a.weight, &a.name)?,
                mechanical: a.mechanical,
            };
            let term = Term::abstract_atom(atom)
                .map_err(|e| CliError::Scenario(format!("atom `{}`: {e}", a.name)))?;
            decls.declare(&a.name, term);
        }
        let mut reservoirs = BTreeMap::new();
        for (name, r) in &section.reservoirs {
            let spec = match r {
                ReservoirDecl::Basic => ReservoirSpec::basic_box(),
                ReservoirDecl::Box { coins } => ReservoirSpec::box_backed(coin_set(coins, &decls)?),
                ReservoirDecl::Abstract {
                    name: rung,
                    mu,
                    content0,
                    w0,
                    ratio,
                    bits,
                } => {
                    let increment = match (ratio, bits) {
                        (Some(b), None) => Increment::Ratio(parse_rational(b)?),
                        (None, Some(s)) => Increment::Bits(parse_rational(s)?),
                        _ => {
                            return Err(CliError::Scenario(format!(
                                "reservoir `{name}` needs exactly one of `ratio` and `bits`"
                            )))
                        }
                    };
                    ReservoirSpec::abstract_ladder(
                        rung,
                        parse_term(mu, &decls)?,
                        content_map(content0)?,
                        positive_weight(w0, name)?,
                        increment,
                    )
                }
            };
            reservoirs.insert(name.clone(), spec);
        }
        let mut ensembles = BTreeMap::new();
        for (name, e) in &section.ensembles {
            let states = e
                .states
                .iter()
                .map(|s| parse_term(s, &decls))
                .collect::<Result<Vec<_>, _>>()?;
            let probs = e
                .probs
                .iter()
                .map(|p| parse_rational(p))
                .collect::<Result<Vec<_>, _>>()?;
            ensembles.insert(name.clone(), Ensemble::new(states, probs)?);
        }
        Ok(Self {
            decls,
            reservoirs,
            ensembles,
        })
    }

    fn reservoir(&self, name: &str) -> Result<&ReservoirSpec, CliError> {
        self.reservoirs
            .get(name)
            .ok_or_else(|| CliError::Scenario(format!("undeclared reservoir `{name}`")))
    }

    fn ensemble(&self, name: &str) -> Result<&Ensemble, CliError> {
        self.ensembles
            .get(name)
            .ok_or_else(|| CliError::Scenario(format!("undeclared ensemble `{name}`")))
    }

    fn run(&self, op: &Op) -> Result<Value, CliError> {
        match op {
            Op::Prob { expr } => commands::prob(&parse_eidostate(expr, &self.decls)?),
            Op::Entropy { expr } => Ok(commands::entropy(&parse_eidostate(expr, &self.decls)?)),
            Op::Content { expr } => Ok(commands::content(&parse_eidostate(expr, &self.decls)?)),
            Op::Reach {
                src,
                dst,
                certificate,
                depth,
            } => {
                let e = parse_eidostate(src, &self.decls)?;
                let f = parse_eidostate(dst, &self.decls)?;
                let depth = depth.unwrap_or_else(commands::default_depth);
                Ok(commands::reach(&e, &f, *certificate, depth)?.0)
            }
            Op::Landauer {
                reservoir,
                component,
            } => {
                let cost = ledger::landauer_cost(self.reservoir(reservoir)?, component)?;
                Ok(json!({"cost": real(&cost), "cost_approx": cost.approx}))
            }
            Op::FreeEnergy {
                term,
                reservoir,
                component,
            } => {
                let t = parse_term(term, &self.decls)?;
                let f = ledger::free_energy(&t, self.reservoir(reservoir)?, component)?;
                Ok(json!({"free_energy": real(&f), "free_energy_approx": f.approx}))
            }
            Op::Ledger {
                src,
                dst,
                reservoir,
                component,
                levels,
            } => {
                let (a, b) = (self.ensemble(src)?, self.ensemble(dst)?);
                let spec = self.reservoir(reservoir)?;
                let (aug_a, aug_b, synthesis) = match levels {
                    Some(l) => (
                        Augmentation {
                            levels: l.src.clone(),
                        },
                        Augmentation {
                            levels: l.dst.clone(),
                        },
                        Value::Null,
                    ),
                    None => {
                        let s = ledger::synthesize_augmentation(a, b, spec, component)?;
                        let info = json!({
                            "exact": s.exact,
                            "src_residuals_approx": s.src_residuals,
                            "dst_residuals_approx": s.dst_residuals,
                        });
                        (s.src, s.dst, info)
                    }
                };
                let r = ledger::work_information_bound(a, b, (&aug_a, &aug_b), spec, component)?;
                let cost = ledger::landauer_cost(spec, component)?;
                Ok(json!({
                    "direction": r.direction.to_string(),
                    "dQ_mu": encode::rational(&r.dq_mu),
                    "dH": encode::log_value(&r.dh),
                    "dH_approx": r.dh.to_f64(),
                    "dF": real(&r.df),
                    "dF_approx": r.df.approx,
                    "lhs_approx": r.lhs,
                    "rhs_approx": r.rhs,
                    "satisfied": r.satisfied,
                    "equality": r.equality,
                    "exact": r.exact,
                    "landauer_cost": real(&cost),
                    "levels": {"src": aug_a.levels, "dst": aug_b.levels},
                    "synthesis": synthesis,
                    "weights": r.weights.as_ref().map(|(x, y)| json!([encode::weight(x), encode::weight(y)])),
                }))
            }
        }
    }
}

/// Exact values as `"n/d"`, inexact ones as `null` (see the `_approx` twin).
fn real(r: &ledger::Real) -> Value {
    r.exact.as_ref().map_or(Value::Null, encode::rational)
}

fn check(step: &str, result: &Value, expect: &BTreeMap<String, Expect>) -> Result<(), CliError> {
    for (field, want) in expect {
        let found = encode::lookup(result, field);
        let ok = match (want, found) {
            (Expect::Exact(v), Some(f)) => v == f,
            (Expect::Approx { approx, tol }, Some(f)) => {
                f.as_f64().is_some_and(|x| (x - approx).abs() <= *tol)
            }
            (_, None) => false,
        };
        if !ok {
            return Err(CliError::Expectation {
                step: step.to_string(),
                field: field.clone(),
                expected: match want {
                    Expect::Exact(v) => v.to_string(),
                    Expect::Approx { approx, tol } => format!("{approx} ± {tol}"),
                },
                found: found.map_or_else(|| "nothing".to_string(), Value::to_string),
            });
        }
    }
    Ok(())
}

pub fn load(text: &str) -> Result<Scenario, CliError> {
    let s: Scenario = serde_json::from_str(text).map_err(|e| CliError::Scenario(e.to_string()))?;
    if s.schema != encode::SCHEMA {
        return Err(CliError::Scenario(format!(
            "schema `{}` is not `{}`",
            s.schema,
            encode::SCHEMA
        )));
    }
    Ok(s)
}

/// Runs every step, stopping at the first error or failed expectation.
pub fn run_scenario(s: &Scenario) -> Result<Value, CliError> {
    let ctx = Context::build(&s.declarations)?;
    let mut steps = Vec::with_capacity(s.steps.len());
    for (i, step) in s.steps.iter().enumerate() {
        let id = step.id.clone().unwrap_or_else(|| i.to_string());
        let result = ctx.run(&step.op)?;
        check(&id, &result, &step.expect)?;
        steps.push(json!({"id": id, "op": step.op.name(), "result": result}));
    }
    Ok(json!({"scenario": s.name, "steps": steps}))
}

pub const ERASURE: &str = include_str!("../scenarios/erasure.json");
pub const DEMON: &str = include_str!("../scenarios/demon.json");

pub fn bundled(name: &str) -> Option<&'static str> {
    match name {
        "erasure" => Some(ERASURE),
        "demon" => Some(DEMON),
        _ => None,
    }
}
