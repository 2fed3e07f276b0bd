//! Proof objects for the `→` relation and their checker.
//!
//! A [`Certificate`] is a list of [`Step`]s. Each step concludes one relation
//! `A → B` either directly from an elementary relation or from earlier steps
//! through one of the closure rules. [`Certificate::verify`] re-checks every
//! step locally and knows nothing about how the certificate was produced.

use std::fmt;

use crate::term::{combine, similar, CoinSet, Eidostate, Face, Term};

/// Orientation of a two-way elementary relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// The left-to-right reading: `a + r → a`, `[K;n] + K → [K;n+1]`.
    Forward,
    Backward,
}

impl Direction {
    pub fn flip(self) -> Self {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Rule {
    /// `A ~ B ⇒ A → B`.
    Similarity,
    /// `h ↔ t`.
    CoinFlip,
    /// `A + r ↔ A` for a record state `r`.
    RecordAbsorb { record: Term, direction: Direction },
    /// `A + [K;0] ↔ A`.
    EmptyBoxAbsorb { base: CoinSet, direction: Direction },
    /// `[K;n] + K ↔ [K;n+1]`.
    BoxLadder {
        base: CoinSet,
        level: u32,
        direction: Direction,
    },
    /// `A → B, B → C ⇒ A → C`.
    Transitivity,
    /// `A → B ⇒ A + C → B + C`.
    Augmentation { context: Eidostate },
    /// `A + s → B + s ⇒ A → B`.
    Cancelation { state: Term },
    /// `A → s, A' ⊆ A ⇒ A' → s`.
    Subset,
    /// `A₁ → B₁, A₂ → B₂` with disjoint sides `⇒ A₁ ∪ A₂ → B₁ ∪ B₂`.
    DisjointUnion,
}

impl Rule {
    pub fn name(&self) -> &'static str {
        use Direction::*;
        match self {
            Rule::Similarity => "similarity",
            Rule::CoinFlip => "coin-flip",
            Rule::RecordAbsorb {
                direction: Forward, ..
            } => "record-absorb",
            Rule::RecordAbsorb {
                direction: Backward,
                ..
            } => "record-emit",
            Rule::EmptyBoxAbsorb {
                direction: Forward, ..
            } => "empty-box-absorb",
            Rule::EmptyBoxAbsorb {
                direction: Backward,
                ..
            } => "empty-box-emit",
            Rule::BoxLadder {
                direction: Forward, ..
            } => "box-pack",
            Rule::BoxLadder {
                direction: Backward,
                ..
            } => "box-unpack",
            Rule::Transitivity => "transitivity",
            Rule::Augmentation { .. } => "augmentation",
            Rule::Cancelation { .. } => "cancelation",
            Rule::Subset => "subset",
            Rule::DisjointUnion => "disjoint-union",
        }
    }

    /// Operands rendered as expression strings.
    pub fn operands(&self) -> Vec<String> {
        match self {
            Rule::RecordAbsorb { record, .. } => vec![record.to_string()],
            Rule::EmptyBoxAbsorb { base, .. } => vec![base.to_eidostate().to_string()],
            Rule::BoxLadder { base, level, .. } => {
                vec![base.to_eidostate().to_string(), level.to_string()]
            }
            Rule::Augmentation { context } => vec![context.to_string()],
            Rule::Cancelation { state } => vec![state.to_string()],
            _ => Vec::new(),
        }
    }

    fn premise_count(&self) -> usize {
        match self {
            Rule::Transitivity | Rule::DisjointUnion => 2,
            Rule::Augmentation { .. } | Rule::Cancelation { .. } | Rule::Subset => 1,
            _ => 0,
        }
    }

    /// Whether the step may be read backwards; only `Subset` cannot.
    pub fn is_reversible(&self) -> bool {
        !matches!(self, Rule::Subset)
    }
}

/// `src → dst`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    pub src: Eidostate,
    pub dst: Eidostate,
}

impl Relation {
    pub fn new(src: Eidostate, dst: Eidostate) -> Self {
        Self { src, dst }
    }

    pub fn reversed(&self) -> Self {
        Self::new(self.dst.clone(), self.src.clone())
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.src, self.dst)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub premises: Vec<usize>,
    pub rule: Rule,
    pub conclusion: Relation,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CertificateError {
    #[error("certificate has no steps")]
    Empty,
    #[error("step {step}: {reason}")]
    InvalidStep { step: usize, reason: String },
    #[error("last step concludes `{found}` but the claim is `{claimed}`")]
    ClaimMismatch { found: String, claimed: String },
    #[error("step {step} uses the subset rule and cannot be reversed")]
    Irreversible { step: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub steps: Vec<Step>,
    pub claim: Relation,
}

impl Certificate {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn verify(&self) -> Result<(), CertificateError> {
        let last = self.steps.last().ok_or(CertificateError::Empty)?;
        for (i, step) in self.steps.iter().enumerate() {
            check_step(&self.steps, i, step)
                .map_err(|reason| CertificateError::InvalidStep { step: i, reason })?;
        }
        if last.conclusion != self.claim {
            return Err(CertificateError::ClaimMismatch {
                found: last.conclusion.to_string(),
                claimed: self.claim.to_string(),
            });
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.verify().is_ok()
    }

    /// Whether every step is two-way, so the claim holds in both directions.
    pub fn is_reversible(&self) -> bool {
        self.steps.iter().all(|s| s.rule.is_reversible())
    }

    /// A certificate for `dst → src`, available when no step uses `Subset`.
    pub fn reverse(&self) -> Result<Certificate, CertificateError> {
        let mut steps: Vec<Step> = Vec::with_capacity(self.steps.len());
        for (i, s) in self.steps.iter().enumerate() {
            let rule = match &s.rule {
                Rule::Subset => return Err(CertificateError::Irreversible { step: i }),
                Rule::RecordAbsorb { record, direction } => Rule::RecordAbsorb {
                    record: record.clone(),
                    direction: direction.flip(),
                },
                Rule::EmptyBoxAbsorb { base, direction } => Rule::EmptyBoxAbsorb {
                    base: base.clone(),
                    direction: direction.flip(),
                },
                Rule::BoxLadder {
                    base,
                    level,
                    direction,
                } => Rule::BoxLadder {
                    base: base.clone(),
                    level: *level,
                    direction: direction.flip(),
                },
                other => other.clone(),
            };
            let premises = match s.rule {
                Rule::Transitivity => vec![s.premises[1], s.premises[0]],
                _ => s.premises.clone(),
            };
            steps.push(Step {
                premises,
                rule,
                conclusion: s.conclusion.reversed(),
            });
        }
        Ok(Certificate {
            steps,
            claim: self.claim.reversed(),
        })
    }

    /// One step per line: `<idx> <rule>[operands] <premises> <src> -> <dst>`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, s) in self.steps.iter().enumerate() {
            let mut rule = s.rule.name().to_string();
            let ops = s.rule.operands();
            if !ops.is_empty() {
                rule.push('[');
                rule.push_str(&ops.join(";"));
                rule.push(']');
            }
            let premises = if s.premises.is_empty() {
                "-".to_string()
            } else {
                s.premises
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            };
            out.push_str(&format!("{i} {rule} {premises} {}\n", s.conclusion));
        }
        out
    }
}

fn check_step(steps: &[Step], index: usize, step: &Step) -> Result<(), String> {
    if step.premises.len() != step.rule.premise_count() {
        return Err(format!(
            "{} takes {} premise(s), {} given",
            step.rule.name(),
            step.rule.premise_count(),
            step.premises.len()
        ));
    }
    let mut premises = Vec::with_capacity(step.premises.len());
    for &p in &step.premises {
        if p >= index {
            return Err(format!("premise {p} does not precede the step"));
        }
        premises.push(&steps[p].conclusion);
    }
    let Relation { src, dst } = &step.conclusion;
    let ensure = |ok: bool, msg: &str| if ok { Ok(()) } else { Err(msg.to_string()) };
    match &step.rule {
        Rule::Similarity => ensure(similar(src, dst), "sides are not similar"),
        Rule::CoinFlip => {
            let h = Eidostate::singleton(Term::atom(crate::term::Atom::Coin(Face::Heads)));
            let t = Eidostate::singleton(Term::atom(crate::term::Atom::Coin(Face::Tails)));
            ensure(
                (*src == h && *dst == t) || (*src == t && *dst == h),
                "coin flip relates only h and t",
            )
        }
        Rule::RecordAbsorb { record, direction } => {
            ensure(record.is_record(), "absorbed state is not a record")?;
            let (big, small) = oriented(*direction, src, dst);
            ensure(
                *big == combine(small, &Eidostate::singleton(record.clone())),
                "sides do not differ by the record",
            )
        }
        Rule::EmptyBoxAbsorb { base, direction } => {
            let (big, small) = oriented(*direction, src, dst);
            let empty = Eidostate::singleton(Term::boxed(base.clone(), 0));
            ensure(
                *big == combine(small, &empty),
                "sides do not differ by the empty box",
            )
        }
        Rule::BoxLadder {
            base,
            level,
            direction,
        } => {
            let (open, closed) = oriented(*direction, src, dst);
            let lower = Eidostate::singleton(Term::boxed(base.clone(), *level));
            let upper = Eidostate::singleton(Term::boxed(base.clone(), level + 1));
            ensure(
                *open == combine(&lower, &base.to_eidostate()) && *closed == upper,
                "not an instance of [K;n] + K <-> [K;n+1]",
            )
        }
        Rule::Transitivity => {
            let (a, b) = (premises[0], premises[1]);
            ensure(a.dst == b.src, "premises do not chain")?;
            ensure(
                a.src == *src && b.dst == *dst,
                "conclusion does not match the chain",
            )
        }
        Rule::Augmentation { context } => {
            let p = premises[0];
            ensure(
                *src == combine(&p.src, context) && *dst == combine(&p.dst, context),
                "conclusion is not the premise augmented by the context",
            )
        }
        Rule::Cancelation { state } => {
            let p = premises[0];
            let s = Eidostate::singleton(state.clone());
            ensure(
                p.src == combine(src, &s) && p.dst == combine(dst, &s),
                "premise is not the conclusion augmented by the canceled state",
            )
        }
        Rule::Subset => {
            let p = premises[0];
            ensure(
                p.dst.as_singleton().is_some(),
                "subset rule needs a single-state target",
            )?;
            ensure(*dst == p.dst, "target differs from the premise target")?;
            ensure(
                src.is_subset(&p.src),
                "source is not a subset of the premise source",
            )
        }
        Rule::DisjointUnion => {
            let (a, b) = (premises[0], premises[1]);
            ensure(
                a.src.is_disjoint(&b.src) && a.dst.is_disjoint(&b.dst),
                "premise sides overlap",
            )?;
            let su = a.src.union(&b.src).map_err(|e| e.to_string())?;
            let du = a.dst.union(&b.dst).map_err(|e| e.to_string())?;
            ensure(
                *src == su && *dst == du,
                "conclusion is not the union of the premises",
            )
        }
    }
}

fn oriented<'a>(
    direction: Direction,
    src: &'a Eidostate,
    dst: &'a Eidostate,
) -> (&'a Eidostate, &'a Eidostate) {
    match direction {
        Direction::Forward => (src, dst),
        Direction::Backward => (dst, src),
    }
}
