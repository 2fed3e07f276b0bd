//! Iterative-deepening proof search.
//!
//! The search plans over macro moves, each backed by a lemma that expands to
//! elementary steps only when a plan is found. Moves are tried in this fixed
//! order, so the first plan found at the smallest depth is deterministic:
//!
//! 1. `Close`: the current eidostate is similar to the target.
//! 2. `Uncanon`: the current canonical form is the target's; replay the
//!    target's canonicalization backwards.
//! 3. `Randomize`: `{h} → {h, t}`.
//! 4. `Canon`: reduce the current eidostate to `s_q + I_k`.
//! 5. `Double`: `s_q + I_k → s_q + I_2k`.
//! 6. `Split`: `s_q + I_k → s_q + I_(k+1)`.
//!
//! Depth counts moves. Every move preserves content and none lowers the
//! weight, so canonical nodes whose weight already exceeds the target's are
//! pruned.

use std::collections::HashMap;
use std::fmt;

use crate::canon::{
    canonical_form, canonical_form_of, labeled_form, realize_canonical, CanonError,
};
use crate::term::{combine, similar, Eidostate, Term};

use super::certificate::Certificate;
use super::proof::ProofBuilder;
use super::reachable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Move {
    Close,
    Uncanon,
    Randomize,
    Canon,
    Double,
    Split,
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Move::Close => "close",
            Move::Uncanon => "uncanon",
            Move::Randomize => "randomize",
            Move::Canon => "canon",
            Move::Double => "double",
            Move::Split => "split",
        })
    }
}

#[derive(Debug, Clone)]
pub enum SearchOutcome {
    Found(Certificate),
    /// No certificate within the depth although the decision says yes.
    DepthExhausted,
    /// The decision procedure says no.
    NotReachable,
}

impl SearchOutcome {
    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            SearchOutcome::Found(c) => Some(c),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Node {
    Raw(Eidostate),
    Canonical { q: usize, k: usize },
}

struct Goal {
    target: Eidostate,
    q: usize,
    k: usize,
}

/// Plans and assembles certificates, caching canonicalization proofs across
/// queries.
#[derive(Debug, Default)]
pub struct Searcher {
    canon_cache: HashMap<Eidostate, Certificate>,
}

pub fn search_derivation(
    e: &Eidostate,
    f: &Eidostate,
    max_depth: usize,
) -> Result<SearchOutcome, CanonError> {
    Searcher::new().search(e, f, max_depth)
}

impl Searcher {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn search(
        &mut self,
        e: &Eidostate,
        f: &Eidostate,
        max_depth: usize,
    ) -> Result<SearchOutcome, CanonError> {
        match self.plan(e, f, max_depth)? {
            Some(moves) => Ok(SearchOutcome::Found(self.assemble(e, f, &moves)?)),
            None if reachable(e, f).reachable => Ok(SearchOutcome::DepthExhausted),
            None => Ok(SearchOutcome::NotReachable),
        }
    }

    /// The shortest move sequence from `e` to `f`, if one fits in the depth.
    pub fn plan(
        &self,
        e: &Eidostate,
        f: &Eidostate,
        max_depth: usize,
    ) -> Result<Option<Vec<Move>>, CanonError> {
        canonical_form_of(e)?;
        let form = canonical_form_of(f)?;
        let goal = Goal {
            target: f.clone(),
            q: form.coins() as usize,
            k: form.records() as usize,
        };
        let start = Node::Raw(e.clone());
        let mut path = Vec::new();
        for depth in 1..=max_depth {
            if dfs(&start, depth, &goal, &mut path) {
                return Ok(Some(path));
            }
        }
        Ok(None)
    }

    fn canon_certificate(&mut self, e: &Eidostate) -> Result<Certificate, CanonError> {
        if let Some(c) = self.canon_cache.get(e) {
            return Ok(c.clone());
        }
        let c = canonical_form(e)?.certificate;
        self.canon_cache.insert(e.clone(), c.clone());
        Ok(c)
    }

    fn assemble(
        &mut self,
        e: &Eidostate,
        f: &Eidostate,
        moves: &[Move],
    ) -> Result<Certificate, CanonError> {
        let mut b = ProofBuilder::new();
        let mut last: Option<usize> = None;
        let mut node = Node::Raw(e.clone());
        for &m in moves {
            let (step, next) = match (&node, m) {
                (Node::Raw(a), Move::Close) => (b.similarity(a, f), Node::Raw(f.clone())),
                (Node::Canonical { q, k }, Move::Uncanon) => {
                    let reached = realize_canonical(*q, *k);
                    if reached == *f && last.is_some() {
                        node = Node::Raw(f.clone());
                        continue;
                    }
                    let back = self
                        .canon_certificate(f)?
                        .reverse()
                        .expect("canonicalization is reversible");
                    (b.import(&back), Node::Raw(f.clone()))
                }
                (Node::Raw(_), Move::Randomize) => (
                    b.coin_randomization(),
                    Node::Raw(Eidostate::new([Term::heads(), Term::tails()]).expect("uniform")),
                ),
                (Node::Raw(a), Move::Canon) => {
                    let form = canonical_form_of(a)?;
                    let cert = self.canon_certificate(a)?;
                    (
                        b.import(&cert),
                        Node::Canonical {
                            q: form.coins() as usize,
                            k: form.records() as usize,
                        },
                    )
                }
                (Node::Canonical { q, k }, Move::Double) => {
                    (double(&mut b, *q, *k), Node::Canonical { q: *q, k: 2 * k })
                }
                (Node::Canonical { q, k }, Move::Split) => {
                    (split(&mut b, *q, *k), Node::Canonical { q: *q, k: k + 1 })
                }
                _ => unreachable!("planner only emits applicable moves"),
            };
            last = Some(match last {
                Some(prev) => b.trans(prev, step),
                None => step,
            });
            node = next;
        }
        Ok(b.finish(last.expect("plans are nonempty")))
    }
}

fn dfs(node: &Node, depth: usize, goal: &Goal, path: &mut Vec<Move>) -> bool {
    if depth == 0 {
        return false;
    }
    for m in [
        Move::Close,
        Move::Uncanon,
        Move::Randomize,
        Move::Canon,
        Move::Double,
        Move::Split,
    ] {
        let next = match (node, m) {
            (Node::Raw(a), Move::Close) if similar(a, &goal.target) => {
                path.push(m);
                return true;
            }
            (Node::Canonical { q, k }, Move::Uncanon) if (*q, *k) == (goal.q, goal.k) => {
                path.push(m);
                return true;
            }
            (Node::Raw(a), Move::Randomize) if *a == Eidostate::singleton(Term::heads()) => {
                Node::Raw(Eidostate::new([Term::heads(), Term::tails()]).expect("uniform"))
            }
            (Node::Raw(a), Move::Canon) => {
                let form = canonical_form_of(a).expect("checked by the caller");
                let (q, k) = (form.coins() as usize, form.records() as usize);
                if q != goal.q || k > goal.k {
                    continue;
                }
                Node::Canonical { q, k }
            }
            (Node::Canonical { q, k }, Move::Double) if 2 * k <= goal.k => {
                Node::Canonical { q: *q, k: 2 * k }
            }
            (Node::Canonical { q, k }, Move::Split) if *k < goal.k => {
                Node::Canonical { q: *q, k: k + 1 }
            }
            _ => continue,
        };
        path.push(m);
        if dfs(&next, depth - 1, goal, path) {
            return true;
        }
        path.pop();
    }
    false
}

/// `{s_q + a} → {s_q + a, s_q + b}`, or `{a} → {a, b}` when `q = 0`.
fn carried_split(b: &mut ProofBuilder, q: usize, from: &Term, to: &Term) -> usize {
    if q == 0 {
        return b.record_split(from, to);
    }
    let stack = Term::stack(q).expect("q >= 1");
    let carried = |r: &Term| Term::pair(stack.clone(), r.clone());
    let behind = |r: &Term| Term::pair(r.clone(), stack.clone());
    let one = |t: Term| Eidostate::singleton(t);
    let swap_in = b.similarity(&one(carried(from)), &one(behind(from)));
    let spread = b.record_split(from, to);
    let lifted = b.augment(spread, &one(stack.clone()));
    let both = Eidostate::new([carried(from), carried(to)]).expect("uniform");
    let swap_out = b.similarity(&b.relation(lifted).dst.clone(), &both);
    b.chain(&[swap_in, lifted, swap_out])
}

/// Turns `realize_canonical(q, 1)` into its labeled form `{s_q + r0}` when the
/// two differ.
fn open_single(b: &mut ProofBuilder, q: usize, k: usize) -> Option<usize> {
    (k == 1 && q >= 1).then(|| {
        let stack = Eidostate::singleton(Term::stack(q).expect("q >= 1"));
        b.record_emit(&stack, &Term::indexed_record(0))
    })
}

fn prefixed(b: &mut ProofBuilder, first: Option<usize>, rest: usize) -> usize {
    match first {
        Some(f) => b.trans(f, rest),
        None => rest,
    }
}

/// Proves `realize_canonical(q, k) → realize_canonical(q, k + 1)`.
pub(crate) fn split(b: &mut ProofBuilder, q: usize, k: usize) -> usize {
    let open = open_single(b, q, k);
    let grow = carried_split(b, q, &Term::indexed_record(k - 1), &Term::indexed_record(k));
    let body = if k == 1 {
        grow
    } else {
        let keep = b.reflexive(&labeled_form(q, 0, k - 1));
        b.union(keep, grow)
    };
    prefixed(b, open, body)
}

/// Proves `realize_canonical(q, k) → realize_canonical(q, 2k)`.
pub(crate) fn double(b: &mut ProofBuilder, q: usize, k: usize) -> usize {
    let open = open_single(b, q, k);
    let n = labeled_form(q, 0, k);
    let r0 = Term::indexed_record(0);
    let bit = Eidostate::singleton(r0.clone());
    let tag = b.record_emit(&n, &r0);
    let front = b.similarity(&b.relation(tag).dst.clone(), &combine(&bit, &n));
    let spread = b.record_split(&r0, &Term::indexed_record(1));
    let lifted = b.augment(spread, &n);
    let records = combine(&labeled_form(0, 0, 2), &labeled_form(0, 0, k));
    let gathered = if q == 0 {
        records.clone()
    } else {
        combine(
            &Eidostate::singleton(Term::stack(q).expect("q >= 1")),
            &records,
        )
    };
    let gather = b.similarity(&b.relation(lifted).dst.clone(), &gathered);
    let carrier = (q > 0).then(|| Term::stack(q).expect("q >= 1"));
    let list: Vec<Term> = records.iter().cloned().collect();
    let relabel = b.relabel(carrier.as_ref(), &list, 0);
    let body = b.chain(&[tag, front, lifted, gather, relabel]);
    prefixed(b, open, body)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{parse_eidostate, Declarations};

    fn e(s: &str) -> Eidostate {
        parse_eidostate(s, &Declarations::default()).unwrap()
    }

    fn found(src: &str, dst: &str, depth: usize) -> Certificate {
        match search_derivation(&e(src), &e(dst), depth).unwrap() {
            SearchOutcome::Found(c) => {
                c.verify().unwrap();
                assert_eq!(c.claim.src, e(src));
                assert_eq!(c.claim.dst, e(dst));
                c
            }
            other => panic!("{src} -> {dst}: {other:?}"),
        }
    }

    #[test]
    fn split_and_double_lemmas_verify() {
        for q in 0..3 {
            for k in 1..5 {
                let mut b = ProofBuilder::new();
                let last = split(&mut b, q, k);
                let c = b.finish(last);
                c.verify().unwrap();
                assert_eq!(c.claim.src, realize_canonical(q, k));
                assert_eq!(c.claim.dst, realize_canonical(q, k + 1));

                let mut b = ProofBuilder::new();
                let last = double(&mut b, q, k);
                let c = b.finish(last);
                c.verify().unwrap();
                assert_eq!(c.claim.dst, realize_canonical(q, 2 * k));
            }
        }
    }

    #[test]
    fn coin_randomization_is_found_directly() {
        let c = found("h", "{h,t}", 12);
        assert!(c.steps.iter().any(|s| s.rule.name() == "box-pack"));
        assert_eq!(c.steps.last().unwrap().rule.name(), "transitivity");
    }

    #[test]
    fn corpus() {
        found("{h,t}", "{(h+r0),(h+r1)}", 16);
        found("((h+{r0,r1})+b0)", "b1", 16);
        found("r0", "{r0,r1}", 16);
        found("{b2,(h+h)}", "{(b2+r0),((h+h)+r0),((t+t)+r0)}", 16);
    }

    #[test]
    fn tri_state_outcomes() {
        let s = Searcher::new();
        assert!(s.plan(&e("{h,t}"), &e("h"), 12).unwrap().is_none());
        assert!(matches!(
            search_derivation(&e("{h,t}"), &e("h"), 12).unwrap(),
            SearchOutcome::NotReachable
        ));
        assert!(matches!(
            search_derivation(&e("r0"), &e("{r0,r1,r2,r3,r4}"), 2).unwrap(),
            SearchOutcome::DepthExhausted
        ));
    }
}
