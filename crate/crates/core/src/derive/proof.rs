//! Incremental construction of certificates plus the reusable lemmas the
//! canonicalizer and the search are assembled from.

use crate::term::{combine, CoinSet, Eidostate, Term};

use super::certificate::{Certificate, Direction, Relation, Rule, Step};

/// Appends steps and hands back their indices for later citation.
#[derive(Debug, Default, Clone)]
pub struct ProofBuilder {
    steps: Vec<Step>,
}

fn single(t: Term) -> Eidostate {
    Eidostate::singleton(t)
}

impl ProofBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn relation(&self, i: usize) -> &Relation {
        &self.steps[i].conclusion
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    fn push(&mut self, premises: Vec<usize>, rule: Rule, src: Eidostate, dst: Eidostate) -> usize {
        self.steps.push(Step {
            premises,
            rule,
            conclusion: Relation::new(src, dst),
        });
        self.steps.len() - 1
    }

    pub fn similarity(&mut self, src: &Eidostate, dst: &Eidostate) -> usize {
        debug_assert!(crate::term::similar(src, dst), "{src} !~ {dst}");
        self.push(Vec::new(), Rule::Similarity, src.clone(), dst.clone())
    }

    pub fn reflexive(&mut self, a: &Eidostate) -> usize {
        self.similarity(a, a)
    }

    /// `{h} → {t}` or `{t} → {h}`.
    pub fn coin_flip(&mut self, from: &Term) -> usize {
        let to = if *from == Term::heads() {
            Term::tails()
        } else {
            Term::heads()
        };
        self.push(Vec::new(), Rule::CoinFlip, single(from.clone()), single(to))
    }

    /// `A + r → A`.
    pub fn record_absorb(&mut self, a: &Eidostate, record: &Term) -> usize {
        let big = combine(a, &single(record.clone()));
        self.push(
            Vec::new(),
            Rule::RecordAbsorb {
                record: record.clone(),
                direction: Direction::Forward,
            },
            big,
            a.clone(),
        )
    }

    /// `A → A + r`.
    pub fn record_emit(&mut self, a: &Eidostate, record: &Term) -> usize {
        let big = combine(a, &single(record.clone()));
        self.push(
            Vec::new(),
            Rule::RecordAbsorb {
                record: record.clone(),
                direction: Direction::Backward,
            },
            a.clone(),
            big,
        )
    }

    /// `A + [K;0] → A`.
    pub fn empty_box_absorb(&mut self, a: &Eidostate, base: &CoinSet) -> usize {
        let big = combine(a, &single(Term::boxed(base.clone(), 0)));
        self.push(
            Vec::new(),
            Rule::EmptyBoxAbsorb {
                base: base.clone(),
                direction: Direction::Forward,
            },
            big,
            a.clone(),
        )
    }

    /// `[K;n] + K → [K;n+1]`.
    pub fn box_pack(&mut self, base: &CoinSet, level: u32) -> usize {
        let open = combine(
            &single(Term::boxed(base.clone(), level)),
            &base.to_eidostate(),
        );
        let closed = single(Term::boxed(base.clone(), level + 1));
        self.push(
            Vec::new(),
            Rule::BoxLadder {
                base: base.clone(),
                level,
                direction: Direction::Forward,
            },
            open,
            closed,
        )
    }

    /// `[K;n+1] → [K;n] + K`.
    pub fn box_unpack(&mut self, base: &CoinSet, level: u32) -> usize {
        let open = combine(
            &single(Term::boxed(base.clone(), level)),
            &base.to_eidostate(),
        );
        let closed = single(Term::boxed(base.clone(), level + 1));
        self.push(
            Vec::new(),
            Rule::BoxLadder {
                base: base.clone(),
                level,
                direction: Direction::Backward,
            },
            closed,
            open,
        )
    }

    pub fn trans(&mut self, i: usize, j: usize) -> usize {
        let src = self.relation(i).src.clone();
        let dst = self.relation(j).dst.clone();
        debug_assert_eq!(self.relation(i).dst, self.relation(j).src);
        self.push(vec![i, j], Rule::Transitivity, src, dst)
    }

    /// Folds transitivity over consecutive links.
    pub fn chain(&mut self, links: &[usize]) -> usize {
        let (&first, rest) = links.split_first().expect("nonempty chain");
        rest.iter().fold(first, |acc, &next| self.trans(acc, next))
    }

    pub fn augment(&mut self, i: usize, context: &Eidostate) -> usize {
        let r = self.relation(i);
        let src = combine(&r.src, context);
        let dst = combine(&r.dst, context);
        self.push(
            vec![i],
            Rule::Augmentation {
                context: context.clone(),
            },
            src,
            dst,
        )
    }

    /// From `A + s → B + s` concludes `A → B`.
    pub fn cancel(&mut self, i: usize, state: &Term) -> usize {
        let r = self.relation(i);
        let strip = |e: &Eidostate| {
            Eidostate::new(e.iter().map(|t| {
                let (l, s) = t.as_pair().expect("paired with the canceled state");
                debug_assert_eq!(s, state);
                l.clone()
            }))
            .expect("projection of a uniform set")
        };
        let (src, dst) = (strip(&r.src), strip(&r.dst));
        self.push(
            vec![i],
            Rule::Cancelation {
                state: state.clone(),
            },
            src,
            dst,
        )
    }

    pub fn subset(&mut self, i: usize, src: Eidostate) -> usize {
        let dst = self.relation(i).dst.clone();
        self.push(vec![i], Rule::Subset, src, dst)
    }

    pub fn union(&mut self, i: usize, j: usize) -> usize {
        let (a, b) = (self.relation(i), self.relation(j));
        let src = a.src.union(&b.src).expect("uniform union");
        let dst = a.dst.union(&b.dst).expect("uniform union");
        self.push(vec![i, j], Rule::DisjointUnion, src, dst)
    }

    /// Folds disjoint union over several steps.
    pub fn union_all(&mut self, parts: &[usize]) -> usize {
        let (&first, rest) = parts.split_first().expect("nonempty union");
        rest.iter().fold(first, |acc, &next| self.union(acc, next))
    }

    /// Copies a finished certificate in and returns the index of its claim.
    pub fn import(&mut self, cert: &Certificate) -> usize {
        let offset = self.steps.len();
        for s in &cert.steps {
            self.steps.push(Step {
                premises: s.premises.iter().map(|p| p + offset).collect(),
                rule: s.rule.clone(),
                conclusion: s.conclusion.clone(),
            });
        }
        self.steps.len() - 1
    }

    pub fn finish(self, last: usize) -> Certificate {
        let claim = self.relation(last).clone();
        let mut steps = self.steps;
        steps.truncate(last + 1);
        Certificate { steps, claim }
    }

    /// `{h} → {h, t}` through the empty basic box:
    /// `b0 + h → b1 → b0 + {h,t}`, then cancel `b0`.
    pub fn coin_randomization(&mut self) -> usize {
        let (h, t, b0) = (Term::heads(), Term::tails(), Term::basic_box(0));
        let basic = CoinSet::basic();
        let pack = self.box_pack(&basic, 0);
        let narrowed = self.subset(pack, single(Term::pair(b0.clone(), h.clone())));
        let unpack = self.box_unpack(&basic, 0);
        let through = self.trans(narrowed, unpack);
        let hb = single(Term::pair(h.clone(), b0.clone()));
        let into = self.similarity(&hb, &self.relation(through).src.clone());
        let both = Eidostate::new([Term::pair(h, b0.clone()), Term::pair(t, b0.clone())])
            .expect("uniform");
        let out = self.similarity(&self.relation(through).dst.clone(), &both);
        let whole = self.chain(&[into, through, out]);
        self.cancel(whole, &b0)
    }

    /// `{a} → {a, b}` for distinct record states `a`, `b`, using a coin as a
    /// temporary carrier.
    pub fn record_split(&mut self, a: &Term, b: &Term) -> usize {
        let h = Term::heads();
        let hs = single(h.clone());
        let ah = single(Term::pair(a.clone(), h.clone()));
        let ha = single(Term::pair(h.clone(), a.clone()));
        let swap = self.similarity(&ah, &ha);
        let drop = self.record_absorb(&hs, a);
        let spread = self.coin_randomization();
        let mark_h = self.record_emit(&hs, a);
        let flip = self.coin_flip(&Term::tails());
        let mark_t = self.record_emit(&hs, b);
        let from_t = self.trans(flip, mark_t);
        let mark = self.union(mark_h, from_t);
        let target = Eidostate::new([
            Term::pair(a.clone(), h.clone()),
            Term::pair(b.clone(), h.clone()),
        ])
        .expect("uniform");
        let back = self.similarity(&self.relation(mark).dst.clone(), &target);
        let whole = self.chain(&[swap, drop, spread, mark, back]);
        self.cancel(whole, &h)
    }

    /// Replaces the record part of every state: proves
    /// `{c + ρ_i} → {c + r_(offset+i)}` (or `{ρ_i} → {r_(offset+i)}` without a
    /// carrier `c`), the `ρ_i` being record states listed in set order.
    pub fn relabel(&mut self, carrier: Option<&Term>, records: &[Term], offset: usize) -> usize {
        let mut parts = Vec::with_capacity(records.len());
        for (i, rho) in records.iter().enumerate() {
            let fresh = Term::indexed_record(offset + i);
            parts.push(self.swap_record(carrier, rho, &fresh));
        }
        self.union_all(&parts)
    }

    /// `{c + old} → {c + new}`, or `{old} → {new}` without a carrier.
    pub fn swap_record(&mut self, carrier: Option<&Term>, old: &Term, new: &Term) -> usize {
        match carrier {
            Some(c) => {
                let cs = single(c.clone());
                let drop = self.record_absorb(&cs, old);
                let add = self.record_emit(&cs, new);
                self.trans(drop, add)
            }
            None if old == new => self.reflexive(&single(old.clone())),
            None => {
                let add = self.record_emit(&single(old.clone()), new);
                let swapped = single(Term::pair(new.clone(), old.clone()));
                let swap = self.similarity(&self.relation(add).dst.clone(), &swapped);
                let drop = self.record_absorb(&single(new.clone()), old);
                self.chain(&[add, swap, drop])
            }
        }
    }
}
