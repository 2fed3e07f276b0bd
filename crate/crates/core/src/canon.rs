//! Reduction of coin/record/box eidostates to a stack of coins next to an
//! information state, with a certificate for the equivalence.
//!
//! Every state is reduced on its own to `s_q + r` for a block of fresh record
//! labels, and the per-state results are joined by disjoint union. Pairs and
//! boxes reduce their two halves separately, swap them into place by
//! similarity and merge the two record parts into fresh labels.

use std::fmt;

use num_traits::ToPrimitive;

use crate::derive::certificate::Certificate;
use crate::derive::proof::ProofBuilder;
use crate::term::{combine, Atom, ContentVector, Eidostate, Face, Term, Weight, COINS};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CanonError {
    #[error("`{0}` contains abstract atoms, which have no canonical form")]
    AbstractPresent(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    pub q: ContentVector,
    pub k: Weight,
}

impl CanonicalForm {
    /// Number of coins in the stack.
    pub fn coins(&self) -> u64 {
        self.q
            .get(COINS)
            .to_integer()
            .to_u64()
            .expect("coin count is a nonnegative integer")
    }

    /// Number of records in the information state.
    pub fn records(&self) -> u64 {
        self.k
            .value()
            .to_integer()
            .to_u64()
            .expect("coin-box weights are small positive integers")
    }

    pub fn realize(&self) -> Eidostate {
        realize_canonical(self.coins() as usize, self.records() as usize)
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{} + I{}", self.coins(), self.records())
    }
}

#[derive(Debug, Clone)]
pub struct Canonicalization {
    pub form: CanonicalForm,
    /// Proves `E → realize_canonical(q, k)`; every step is reversible.
    pub certificate: Certificate,
}

/// `s_q + I_k`, with `I_k` alone for `q = 0` and `{s_q}` for `k = 1`.
pub fn realize_canonical(q: usize, k: usize) -> Eidostate {
    assert!(k >= 1, "an information state has at least one record");
    let info = Eidostate::information(k).expect("records are uniform");
    if q == 0 {
        return info;
    }
    let stack = Eidostate::singleton(Term::stack(q).expect("q >= 1"));
    if k == 1 {
        stack
    } else {
        combine(&stack, &info)
    }
}

/// The canonical form without building a certificate.
pub fn canonical_form_of(e: &Eidostate) -> Result<CanonicalForm, CanonError> {
    if e.has_abstract() {
        return Err(CanonError::AbstractPresent(e.to_string()));
    }
    Ok(CanonicalForm {
        q: e.content(),
        k: e.weight(),
    })
}

pub fn canonical_form(e: &Eidostate) -> Result<Canonicalization, CanonError> {
    let form = canonical_form_of(e)?;
    let q = form.coins() as usize;
    let k = form.records() as usize;
    let mut b = ProofBuilder::new();
    let mut last = canon_set(&mut b, e, 0);
    if k == 1 && q >= 1 {
        let stack = Eidostate::singleton(Term::stack(q).expect("q >= 1"));
        let drop = b.record_absorb(&stack, &Term::indexed_record(0));
        last = b.trans(last, drop);
    }
    let certificate = b.finish(last);
    debug_assert_eq!(certificate.claim.dst, realize_canonical(q, k));
    Ok(Canonicalization { form, certificate })
}

/// `{s_q + r_i}` (or `{r_i}` when `q = 0`) for `i` in `offset..offset+k`.
pub(crate) fn labeled_form(q: usize, offset: usize, k: usize) -> Eidostate {
    let records = Eidostate::new((offset..offset + k).map(Term::indexed_record)).expect("uniform");
    if q == 0 {
        records
    } else {
        combine(
            &Eidostate::singleton(Term::stack(q).expect("q >= 1")),
            &records,
        )
    }
}

fn coins_of(e: &Eidostate) -> usize {
    e.content()
        .get(COINS)
        .to_integer()
        .to_usize()
        .expect("coin count")
}

fn weight_of(e: &Eidostate) -> usize {
    e.weight()
        .value()
        .to_integer()
        .to_usize()
        .expect("integral weight")
}

/// Proves `E → labeled_form(q, offset, weight(E))`.
pub(crate) fn canon_set(b: &mut ProofBuilder, e: &Eidostate, offset: usize) -> usize {
    let mut parts = Vec::with_capacity(e.len());
    let mut next = offset;
    for t in e {
        parts.push(canon_state(b, t, next));
        next += weight_of(&Eidostate::singleton(t.clone()));
    }
    b.union_all(&parts)
}

fn canon_state(b: &mut ProofBuilder, t: &Term, offset: usize) -> usize {
    let label = Term::indexed_record(offset);
    let one = Eidostate::singleton(t.clone());
    if let Some((l, r)) = t.as_pair() {
        let (l, r) = (
            Eidostate::singleton(l.clone()),
            Eidostate::singleton(r.clone()),
        );
        return canon_product(b, &l, &r, offset);
    }
    match t.as_atom().expect("leaf") {
        Atom::Coin(Face::Heads) => b.record_emit(&one, &label),
        Atom::Coin(Face::Tails) => {
            let flip = b.coin_flip(t);
            let emit = b.record_emit(&Eidostate::singleton(Term::heads()), &label);
            b.trans(flip, emit)
        }
        Atom::Record(_) => b.swap_record(None, t, &label),
        Atom::Box { base, level: 0 } => {
            let emit = b.record_emit(&one, &label);
            let swapped = Eidostate::singleton(Term::pair(label.clone(), t.clone()));
            let swap = b.similarity(&b.relation(emit).dst.clone(), &swapped);
            let drop = b.empty_box_absorb(&Eidostate::singleton(label), base);
            b.chain(&[emit, swap, drop])
        }
        Atom::Box { base, level } => {
            let unpack = b.box_unpack(base, level - 1);
            let lower = Eidostate::singleton(Term::boxed(base.clone(), level - 1));
            let rest = canon_product(b, &lower, &base.to_eidostate(), offset);
            b.trans(unpack, rest)
        }
        Atom::Abstract(_) => unreachable!("rejected before canonicalization"),
    }
}

/// Proves `A + B → labeled_form(q_A + q_B, offset, w_A · w_B)`.
fn canon_product(b: &mut ProofBuilder, a: &Eidostate, bb: &Eidostate, offset: usize) -> usize {
    let (qa, wa) = (coins_of(a), weight_of(a));
    let (qb, wb) = (coins_of(bb), weight_of(bb));
    // Scratch labels live past the final block so they never collide with it.
    let scratch_a = offset + wa * wb;
    let scratch_b = scratch_a + wa;

    let ca = canon_set(b, a, scratch_a);
    let na = b.relation(ca).dst.clone();
    let left = b.augment(ca, bb);
    let swapped = combine(bb, &na);
    let swap = b.similarity(&b.relation(left).dst.clone(), &swapped);
    let cb = canon_set(b, bb, scratch_b);
    let right = b.augment(cb, &na);

    let q = qa + qb;
    let rec_a = labeled_form(0, scratch_a, wa);
    let rec_b = labeled_form(0, scratch_b, wb);
    let records = combine(&rec_b, &rec_a);
    let gathered = if q == 0 {
        records.clone()
    } else {
        combine(
            &Eidostate::singleton(Term::stack(q).expect("q >= 1")),
            &records,
        )
    };
    let gather = b.similarity(&b.relation(right).dst.clone(), &gathered);
    let carrier = (q > 0).then(|| Term::stack(q).expect("q >= 1"));
    let list: Vec<Term> = records.iter().cloned().collect();
    let relabel = b.relabel(carrier.as_ref(), &list, offset);
    b.chain(&[left, swap, right, gather, relabel])
}
