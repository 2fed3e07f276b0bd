//! Exhaustive enumeration of small terms and eidostates.

use std::collections::BTreeMap;

use crate::term::{ContentVector, Eidostate, Term};

/// `h, t, r0, r1, b0, b1`.
pub fn default_atoms() -> Vec<Term> {
    vec![
        Term::heads(),
        Term::tails(),
        Term::indexed_record(0),
        Term::indexed_record(1),
        Term::basic_box(0),
        Term::basic_box(1),
    ]
}

/// Every term with between 1 and `max_atoms` leaves drawn from `atoms`, over
/// every bracketing, sorted.
pub fn terms(atoms: &[Term], max_atoms: usize) -> Vec<Term> {
    let mut by_size: Vec<Vec<Term>> = vec![Vec::new(), atoms.to_vec()];
    for n in 2..=max_atoms {
        let mut level = Vec::new();
        for left in 1..n {
            for l in &by_size[left] {
                for r in &by_size[n - left] {
                    level.push(Term::pair(l.clone(), r.clone()));
                }
            }
        }
        by_size.push(level);
    }
    let mut out: Vec<Term> = by_size.into_iter().take(max_atoms + 1).flatten().collect();
    out.sort();
    out.dedup();
    out
}

/// Terms grouped by content.
pub fn by_content(terms: &[Term]) -> BTreeMap<ContentVector, Vec<Term>> {
    let mut groups: BTreeMap<ContentVector, Vec<Term>> = BTreeMap::new();
    for t in terms {
        groups.entry(t.content()).or_default().push(t.clone());
    }
    groups
}

/// Every eidostate of at most `max_states` of the given terms.
pub fn eidostates(terms: &[Term], max_states: usize) -> Vec<Eidostate> {
    let mut out = Vec::new();
    for group in by_content(terms).values() {
        let mut chosen = Vec::new();
        subsets(group, 0, max_states, &mut chosen, &mut out);
    }
    out.sort();
    out
}

fn subsets(
    group: &[Term],
    from: usize,
    room: usize,
    chosen: &mut Vec<Term>,
    out: &mut Vec<Eidostate>,
) {
    for i in from..group.len() {
        chosen.push(group[i].clone());
        out.push(Eidostate::new(chosen.iter().cloned()).expect("same content"));
        if room > 1 {
            subsets(group, i + 1, room - 1, chosen, out);
        }
        chosen.pop();
    }
}

/// Every `stride`-th item, starting from the first.
pub fn stride_sample<T: Clone>(items: &[T], target: usize) -> Vec<T> {
    if items.len() <= target || target == 0 {
        return items.to_vec();
    }
    let stride = items.len().div_ceil(target);
    items.iter().step_by(stride).cloned().collect()
}
