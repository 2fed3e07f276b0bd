//! Random coin/record/box states for tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use eidos_core::rational::ratio;
use eidos_core::{Atom, CoinSet, Eidostate, Rational, Term};

pub use rand::SeedableRng;
pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn triple_box(level: u32) -> Term {
    let k = CoinSet::new([
        Term::pair(Term::heads(), Term::heads()),
        Term::pair(Term::heads(), Term::tails()),
        Term::pair(Term::tails(), Term::heads()),
    ])
    .unwrap();
    Term::boxed(k, level)
}

fn coin(rng: &mut TestRng) -> Term {
    if rng.gen_bool(0.5) {
        Term::heads()
    } else {
        Term::tails()
    }
}

fn leaf(rng: &mut TestRng) -> Term {
    match rng.gen_range(0..10) {
        0..=2 => coin(rng),
        3..=5 => Term::indexed_record(rng.gen_range(0..4)),
        6..=8 => Term::basic_box(rng.gen_range(0..4)),
        _ => triple_box(rng.gen_range(0..2)),
    }
}

/// A random term with at most `depth` levels of pairing.
pub fn term(rng: &mut TestRng, depth: u32) -> Term {
    if depth == 0 || rng.gen_bool(0.4) {
        leaf(rng)
    } else {
        Term::pair(term(rng, depth - 1), term(rng, depth - 1))
    }
}

fn coins_of(rng: &mut TestRng, n: u32) -> Term {
    let mut t = coin(rng);
    for _ in 1..n {
        t = Term::pair(coin(rng), t);
    }
    t
}

/// A term with the content of `t`, leaves swapped for random equal-content
/// alternatives of varying weight.
pub fn variant(rng: &mut TestRng, t: &Term) -> Term {
    if let Some((l, r)) = t.as_pair() {
        return Term::pair(variant(rng, l), variant(rng, r));
    }
    let q = t.content_ref().get("coins").to_integer();
    let n: u32 = q.try_into().unwrap();
    if t.is_record() || (n == 0 && rng.gen_bool(0.5)) {
        return match rng.gen_range(0..3) {
            0 => Term::basic_box(0),
            _ => Term::indexed_record(rng.gen_range(0..4)),
        };
    }
    let basic = matches!(t.as_atom(), Some(Atom::Box { base, .. }) if base.is_basic());
    if t.is_mechanical() || basic {
        return match rng.gen_range(0..3) {
            0 => Term::basic_box(n),
            1 if n > 0 => Term::pair(Term::basic_box(n - 1), coin(rng)),
            _ if n > 0 => coins_of(rng, n),
            _ => Term::basic_box(0),
        };
    }
    t.clone()
}

/// A random eidostate of up to `max_states` states sharing one content.
pub fn eidostate(rng: &mut TestRng, depth: u32, max_states: usize) -> Eidostate {
    let base = term(rng, depth);
    let count = rng.gen_range(1..=max_states);
    let mut states: BTreeSet<Term> = BTreeSet::new();
    states.insert(base.clone());
    for _ in 1..count {
        states.insert(variant(rng, &base));
    }
    Eidostate::new(states).unwrap()
}

/// A random positive rational distribution of length `n`, denominators
/// at most `max_den`.
pub fn distribution(rng: &mut TestRng, n: usize, max_den: i64) -> Vec<Rational> {
    loop {
        let den = rng.gen_range(n as i64..=max_den.max(n as i64));
        let mut cuts: Vec<i64> = (1..den).collect();
        cuts.shuffle(rng);
        let mut cuts: Vec<i64> = cuts.into_iter().take(n - 1).collect();
        cuts.sort();
        let mut prev = 0;
        let mut out = Vec::with_capacity(n);
        for c in cuts.into_iter().chain(std::iter::once(den)) {
            out.push(ratio(c - prev, den));
            prev = c;
        }
        if out.len() == n {
            return out;
        }
    }
}

/// `{(h+h),(h+t),(t+h),(t+t)}`: boxes of four two-coin states.
pub fn quad_coins() -> CoinSet {
    let (h, t) = (Term::heads(), Term::tails());
    CoinSet::new([
        Term::pair(h.clone(), h.clone()),
        Term::pair(h.clone(), t.clone()),
        Term::pair(t.clone(), h),
        Term::pair(t.clone(), t),
    ])
    .unwrap()
}

/// One to three distinct states with random rational probabilities.
pub fn ensemble(rng: &mut TestRng) -> eidos_core::Ensemble {
    let n = rng.gen_range(1..=3);
    let mut states: Vec<Term> = Vec::new();
    while states.len() < n {
        let t = term(rng, 2);
        if !states.contains(&t) {
            states.push(t);
        }
    }
    let probs = distribution(rng, n, 24);
    eidos_core::Ensemble::new(states, probs).unwrap()
}
