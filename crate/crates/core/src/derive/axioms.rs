//! Bounded checks of the axioms on a finite universe of small eidostates.
//!
//! Universally quantified statements over one eidostate are checked on the
//! whole universe; statements over pairs or triples run on stride samples so
//! the report stays cheap. Every check consults [`reachable`] only.

use std::collections::BTreeMap;
use std::fmt;

use crate::term::{combine, prime_factors, similar, split, ContentVector, Eidostate, Term, COINS};

use super::reachable;
use super::universe::{by_content, default_atoms, eidostates, stride_sample, terms};

/// Largest repetition count tried for the stability axiom.
pub const STABILITY_CAP: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

#[derive(Debug, Clone)]
pub struct AxiomReport {
    pub id: &'static str,
    pub title: &'static str,
    pub status: Status,
    /// Instances examined.
    pub checked: usize,
    pub witness: Option<String>,
    pub counterexample: Option<String>,
    pub caveat: Option<String>,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub bound: usize,
    pub terms: usize,
    pub eidostates: usize,
    pub axioms: Vec<AxiomReport>,
}

impl Report {
    pub fn get(&self, id: &str) -> Option<&AxiomReport> {
        self.axioms.iter().find(|a| a.id == id)
    }

    pub fn all_pass(&self) -> bool {
        self.axioms.iter().all(|a| a.status == Status::Pass)
    }
}

struct Check {
    report: AxiomReport,
    fallback: Option<String>,
}

impl Check {
    fn new(id: &'static str, title: &'static str) -> Self {
        Self {
            report: AxiomReport {
                id,
                title,
                status: Status::Pass,
                checked: 0,
                witness: None,
                counterexample: None,
                caveat: None,
            },
            fallback: None,
        }
    }

    /// Counts one instance; the first failure becomes the counterexample and
    /// the first instance the default witness.
    fn instance(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.report.checked += 1;
        if !ok && self.report.counterexample.is_none() {
            self.report.status = Status::Fail;
            self.report.counterexample = Some(describe());
        } else if ok && self.report.checked == 1 {
            self.fallback = Some(describe());
        }
    }

    fn witness(&mut self, describe: impl FnOnce() -> String) {
        if self.report.witness.is_none() {
            self.report.witness = Some(describe());
        }
    }

    fn caveat(mut self, text: &str) -> Self {
        self.report.caveat = Some(text.to_string());
        self
    }

    fn done(mut self) -> AxiomReport {
        if self.report.witness.is_none() {
            self.report.witness = self.fallback;
        }
        self.report
    }
}

fn reach(a: &Eidostate, b: &Eidostate) -> bool {
    reachable(a, b).reachable
}

fn one(t: &Term) -> Eidostate {
    Eidostate::singleton(t.clone())
}

fn info(k: usize) -> Eidostate {
    Eidostate::information(k).expect("records are uniform")
}

/// `n·A = A + (A + (... + A))`.
fn repeat(a: &Eidostate, n: usize) -> Eidostate {
    let mut acc = a.clone();
    for _ in 1..n {
        acc = combine(a, &acc);
    }
    acc
}

/// Same-content pairs from a sample, grouped.
fn content_groups(sample: &[Eidostate]) -> BTreeMap<ContentVector, Vec<Eidostate>> {
    let mut groups: BTreeMap<ContentVector, Vec<Eidostate>> = BTreeMap::new();
    for e in sample {
        groups.entry(e.content()).or_default().push(e.clone());
    }
    groups
}

pub fn check_axioms(size_bound: usize) -> Report {
    let atoms = default_atoms();
    let all_terms = terms(&atoms, size_bound);
    let pool = stride_sample(&all_terms, 600);
    let mut universe = eidostates(&pool, 2);
    universe.extend(all_terms.iter().map(one));
    universe.sort();
    universe.dedup();

    let sample = stride_sample(&universe, 200);
    let groups = content_groups(&sample);
    let matrix: Vec<Vec<bool>> = sample
        .iter()
        .map(|a| sample.iter().map(|b| reach(a, b)).collect())
        .collect();

    let mut axioms = Vec::new();

    // I(a): finite prime factorization.
    let mut c = Check::new("I(a)", "finite prime Cartesian factorization");
    for e in &universe {
        let factors = prime_factors(e);
        let size: usize = factors.iter().map(Eidostate::len).product();
        let primes = factors.iter().all(|f| split(f).is_none());
        c.instance(size == e.len() && primes, || format!("{e}"));
        if factors.len() > 2 && e.len() > 1 {
            c.witness(|| {
                let parts: Vec<String> = factors.iter().map(|f| f.to_string()).collect();
                format!("{e} = {}", parts.join(" + "))
            });
        }
    }
    axioms.push(c.done());

    // I(b): A + B is an eidostate and factors back into A and B.
    let mut c = Check::new("I(b)", "closure under +");
    let small = stride_sample(&sample, 60);
    for a in &small {
        for b in &small {
            let ab = combine(a, b);
            let valid = Eidostate::new(ab.iter().cloned()).is_ok();
            c.instance(valid && split(&ab) == Some((a.clone(), b.clone())), || {
                format!("{a} + {b}")
            });
        }
    }
    axioms.push(c.done());

    // I(c): nonempty subsets.
    let mut c = Check::new("I(c)", "nonempty subsets are eidostates");
    for e in &universe {
        for t in e {
            c.instance(Eidostate::new([t.clone()]).is_ok(), || {
                format!("{{{t}}} in {e}")
            });
        }
    }
    axioms.push(c.done());

    // II(a): similar eidostates reach each other.
    let mut c = Check::new("II(a)", "similarity implies reachability");
    for a in &universe {
        let Some((l, r)) = split(a) else { continue };
        let mut rearranged = vec![combine(&r, &l)];
        if let Some((l1, l2)) = split(&l) {
            rearranged.push(combine(&l1, &combine(&l2, &r)));
        }
        for b in rearranged {
            let ok = similar(a, &b) && reach(a, &b);
            c.witness(|| format!("{a} ~ {b}"));
            c.instance(ok, || format!("{a} ~ {b}"));
        }
    }
    axioms.push(c.done());

    // II(b): transitivity.
    let mut c = Check::new("II(b)", "transitivity");
    let n = sample.len();
    for i in 0..n {
        for j in 0..n {
            if !matrix[i][j] {
                continue;
            }
            for k in 0..n {
                if matrix[j][k] {
                    c.instance(matrix[i][k], || {
                        format!("{} -> {} -> {}", sample[i], sample[j], sample[k])
                    });
                }
            }
        }
    }
    axioms.push(c.done());

    // II(c): augmentation.
    let contexts = [
        one(&Term::heads()),
        one(&Term::indexed_record(0)),
        one(&Term::basic_box(1)),
        info(2),
        Eidostate::new([Term::heads(), Term::tails()]).expect("uniform"),
    ];
    let mut c = Check::new("II(c)", "augmentation");
    for group in groups.values() {
        for a in group {
            for b in group {
                if !reach(a, b) {
                    continue;
                }
                for ctx in &contexts {
                    let ok = reach(&combine(a, ctx), &combine(b, ctx));
                    c.instance(ok, || format!("{a} -> {b} with context {ctx}"));
                }
            }
        }
    }
    axioms.push(c.done());

    // II(d): cancelation of a single state.
    let mut c = Check::new("II(d)", "cancelation");
    let cancel_states = [
        Term::heads(),
        Term::indexed_record(1),
        Term::basic_box(1),
        Term::pair(Term::heads(), Term::tails()),
    ];
    for group in groups.values() {
        for a in group {
            for b in group {
                for s in &cancel_states {
                    let s1 = one(s);
                    if reach(&combine(a, &s1), &combine(b, &s1)) {
                        c.instance(reach(a, b), || format!("{a} + {s} -> {b} + {s}"));
                    }
                }
            }
        }
    }
    axioms.push(c.done());

    // III: no process onto a proper subset.
    let mut c = Check::new("III", "proper subsets are unreachable");
    for a in universe.iter().filter(|a| a.len() > 1) {
        for t in a {
            let b = one(t);
            c.instance(!reach(a, &b), || format!("{a} -> {b}"));
        }
    }
    axioms.push(c.done());

    // IV(a): conditional processes onto a single state.
    let mut c = Check::new("IV(a)", "subsets of a source onto a state");
    let term_groups = by_content(&stride_sample(&all_terms, 120));
    for a in universe.iter().filter(|a| a.len() > 1) {
        let Some(targets) = term_groups.get(&a.content()) else {
            continue;
        };
        for b in targets {
            let b1 = one(b);
            if !reach(a, &b1) {
                continue;
            }
            for t in a {
                c.instance(reach(&one(t), &b1), || {
                    format!("{a} -> {b}, subset {{{t}}}")
                });
            }
        }
    }
    axioms.push(c.done());

    // IV(b): disjoint unions.
    let mut c = Check::new("IV(b)", "disjoint unions");
    for group in groups.values() {
        let disjoint: Vec<(Eidostate, Eidostate, Eidostate)> = stride_sample(
            &group
                .iter()
                .enumerate()
                .flat_map(|(i, x)| group[i + 1..].iter().map(move |y| (x.clone(), y.clone())))
                .filter(|(x, y)| x.is_disjoint(y))
                .collect::<Vec<_>>(),
            30,
        )
        .into_iter()
        .filter_map(|(x, y)| x.union(&y).ok().map(|u| (x, y, u)))
        .collect();
        for (a1, a2, a) in &disjoint {
            for (b1, b2, b) in &disjoint {
                if reach(a1, b1) && reach(a2, b2) {
                    c.instance(reach(a, b), || format!("{a1} -> {b1} and {a2} -> {b2}"));
                }
            }
        }
    }
    axioms.push(c.done());

    // V: a bit state and a possible bit process.
    let mut c = Check::new("V", "information");
    let r0 = one(&Term::indexed_record(0));
    let bit = info(2);
    c.instance(
        bit.is_information_state() && bit.len() == 2 && (reach(&r0, &bit) || reach(&bit, &r0)),
        || "no bit process".to_string(),
    );
    c.witness(|| format!("bit state {bit}, process ({r0} | {bit})"));
    axioms.push(c.done());

    // VI: demons.
    let info_pool: Vec<Eidostate> = [1, 2, 4, 8, 16]
        .into_iter()
        .map(info)
        .chain([one(&Term::pair(
            Term::indexed_record(0),
            Term::indexed_record(1),
        ))])
        .collect();
    let state_groups = by_content(&stride_sample(&all_terms, 80));
    let mut va = Check::new("VI(a)", "demons: a record recovers the source");
    let mut vb = Check::new("VI(b)", "demons: comparability with any record");
    for group in state_groups.values() {
        for a in group {
            for b in group {
                for j in &info_pool {
                    if !reach(&one(a), &combine(&one(b), j)) {
                        continue;
                    }
                    let found = info_pool
                        .iter()
                        .find(|i| reach(&one(b), &combine(&one(a), i)));
                    va.instance(found.is_some(), || format!("{a} -> {b} + {j}"));
                    if let Some(i) = found {
                        va.witness(|| format!("{a} -> {b} + {j}; {b} -> {a} + {i}"));
                    }
                    for i in &info_pool {
                        let bi = combine(&one(b), i);
                        vb.instance(reach(&one(a), &bi) || reach(&bi, &one(a)), || {
                            format!("{a} -> {b} + {j}, record {i}")
                        });
                    }
                }
            }
        }
    }
    axioms.push(va.done());
    axioms.push(vb.done());

    // VII: stability up to a finite repetition count.
    let mut c = Check::new("VII", "stability").caveat(&format!(
        "checked for n <= {STABILITY_CAP} with J in {{I_1, I_2}}; \"arbitrarily large n\" is not finitely decidable"
    ));
    let stability_sample = content_groups(&stride_sample(&sample, 60));
    for group in stability_sample.values() {
        for a in group {
            for b in group {
                for j in [info(1), info(2)] {
                    let holds = (1..=STABILITY_CAP)
                        .all(|n| reach(&repeat(a, n), &combine(&repeat(b, n), &j)));
                    if holds {
                        c.instance(reach(a, b), || format!("n{a} -> n{b} + {j}"));
                    }
                }
            }
        }
    }
    axioms.push(c.done());

    // VIII: mechanical states.
    let mechanical: Vec<&Term> = all_terms.iter().filter(|t| t.is_mechanical()).collect();
    let mut a8 = Check::new("VIII(a)", "mechanical states closed under +");
    let mut b8 = Check::new("VIII(b)", "mechanical processes are reversible");
    for l in &mechanical {
        for m in &mechanical {
            let lm = Term::pair((*l).clone(), (*m).clone());
            a8.instance(lm.is_mechanical(), || format!("{lm}"));
            if reach(&one(l), &one(m)) {
                b8.witness(|| format!("{l} -> {m} and {m} -> {l}"));
                b8.instance(reach(&one(m), &one(l)), || format!("{l} -> {m}"));
            }
        }
    }
    axioms.push(a8.done());
    axioms.push(b8.done());

    // IX: state equivalence.
    let mut c = Check::new("IX", "state equivalence");
    for e in &universe {
        let (ex, x, y) = equivalence_witness(e);
        let (ex1, x1, y1) = (one(&ex), one(&x), one(&y));
        let ok = reach(&x1, &y1)
            && reach(&combine(e, &x1), &combine(&ex1, &y1))
            && reach(&combine(&ex1, &y1), &combine(e, &x1));
        if e.len() > 1 {
            c.witness(|| format!("E = {e}: e = {ex}, x = {x}, y = {y}"));
        }
        c.instance(ok, || format!("{e}"));
    }
    axioms.push(c.done());

    Report {
        bound: size_bound,
        terms: all_terms.len(),
        eidostates: universe.len(),
        axioms,
    }
}

/// States `(e, x, y)` with `x → y` and `E + x ↔ e + y`: a stack carrying the
/// coins of `E`, and a one-level box over as many coin terms as `E` weighs.
pub fn equivalence_witness(e: &Eidostate) -> (Term, Term, Term) {
    let k = e
        .weight()
        .value()
        .to_integer()
        .try_into()
        .expect("small integral weight");
    let q: usize = e
        .content()
        .get(COINS)
        .to_integer()
        .try_into()
        .expect("nonnegative coins");
    let coins = [Term::heads(), Term::tails()];
    let mut c = 1;
    let base = loop {
        let level: Vec<Term> = terms(&coins, c)
            .into_iter()
            .filter(|t| t.leaf_count() == c)
            .collect();
        if level.len() >= k {
            break level.into_iter().take(k).collect::<Vec<_>>();
        }
        c += 1;
    };
    let carrier = if q == 0 {
        Term::indexed_record(0)
    } else {
        Term::stack(q).expect("q >= 1")
    };
    let base = crate::term::CoinSet::new(base).expect("uniform coin terms");
    (
        carrier,
        Term::stack(c).expect("c >= 1"),
        Term::boxed(base, 1),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bound_two_passes_everything() {
        let r = check_axioms(2);
        for a in &r.axioms {
            assert_eq!(a.status, Status::Pass, "{} {:?}", a.id, a.counterexample);
        }
        assert!(r.get("VII").unwrap().caveat.is_some());
        assert!(r
            .get("V")
            .unwrap()
            .witness
            .as_deref()
            .unwrap()
            .contains("{r0,r1}"));
    }
}
