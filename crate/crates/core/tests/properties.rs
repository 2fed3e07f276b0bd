mod common;

use num_traits::One;
use proptest::prelude::*;

use eidos_core::canon::{canonical_form, realize_canonical};
use eidos_core::derive::search::search_derivation;
use eidos_core::ledger::{
    free_energy, free_energy_change, synthesize_augmentation, work_information_bound,
};
use eidos_core::measure::{
    entropic_probability, entropy_decomposition, gibbs_gap, mechanical_stack, tune_context,
    uniformize_mechanical_with, uniformize_reservoir, Distribution, ReservoirSpec,
};
use eidos_core::rational::{int, pow};
use eidos_core::{
    combine, prime_factors, reachable, similar, Eidostate, Rational, SearchOutcome, Term,
};

fn states(seed: u64, depth: u32, max: usize) -> Eidostate {
    common::eidostate(&mut common::rng(seed), depth, max)
}

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(config(256))]

    #[test]
    fn pairing_multiplies_weight_and_adds_content(s in any::<u64>()) {
        let mut rng = common::rng(s);
        let (a, b) = (common::term(&mut rng, 3), common::term(&mut rng, 3));
        let ab = Term::pair(a.clone(), b.clone());
        prop_assert_eq!(ab.weight().into_value(), a.weight().into_value() * b.weight().into_value());
        prop_assert_eq!(ab.content(), a.content().add(&b.content()));
    }

    #[test]
    fn combine_multiplies_weight(s in any::<u64>()) {
        let (e, f) = (states(s, 2, 3), states(s ^ 0x9e37, 2, 3));
        let ef = combine(&e, &f);
        prop_assert_eq!(ef.weight().into_value(), e.weight().into_value() * f.weight().into_value());
        prop_assert_eq!(ef.content(), e.content().add(&f.content()));
    }

    #[test]
    fn similarity_is_an_equivalence(s in any::<u64>()) {
        let (e, f, g) = (states(s, 2, 2), states(s ^ 1, 2, 2), states(s ^ 2, 1, 2));
        let x = combine(&combine(&e, &f), &g);
        let y = combine(&g, &combine(&f, &e));
        let z = combine(&f, &combine(&g, &e));
        prop_assert!(similar(&x, &x));
        prop_assert_eq!(similar(&x, &y), similar(&y, &x));
        prop_assert!(similar(&x, &y) && similar(&y, &z) && similar(&x, &z));
        prop_assert_eq!(x.weight(), y.weight());
        prop_assert_eq!(x.content(), z.content());
    }

    #[test]
    fn prime_factors_of_a_product(s in any::<u64>()) {
        let (e, f) = (states(s, 2, 3), states(s ^ 7, 2, 3));
        let mut both = prime_factors(&e);
        both.extend(prime_factors(&f));
        both.sort();
        prop_assert_eq!(prime_factors(&combine(&e, &f)), both);
    }

    #[test]
    fn mechanical_states_weigh_one(n in 1usize..40, tails in any::<bool>()) {
        let mu = if tails { Term::tails() } else { Term::heads() };
        let m = mechanical_stack(&mu, n).unwrap();
        prop_assert!(m.is_mechanical());
        prop_assert!(m.weight().is_one());
    }

    #[test]
    fn canonical_certificates_verify_both_ways(s in any::<u64>()) {
        let e = states(s, 2, 3);
        let c = canonical_form(&e).unwrap();
        prop_assert!(c.certificate.verify().is_ok());
        let back = c.certificate.reverse().unwrap();
        prop_assert!(back.verify().is_ok());
        prop_assert!(c.certificate.steps.iter().all(|st| st.rule.is_reversible()));
        for st in &c.certificate.steps {
            prop_assert_eq!(st.conclusion.src.content(), st.conclusion.dst.content());
            prop_assert_eq!(st.conclusion.src.weight(), st.conclusion.dst.weight());
        }
        prop_assert_eq!(c.form.q, e.content());
        prop_assert_eq!(c.form.k, e.weight());
    }

    #[test]
    fn similar_eidostates_share_a_canonical_form(s in any::<u64>()) {
        let (e, f) = (states(s, 2, 2), states(s ^ 3, 1, 2));
        let x = canonical_form(&combine(&e, &f)).unwrap().form;
        let y = canonical_form(&combine(&f, &e)).unwrap().form;
        prop_assert_eq!(x, y);
    }

    #[test]
    fn reachable_preorder(s in any::<u64>()) {
        let mut rng = common::rng(s);
        let base = common::term(&mut rng, 2);
        let pick = |rng: &mut common::TestRng| {
            let n = rand::Rng::gen_range(rng, 1..=3);
            Eidostate::new((0..n).map(|_| common::variant(rng, &base))).unwrap()
        };
        let (e, f, g) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
        prop_assert!(reachable(&e, &e).reachable);
        if reachable(&e, &f).reachable && reachable(&f, &g).reachable {
            prop_assert!(reachable(&e, &g).reachable);
        }
        let both = reachable(&e, &f).reachable && reachable(&f, &e).reachable;
        prop_assert_eq!(both, e.content() == f.content() && e.weight() == f.weight());
    }

    #[test]
    fn reachability_survives_augmentation(s in any::<u64>()) {
        let (e, f, c) = (states(s, 2, 3), states(s ^ 5, 2, 3), states(s ^ 11, 1, 2));
        prop_assert_eq!(
            reachable(&e, &f).reachable,
            reachable(&combine(&e, &c), &combine(&f, &c)).reachable
        );
    }

    #[test]
    fn strict_subsets_are_unreachable(s in any::<u64>()) {
        let e = states(s, 2, 4);
        if e.len() > 1 {
            let first = e.iter().next().unwrap().clone();
            let b = e.subset_where(|t| *t != first).unwrap();
            prop_assert!(!reachable(&e, &b).reachable);
        }
    }

    #[test]
    fn distributions_are_normalized(s in any::<u64>()) {
        let e = states(s, 2, 4);
        let total: Rational = entropic_probability(&e).probabilities().into_iter().sum();
        prop_assert!(total.is_one());
    }

    #[test]
    fn decomposition_identity(s in any::<u64>()) {
        prop_assert!(entropy_decomposition(&states(s, 3, 4)).identity_holds());
    }

    #[test]
    fn gibbs_gap_is_nonnegative(s in any::<u64>()) {
        let mut rng = common::rng(s);
        let e = common::eidostate(&mut rng, 2, 4);
        let p = common::distribution(&mut rng, e.len(), 40);
        let alt = Distribution::on(&e, &p).unwrap();
        let gap = gibbs_gap(&e, &alt).unwrap();
        let sign = gap.sign();
        prop_assert!(sign.ordering.is_ge());
        let at_entropic = gibbs_gap(&e, &entropic_probability(&e)).unwrap();
        prop_assert!(at_entropic.is_zero());
        if alt != entropic_probability(&e) {
            prop_assert!(sign.ordering.is_gt());
        }
    }

    #[test]
    fn mechanical_filler_choice_is_irrelevant(s in any::<u64>()) {
        let mut rng = common::rng(s);
        let ts: Vec<Term> = (0..3).map(|_| common::term(&mut rng, 2)).collect();
        let heads = uniformize_mechanical_with(&ts, &Term::heads());
        let tails = uniformize_mechanical_with(&ts, &Term::tails());
        match (heads, tails) {
            (Ok(h), Ok(t)) => {
                prop_assert_eq!(h.weight(), t.weight());
                prop_assert_eq!(h.distribution().probabilities(), t.distribution().probabilities());
            }
            (h, t) => prop_assert_eq!(h.is_ok(), t.is_ok()),
        }
    }

    #[test]
    fn tuning_is_exact(s in any::<u64>()) {
        let mut rng = common::rng(s);
        let e = common::eidostate(&mut rng, 2, 3);
        let target = common::distribution(&mut rng, e.len(), 30);
        let t = tune_context(&e, &target).unwrap();
        prop_assert_eq!(t.augmented.distribution().probabilities(), target);
    }

    #[test]
    fn reservoir_ratio_law(n1 in 0i64..6, n2 in 0i64..6) {
        prop_assume!(n1 != n2);
        let a = [Term::stack(6 - n1 as usize).unwrap(), Term::stack(6 - n2 as usize).unwrap()];
        let spec = ReservoirSpec::basic_box();
        let (_, d) = uniformize_reservoir(&a, &spec, &[n1, n2]).unwrap();
        let p = d.probabilities();
        prop_assert_eq!(&p[0] / &p[1], pow(&int(2), n1 - n2));
    }

    #[test]
    fn free_energy_is_additive(s in any::<u64>()) {
        let mut rng = common::rng(s);
        let (a, b) = (common::term(&mut rng, 2), common::term(&mut rng, 2));
        let spec = ReservoirSpec::basic_box();
        let fa = free_energy(&a, &spec, "coins").unwrap();
        let fb = free_energy(&b, &spec, "coins").unwrap();
        let fab = free_energy(&Term::pair(a, b), &spec, "coins").unwrap();
        let sum = eidos_core::Real {
            exact: fa.exact.clone().zip(fb.exact.clone()).map(|(x, y)| x + y),
            approx: fa.approx + fb.approx,
        };
        prop_assert!(fab.same_as(&sum));
    }
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn found_certificates_are_sound(s in any::<u64>()) {
        let (e, f) = (states(s, 1, 2), states(s ^ 13, 1, 2));
        let f = if e.content() == f.content() { f } else { e.clone() };
        if let SearchOutcome::Found(c) = search_derivation(&e, &f, 8).unwrap() {
            prop_assert!(c.verify().is_ok());
            prop_assert!(reachable(&e, &f).reachable);
        }
    }

    #[test]
    fn synthesized_ledgers_hold(s in any::<u64>()) {
        let mut rng = common::rng(s);
        let a = common::ensemble(&mut rng);
        let b = common::ensemble(&mut rng);
        let spec = ReservoirSpec::basic_box();
        let syn = synthesize_augmentation(&a, &b, &spec, "coins").unwrap();
        let r = work_information_bound(&a, &b, (&syn.src, &syn.dst), &spec, "coins").unwrap();
        prop_assert!(r.satisfied);
        prop_assert!(r.lhs <= r.rhs + 1e-9);
        prop_assert!(r.exact);
        if syn.exact {
            let (wa, wb) = r.weights.clone().unwrap();
            prop_assert_eq!(r.equality, wa == wb);
            prop_assert!(wa <= wb);
        }
    }

    #[test]
    fn free_energy_change_depends_on_the_ratio(s in any::<u64>()) {
        let mut rng = common::rng(s);
        let (a, b) = (common::ensemble(&mut rng), common::ensemble(&mut rng));
        let basic = ReservoirSpec::basic_box();
        let quad = ReservoirSpec::box_backed(common::quad_coins());
        let x = free_energy_change(&a, &b, &basic, "coins").unwrap();
        let y = free_energy_change(&a, &b, &quad, "coins").unwrap();
        prop_assert!(x.same_as(&y), "{x} vs {y}");
    }
}

#[test]
fn canonical_round_trip() {
    for q in 0..=6 {
        for k in 1..=64 {
            let c = canonical_form(&realize_canonical(q, k)).unwrap();
            assert_eq!((c.form.coins(), c.form.records()), (q as u64, k as u64));
        }
    }
}

#[test]
fn quad_spec_has_unit_ratio() {
    let spec = ReservoirSpec::box_backed(common::quad_coins());
    assert_eq!(spec.epsilon("coins"), int(2));
    assert_eq!(spec.sigma().as_rational(), Some(int(2)));
}
