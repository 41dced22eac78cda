mod common;

use std::collections::BTreeSet;

use automin::formats::{self, Automaton};
use automin::monoid::{
    biaction_to_monoid, congruence_oracle, monoid_to_biaction, syntactic_monoid, transition_monoid,
};
use automin::pipeline::{check_divides, minimize_is_idempotent, reach_obs_commute};
use automin::transducer::KleisliMap;
use automin::{Morphism, Rational};
use common::*;
use proptest::prelude::*;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, ..ProptestConfig::default() }
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn dfa_minimize_preserves_language(seed in any::<u64>()) {
        let d = random_dfa(&mut rng(seed), 6, 3);
        let m = d.minimize();
        for w in words(d.alphabet().len(), (2 * d.n_states()).min(8)) {
            prop_assert_eq!(d.accepts_word(&w), m.accepts_word(&w));
        }
    }

    #[test]
    fn dfa_minimal_size_matches_residual_oracle(seed in any::<u64>()) {
        let d = random_dfa(&mut rng(seed), 5, 2);
        prop_assert_eq!(d.minimize().n_states(), residual_class_count(&d, 2 * d.n_states()));
    }

    #[test]
    fn dfa_minimal_states_have_distinct_residuals(seed in any::<u64>()) {
        let m = random_dfa(&mut rng(seed), 5, 2).minimize();
        let depth = 2 * m.n_states();
        let residuals: BTreeSet<_> = (0..m.n_states()).map(|q| m.residual(q, depth)).collect();
        prop_assert_eq!(residuals.len(), m.n_states());
    }

    #[test]
    fn dfa_reach_maps_onto_minimal(seed in any::<u64>()) {
        let d = random_dfa(&mut rng(seed), 6, 3).reach();
        let h = d.find_morphism(&d.minimize()).unwrap();
        prop_assert!(h.is_some_and(|h| h.kind().is_epi()));
    }

    #[test]
    fn dfa_reach_states_match_bfs_closure(seed in any::<u64>()) {
        let d = random_dfa(&mut rng(seed), 6, 2);
        prop_assert_eq!(d.reach().n_states(), reachable_states(&d).len());
    }

    #[test]
    fn pipeline_laws_hold_for_dfas(seed in any::<u64>()) {
        let d = random_dfa(&mut rng(seed), 6, 3);
        prop_assert!(reach_obs_commute(&d));
        prop_assert!(minimize_is_idempotent(&d));
        prop_assert!(check_divides(&d.minimize(), &d).unwrap());
    }

    #[test]
    fn nfa_constructions_preserve_language(seed in any::<u64>()) {
        let n = random_nfa(&mut rng(seed), 5, 2);
        let d = n.determinize();
        let b = n.brzozowski();
        for w in words(n.alphabet().len(), (2 * n.n_states()).min(8)) {
            let expected = n.accepts_word(&w);
            prop_assert_eq!(d.accepts_word(&w), expected);
            prop_assert_eq!(b.accepts_word(&w), expected);
        }
    }

    #[test]
    fn nfa_brzozowski_is_minimal_determinization(seed in any::<u64>()) {
        let n = random_nfa(&mut rng(seed), 5, 3);
        prop_assert!(n.brzozowski().is_isomorphic(&n.determinize().minimize()));
    }

    #[test]
    fn nfa_transpose_is_involution(seed in any::<u64>()) {
        let n = random_nfa(&mut rng(seed), 6, 3);
        prop_assert_eq!(n.transpose().transpose(), n);
    }

    #[test]
    fn nfa_determinization_is_bounded_and_reachable(seed in any::<u64>()) {
        let n = random_nfa(&mut rng(seed), 6, 3);
        let d = n.determinize();
        prop_assert!(d.n_states() <= 1 << n.n_states());
        prop_assert_eq!(reachable_states(&d).len(), d.n_states());
    }

    #[test]
    fn nfa_codeterminization_is_backward_deterministic(seed in any::<u64>()) {
        let n = random_nfa(&mut rng(seed), 5, 2);
        let c = n.codeterminize();
        prop_assert!(c.is_backward_deterministic());
        prop_assert_eq!(c.language_up_to(6), n.language_up_to(6));
    }
}

proptest! {
    #![proptest_config(config(32))]

    #[test]
    fn wfa_minimize_preserves_weights(seed in any::<u64>()) {
        let ints = random_int_wfa(&mut rng(seed), 4, 2);
        let m = ints.build().minimize();
        for w in words(2, 2 * ints.init.len()) {
            prop_assert_eq!(m.weight_of(&w), Rational::from_integer(ints.weight(&w)));
        }
    }

    #[test]
    fn wfa_minimize_is_idempotent(seed in any::<u64>()) {
        let w = random_int_wfa(&mut rng(seed), 4, 2).build();
        let m = w.minimize();
        let mm = m.minimize();
        prop_assert!(m.dim() <= w.dim());
        prop_assert_eq!(mm.dim(), m.dim());
        prop_assert!(mm.equivalent(&m).unwrap());
        prop_assert!(m.is_isomorphic(&mm));
    }

    #[test]
    fn wfa_dimension_is_hankel_rank(seed in any::<u64>()) {
        let ints = random_int_wfa(&mut rng(seed), 4, 2);
        prop_assert_eq!(ints.build().minimize().dim(), hankel_rank(&ints, ints.init.len()));
    }

    #[test]
    fn wfa_reduction_order_is_irrelevant(seed in any::<u64>()) {
        let w = random_int_wfa(&mut rng(seed), 4, 2).build();
        let a = w.minimize();
        let b = w.forward_reduce().backward_reduce();
        prop_assert_eq!(a.dim(), b.dim());
        prop_assert!(a.equivalent(&b).unwrap());
        prop_assert!(reach_obs_commute(&w));
    }

    #[test]
    fn sst_minimize_preserves_semantics(seed in any::<u64>()) {
        let t = random_sst(&mut rng(seed), 5, 2);
        let m = t.minimize();
        prop_assert!(m.n_states() <= t.trim().n_states());
        for w in words(t.input_alphabet().len(), 2 * t.n_states()) {
            prop_assert_eq!(m.apply_word(&w), simulate(&t, &w));
        }
    }

    #[test]
    fn sst_normal_form_is_earliest(seed in any::<u64>()) {
        let t = random_sst(&mut rng(seed), 6, 3);
        let lcps = t.normalize().state_lcp().unwrap();
        prop_assert!(lcps.iter().all(String::is_empty));
    }

    #[test]
    fn sst_minimal_residuals_are_irreducible_and_distinct(seed in any::<u64>()) {
        let m = random_sst(&mut rng(seed), 5, 2).minimize();
        let depth = 2 * m.n_states();
        let residuals: Vec<_> = (0..m.n_states()).map(|q| residual_by_simulation(&m, q, depth)).collect();
        for (q, r) in residuals.iter().enumerate() {
            prop_assert!(lcp_is_empty(r), "state {} has a non-empty common prefix", q);
            prop_assert_eq!(&m.residual(q, depth).0, r);
        }
        let distinct: BTreeSet<_> = residuals.iter().collect();
        prop_assert_eq!(distinct.len(), m.n_states());
    }

    #[test]
    fn sst_apply_agrees_with_kleisli_composition(seed in any::<u64>()) {
        let t = random_sst(&mut rng(seed), 5, 3);
        for w in words(t.input_alphabet().len(), 4) {
            prop_assert_eq!(t.apply_by_composition(&w), simulate(&t, &w));
        }
        let n = t.n_states();
        if n > 0 {
            let id = KleisliMap::unit(n);
            let step = t.step_map(0);
            prop_assert_eq!(&id.then(&step), &step);
            prop_assert_eq!(&step.then(&KleisliMap::unit(n)), &step);
        }
    }

    #[test]
    fn pipeline_laws_hold_for_transducers(seed in any::<u64>()) {
        let t = random_sst(&mut rng(seed), 6, 3);
        prop_assert!(reach_obs_commute(&t));
        prop_assert!(minimize_is_idempotent(&t));
        prop_assert!(check_divides(&t.minimize(), &t).unwrap());
    }

    #[test]
    fn monoid_recognizes_the_language(seed in any::<u64>()) {
        let d = random_dfa(&mut rng(seed), 4, 2);
        let r = syntactic_monoid(&d);
        for w in words(d.alphabet().len(), 2 * d.n_states()) {
            prop_assert_eq!(r.recognizes_word(&w), d.accepts_word(&w));
        }
    }

    #[test]
    fn congruence_oracle_agrees_with_contexts(seed in any::<u64>()) {
        let d = random_dfa(&mut rng(seed), 4, 2);
        let n = d.minimize().n_states();
        let k = d.alphabet().len();
        let ctx = words(k, n);
        let short = words(k, 3);
        for w in &short {
            for w2 in &short {
                let brute = ctx.iter().all(|u| ctx.iter().all(|v| {
                    let a: Vec<usize> = u.iter().chain(w).chain(v).copied().collect();
                    let b: Vec<usize> = u.iter().chain(w2).chain(v).copied().collect();
                    d.accepts_word(&a) == d.accepts_word(&b)
                }));
                prop_assert_eq!(congruence_oracle(&d, w, w2), brute);
            }
        }
    }

    #[test]
    fn monoid_order_matches_exhaustive_congruence(seed in any::<u64>()) {
        // Words up to the longest shortest representative reach every element.
        let d = random_dfa(&mut rng(seed), 3, 2);
        let r = syntactic_monoid(&d);
        let longest = r.representatives().into_iter().flatten().map(|w| w.len()).max().unwrap_or(0);
        let n = d.minimize().n_states();
        prop_assert_eq!(r.order(), brute_force_congruence_classes(&d, longest, n));
    }

    #[test]
    fn syntactic_monoid_divides_transition_monoid(seed in any::<u64>()) {
        let d = random_dfa(&mut rng(seed), 5, 2);
        prop_assert!(syntactic_monoid(&d).order() <= transition_monoid(&d).order());
    }

    #[test]
    fn biaction_round_trip(seed in any::<u64>()) {
        let r = syntactic_monoid(&random_dfa(&mut rng(seed), 4, 2));
        let back = biaction_to_monoid(&monoid_to_biaction(&r)).unwrap();
        prop_assert!(back.is_isomorphic(&r));
    }

    #[test]
    fn serialization_is_stable(seed in any::<u64>()) {
        let mut g = rng(seed);
        for a in [
            Automaton::Dfa(random_dfa(&mut g, 6, 3)),
            Automaton::Nfa(random_nfa(&mut g, 6, 3)),
            Automaton::Wfa(random_int_wfa(&mut g, 4, 2).build().minimize()),
            Automaton::Sst(random_sst(&mut g, 6, 3)),
        ] {
            let text = formats::serialize(&a);
            let back = formats::parse(&text).unwrap();
            prop_assert_eq!(formats::serialize(&back), text.clone());
            prop_assert_eq!(back.canonicalize(), a.canonicalize());
        }
    }
}
