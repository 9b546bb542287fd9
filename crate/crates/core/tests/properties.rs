//! Randomized invariants for the term model, syntax and reduction engine.

use proptest::prelude::*;

use lamnum_core::random::{random_substitution, random_term, rng_from_seed, GenParams};
use lamnum_core::reduction::{
    beta_eq, head_reduce, head_reduce_traced, hnf_shape, is_solvable, normalize, BetaVerdict,
    Solvability, Status,
};
use lamnum_core::syntax::{parse, print, PrintMode};
use lamnum_core::term::{alpha_eq, Substitution, Term};

fn name_pool() -> impl Strategy<Value = String> {
    prop_oneof![
        Just("u".to_string()),
        Just("v".to_string()),
        Just("w".to_string()),
        Just("x".to_string()),
        Just("y".to_string()),
    ]
}

fn term_strategy() -> impl Strategy<Value = Term> {
    let leaf = name_pool().prop_map(Term::free);
    leaf.prop_recursive(6, 48, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(f, a)| Term::app(f, a)),
            (name_pool(), inner).prop_map(|(n, b)| Term::lam(n, b)),
        ]
    })
}

fn small_subst() -> impl Strategy<Value = Substitution> {
    proptest::collection::btree_map(name_pool(), term_strategy(), 0..3)
        .prop_map(|m| m.into_iter().collect())
}

proptest! {
    #[test]
    fn alpha_eq_reflexive(t in term_strategy()) {
        prop_assert!(alpha_eq(&t, &t));
    }

    #[test]
    fn alpha_eq_stable_under_reprinting(t in term_strategy()) {
        // consistent binder renaming via canonical printing
        let renamed = parse(&print(&t, PrintMode::Canonical)).unwrap();
        prop_assert!(alpha_eq(&t, &renamed));
        prop_assert!(alpha_eq(&renamed, &t));
    }

    #[test]
    fn alpha_eq_symmetric_and_transitive(a in term_strategy(), b in term_strategy(), c in term_strategy()) {
        prop_assert_eq!(alpha_eq(&a, &b), alpha_eq(&b, &a));
        if alpha_eq(&a, &b) && alpha_eq(&b, &c) {
            prop_assert!(alpha_eq(&a, &c));
        }
    }

    #[test]
    fn empty_substitution_is_identity(t in term_strategy()) {
        prop_assert!(alpha_eq(&t.substitute(&Substitution::new()), &t));
    }

    #[test]
    fn substitution_free_variable_bound(t in term_strategy(), sigma in small_subst()) {
        let result = t.substitute(&sigma);
        let mut allowed = std::collections::BTreeSet::new();
        for v in t.free_vars() {
            match sigma.get(&v) {
                Some(image) => allowed.extend(image.free_vars()),
                None => {
                    allowed.insert(v);
                }
            }
        }
        for v in result.free_vars() {
            prop_assert!(allowed.contains(&v), "unexpected free variable {v}");
        }
    }

    #[test]
    fn readable_print_round_trips(t in term_strategy()) {
        let reparsed = parse(&print(&t, PrintMode::Readable)).unwrap();
        prop_assert!(alpha_eq(&reparsed, &t));
    }

    #[test]
    fn canonical_print_round_trips(t in term_strategy()) {
        let reparsed = parse(&print(&t, PrintMode::Canonical)).unwrap();
        prop_assert!(alpha_eq(&reparsed, &t));
    }

    #[test]
    fn canonical_print_respects_alpha_classes(a in term_strategy(), b in term_strategy()) {
        let pa = print(&a, PrintMode::Canonical);
        let pb = print(&b, PrintMode::Canonical);
        prop_assert_eq!(alpha_eq(&a, &b), pa == pb);
    }

    #[test]
    fn head_reduction_deterministic(t in term_strategy()) {
        let a = head_reduce_traced(&t, 200);
        let b = head_reduce_traced(&t, 200);
        prop_assert_eq!(a.trace, b.trace);
    }

    #[test]
    fn normalized_terms_are_solvable_with_matching_shape(t in term_strategy()) {
        let nf = normalize(&t, 400);
        if nf.status == Status::Reached {
            match is_solvable(&t, 400) {
                Solvability::Solvable(steps) => {
                    let hnf = head_reduce(&t, 400);
                    prop_assert_eq!(hnf.steps, steps);
                    let a = hnf_shape(&hnf.result).unwrap();
                    let b = hnf_shape(&nf.result).unwrap();
                    prop_assert_eq!(a.binders, b.binders);
                    prop_assert_eq!(a.head, b.head);
                    prop_assert_eq!(a.args, b.args);
                }
                Solvability::Unknown => prop_assert!(false, "normalizing term not solvable"),
            }
        }
    }

    #[test]
    fn beta_eq_is_equivalence_on_normalizing_terms(a in term_strategy(), b in term_strategy(), c in term_strategy()) {
        let fuel = 400;
        if [&a, &b, &c].iter().all(|t| normalize(t, fuel).status == Status::Reached) {
            prop_assert_eq!(beta_eq(&a, &a, fuel), BetaVerdict::Yes);
            prop_assert_eq!(beta_eq(&a, &b, fuel), beta_eq(&b, &a, fuel));
            if beta_eq(&a, &b, fuel) == BetaVerdict::Yes && beta_eq(&b, &c, fuel) == BetaVerdict::Yes {
                prop_assert_eq!(beta_eq(&a, &c, fuel), BetaVerdict::Yes);
            }
        }
    }

    #[test]
    fn head_reduction_commutes_with_substitution(seed in 0u64..10_000, cut in 0u64..24) {
        let mut rng = rng_from_seed(seed);
        let params = GenParams::default();
        let m = random_term(&mut rng, &params);
        let intermediate = head_reduce(&m, cut);
        let n = intermediate.result;
        let h = intermediate.steps;
        let sigma = random_substitution(&mut rng, &params.free_names, &params);
        let out = head_reduce(&m.substitute(&sigma), h);
        prop_assert_eq!(out.steps, h);
        prop_assert!(alpha_eq(&out.result, &n.substitute(&sigma)));
    }

    #[test]
    fn solvable_after_substitution_implies_solvable(seed in 0u64..10_000) {
        let mut rng = rng_from_seed(seed);
        let params = GenParams::default();
        let m = random_term(&mut rng, &params);
        let sigma = random_substitution(&mut rng, &params.free_names, &params);
        let fuel = 300;
        if let Solvability::Solvable(_) = is_solvable(&m.substitute(&sigma), fuel) {
            prop_assert!(matches!(is_solvable(&m, fuel), Solvability::Solvable(_)));
        }
    }
}
