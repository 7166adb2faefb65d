//! Exhaustive and randomized checks of the composed language: values, the
//! driver, inference, preservation and the monolithic oracle.

use std::collections::BTreeSet;

use proptest::prelude::*;

use modlang::enumerate::{enumerate_terms, Enumerator};
use modlang::fragments::*;
use modlang::oracle::{embed, mono_trace, project};
use modlang::preservation::typed_array_lookup;
use modlang::semantics::{trace, ArrayStep, SumStep};
use modlang::typing::{ArrayTyping, SumTyping};
use modlang::*;

fn depth_two() -> Vec<Term> {
    // a smaller pool keeps the materialized population manageable
    Enumerator::with_literals(vec![0]).terms(2).unwrap()
}

/// Every derivation of every type for `t`, found by trying each rule at
/// each type rather than following the syntax.
fn derivations(t: &Term) -> Vec<(LangType, ComposedTyping)> {
    let mut out = Vec::new();
    for ty in LangType::ALL {
        out.extend(derivations_at(t, ty).into_iter().map(|d| (ty, d)));
    }
    out
}

fn derivations_at(t: &Term, ty: LangType) -> Vec<ComposedTyping> {
    let mut out = Vec::new();
    let candidates = |sub: &Term, ty| derivations_at(sub, ty);
    if let (LangType::Nat, Some(n)) = (ty, as_nat(t)) {
        out.push(ComposedTyping::Nat(n));
    }
    if let (LangType::Option, Some(m)) = (ty, lift_option().downcast(t)) {
        out.push(ComposedTyping::Option(m));
    }
    if let Some((a, b)) = lift_sum().peel(t).and_then(view_sum) {
        if ty == LangType::Nat {
            for l in candidates(a, LangType::Nat) {
                for r in candidates(b, LangType::Nat) {
                    out.push(ComposedTyping::Sum(SumTyping::OkSum {
                        left: Box::new(l.clone()),
                        right: Box::new(r),
                        left_term: a.clone(),
                        right_term: b.clone(),
                    }));
                }
            }
        }
    }
    match lift_array().peel(t).and_then(view_array) {
        Some(ArrayView::Nil) if ty == LangType::Array => {
            out.push(ComposedTyping::Array(ArrayTyping::OkNil))
        }
        Some(ArrayView::Assign {
            array,
            index,
            value,
        }) if ty == LangType::Array => {
            for wa in candidates(array, LangType::Array) {
                for we in candidates(value, LangType::Nat) {
                    for wn in candidates(index, LangType::Nat) {
                        out.push(ComposedTyping::Array(ArrayTyping::OkIns {
                            array: Box::new(wa.clone()),
                            value: Box::new(we.clone()),
                            index: Box::new(wn),
                            array_term: array.clone(),
                            value_term: value.clone(),
                            index_term: index.clone(),
                        }));
                    }
                }
            }
        }
        Some(ArrayView::Index { array, index }) if ty == LangType::Option => {
            for wa in candidates(array, LangType::Array) {
                for wn in candidates(index, LangType::Nat) {
                    out.push(ComposedTyping::Array(ArrayTyping::OkLookup {
                        array: Box::new(wa.clone()),
                        index: Box::new(wn),
                        array_term: array.clone(),
                        index_term: index.clone(),
                    }));
                }
            }
        }
        _ => {}
    }
    out
}

#[test]
fn values_do_not_step_and_the_driver_is_sound() {
    for t in depth_two() {
        let step = drive_step(&t);
        if is_value(&t) {
            assert!(step.is_none(), "{t:?}");
        }
        if let Some((t2, d)) = &step {
            assert!(validate_step(d, &t, t2), "{t:?}");
            assert_eq!(drive_step(&t), step);
        }
    }
}

#[test]
fn value_examples() {
    assert!(is_value(&enat(5)));
    assert!(!is_value(&plus(enat(1), enat(2))));
    assert!(!is_value(&assign(nil(), enat(0), plus(enat(0), enat(1)))));
    assert!(is_value(&assign(
        assign(nil(), enat(0), enat(1)),
        enat(1),
        enat(2)
    )));
    assert!(is_value(&some(none())));
}

#[test]
fn congruence_keeps_frozen_operands() {
    for t in depth_two() {
        let Some((_, d)) = drive_step(&t) else {
            continue;
        };
        let (from, to) = d.endpoints().unwrap();
        match (&d, view(&from), view(&to)) {
            (
                ComposedStep::Sum(SumStep::Left { .. }),
                Some(ExprView::Plus(_, b)),
                Some(ExprView::Plus(_, b2)),
            )
            | (
                ComposedStep::Sum(SumStep::Right { .. }),
                Some(ExprView::Plus(b, _)),
                Some(ExprView::Plus(b2, _)),
            ) => {
                assert_eq!(b, b2)
            }
            (
                ComposedStep::Array(ArrayStep::Index { .. }),
                Some(ExprView::Index { array, .. }),
                Some(ExprView::Index { array: array2, .. }),
            ) => assert_eq!(array, array2),
            (
                ComposedStep::Sum(SumStep::Value { .. })
                | ComposedStep::Array(ArrayStep::Lookup { .. }),
                ..,
            ) => {}
            other => panic!("unexpected step shape {other:?}"),
        }
    }
}

#[test]
fn inference_is_sound_unique_and_matches_search() {
    for t in enumerate_terms(1).unwrap().into_iter().chain(depth_two()) {
        let inferred = infer(&t);
        let found = derivations(&t);
        let types: BTreeSet<LangType> = found.iter().map(|(ty, _)| *ty).collect();
        assert!(types.len() <= 1, "{t:?}");
        assert_eq!(inferred.as_ref().map(|(ty, _)| *ty), types.first().copied());
        for (ty, d) in &found {
            assert!(validate_typing(d, &t, *ty));
        }
        if let Some((ty, d)) = inferred {
            assert!(validate_typing(&d, &t, ty));
            assert!(found.contains(&(ty, d)));
        }
    }
}

#[test]
fn preservation_over_depth_two() {
    let mut steppable = 0;
    for t in depth_two() {
        if let (Some((ty, w)), Some((t2, s))) = (infer(&t), drive_step(&t)) {
            steppable += 1;
            let w2 = preserve(&s, &w).unwrap();
            assert!(validate_typing(&w2, &t2, ty), "{t:?}");
        }
    }
    assert!(steppable > 0);
}

#[test]
fn typed_lookup_over_chains() {
    // arrays from the enumeration, typed and value-like, up to depth 3 chains
    let mut chains = vec![nil()];
    for _ in 0..3 {
        let mut next = chains.clone();
        for a in &chains {
            for i in 0..3 {
                for e in 0..2 {
                    next.push(assign(a.clone(), enat(i), enat(e)));
                }
            }
        }
        chains = next;
    }
    chains.push(assign(nil(), plus(enat(0), enat(0)), enat(1)));
    for a in chains {
        let payload = lift_array().downcast(&a).unwrap();
        for n in 0..3 {
            let (found, w) = typed_array_lookup(&payload, n).unwrap();
            let t = lift_option().apply(found).unwrap();
            assert!(validate_typing(&w, &t, LangType::Option));
        }
    }
}

/// Chains as association lists, most recent write first.
fn chain_of(writes: &[(u64, u64)]) -> Term {
    writes
        .iter()
        .fold(nil(), |a, &(i, e)| assign(a, enat(i), enat(e)))
}

#[test]
fn lookup_shadowing_is_exhaustive_up_to_three_writes() {
    let mut lists: Vec<Vec<(u64, u64)>> = vec![vec![]];
    let mut all = lists.clone();
    for _ in 0..3 {
        lists = lists
            .iter()
            .flat_map(|l| {
                (0..3).flat_map(move |i| {
                    (0..3).map({
                        let l = l.clone();
                        move |e| {
                            let mut l = l.clone();
                            l.push((i, e));
                            l
                        }
                    })
                })
            })
            .collect();
        all.extend(lists.iter().cloned());
    }
    for writes in all {
        let a = lift_array().downcast(&chain_of(&writes)).unwrap();
        for n in 0..3 {
            let expected = match writes.iter().rev().find(|(i, _)| *i == n) {
                Some(&(_, e)) => some_payload(enat(e)),
                None => none_payload(),
            };
            assert_eq!(array_lookup(&a, n).unwrap(), expected, "{writes:?} at {n}");
        }
    }
}

#[test]
fn lookup_examples() {
    let chain = lift_array()
        .downcast(&assign(nil(), enat(0), enat(1)))
        .unwrap();
    assert_eq!(array_lookup(&nil_payload(), 0).unwrap(), none_payload());
    assert_eq!(array_lookup(&chain, 0).unwrap(), some_payload(enat(1)));
    assert_eq!(array_lookup(&chain, 2).unwrap(), none_payload());
    assert!(array_lookup(&sum_payload(enat(0), enat(0)), 0).is_err());
}

#[test]
fn traces() {
    let exp = index(assign(nil(), enat(0), enat(1)), plus(enat(0), enat(1)));
    let t = trace(&exp, 10);
    assert_eq!(t.steps.len(), 2);
    assert_eq!(t.last(), &none());
    assert!(trace(&enat(3), 10).steps.is_empty());
    let t = trace(&plus(plus(enat(1), enat(2)), enat(3)), 10);
    assert_eq!(t.steps.len(), 2);
    assert_eq!(t.last(), &enat(6));
}

#[test]
fn embedding_round_trips() {
    for t in depth_two() {
        let m = embed(&t).unwrap();
        assert_eq!(project(&m), t);
    }
}

#[test]
fn overflow_is_stuck() {
    let t = plus(enat(u64::MAX), enat(1));
    assert_eq!(drive_step(&t), None);
    assert!(mono_trace(&embed(&t).unwrap(), 5).is_empty());
    let s = ComposedStep::Sum(SumStep::Value { n: u64::MAX, m: 1 });
    assert!(matches!(s.endpoints(), Err(Error::Overflow(..))));
}

fn typed_term() -> impl Strategy<Value = (LangType, Term)> {
    (0usize..3, any::<u64>()).prop_map(|(k, seed)| {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let ty = LangType::ALL[k];
        let g = modlang::gen::GenConfig {
            max_depth: 5,
            ..Default::default()
        };
        (ty, g.typed_term(&mut rng, ty))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1024))]

    #[test]
    fn preservation_along_whole_traces((ty, t) in typed_term()) {
        let (inferred, mut w) = infer(&t).unwrap();
        prop_assert_eq!(inferred, ty);
        let run = trace(&t, 64);
        let mut at = t.clone();
        for (next, s) in &run.steps {
            prop_assert!(validate_step(s, &at, next));
            w = preserve(s, &w).unwrap();
            prop_assert!(validate_typing(&w, next, ty));
            at = next.clone();
        }
        let mono: Vec<Term> = mono_trace(&embed(&t).unwrap(), 64).iter().map(project).collect();
        let modular: Vec<Term> = run.steps.iter().map(|(t, _)| t.clone()).collect();
        prop_assert_eq!(mono, modular);
    }
}
