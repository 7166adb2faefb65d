//! Type preservation as a function on derivations.
//!
//! Each fragment's transformer is written against [`PreservationHooks`] and
//! never sees the other fragments. [`preserve`] closes the knot for the
//! composed language by supplying itself as the induction hook.

mod array;
mod sum;

pub use array::preservation_array;
pub use sum::preservation_sum;

use crate::error::{Error, Result};
use crate::fragments::array_lookup;
use crate::functor::Payload;
use crate::semantics::{array_lifts, sum_lifts, ComposedStep};
use crate::typing::{ArrayTyping, ComposedTyping, SumTyping};

/// What a fragment's preservation proof assumes about the language it is
/// composed into. `S` is the enclosing step relation, `W` the enclosing
/// typing relation.
pub trait PreservationHooks<S, W> {
    /// Every lifted literal is a `TNat`.
    fn wt_nat(&self, n: u64) -> W;
    /// Every lifted option payload is a `TOption`.
    fn wt_option(&self, m: Payload) -> W;
    fn lift_sum_wt(&self, w: SumTyping<W>) -> W;
    fn lift_array_wt(&self, w: ArrayTyping<W>) -> W;
    /// The induction hypothesis: preservation for the enclosing relation.
    fn induction(&self, step: &S, typing: &W) -> Result<W>;
}

/// Hooks of the composed language.
#[derive(Clone, Copy, Debug, Default)]
pub struct ExprHooks;

impl PreservationHooks<ComposedStep, ComposedTyping> for ExprHooks {
    fn wt_nat(&self, n: u64) -> ComposedTyping {
        ComposedTyping::Nat(n)
    }

    fn wt_option(&self, m: Payload) -> ComposedTyping {
        ComposedTyping::Option(m)
    }

    fn lift_sum_wt(&self, w: SumTyping<ComposedTyping>) -> ComposedTyping {
        ComposedTyping::Sum(w)
    }

    fn lift_array_wt(&self, w: ArrayTyping<ComposedTyping>) -> ComposedTyping {
        ComposedTyping::Array(w)
    }

    fn induction(&self, step: &ComposedStep, typing: &ComposedTyping) -> Result<ComposedTyping> {
        preserve(step, typing)
    }
}

/// `LC⟦a, n⟧`: the lookup result together with its typing.
pub fn typed_array_lookup(a: &Payload, n: u64) -> Result<(Payload, ComposedTyping)> {
    let found = array_lookup(a, n)?;
    let typing = ComposedTyping::Option(found.clone());
    Ok((found, typing))
}

/// Given `s : e ⟶ e'` and `w : e : τ`, produces a derivation of `e' : τ`.
///
/// Recursion goes through the induction hook on a strict subderivation of
/// `s`, so it terminates.
pub fn preserve(s: &ComposedStep, w: &ComposedTyping) -> Result<ComposedTyping> {
    preserve_with(&ExprHooks, s, w)
}

/// [`preserve`] with caller-supplied hooks for the top-level dispatch.
pub fn preserve_with(
    hooks: &impl PreservationHooks<ComposedStep, ComposedTyping>,
    s: &ComposedStep,
    w: &ComposedTyping,
) -> Result<ComposedTyping> {
    match (s, w) {
        (ComposedStep::Sum(s), ComposedTyping::Sum(w)) => {
            preservation_sum(hooks, sum_lifts(), s, w)
        }
        (ComposedStep::Array(s), ComposedTyping::Array(w)) => {
            preservation_array(hooks, array_lifts(), s, w)
        }
        (ComposedStep::Sum(_), _) => Err(Error::SubjectMismatch(
            "sum step paired with a typing that is not lift-wt-sum".into(),
        )),
        (ComposedStep::Array(_), _) => Err(Error::SubjectMismatch(
            "array step paired with a typing that is not lift-wt-array".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use std::cell::RefCell;

    use super::*;
    use crate::fragments::*;
    use crate::functor::Term;
    use crate::semantics::{drive_step, ArrayStep, SumStep};
    use crate::typing::{infer, validate_typing, LangType};

    fn chain() -> Term {
        assign(nil(), enat(0), enat(1))
    }

    fn nat_sum(n: u64, m: u64) -> ComposedTyping {
        ComposedTyping::Sum(SumTyping::OkSum {
            left: Box::new(ComposedTyping::Nat(n)),
            right: Box::new(ComposedTyping::Nat(m)),
            left_term: enat(n),
            right_term: enat(m),
        })
    }

    #[test]
    fn typed_lookup() {
        let (p, w) = typed_array_lookup(&nil_payload(), 0).unwrap();
        assert_eq!(p, none_payload());
        assert_eq!(w, ComposedTyping::Option(none_payload()));

        let a = lift_array().downcast(&chain()).unwrap();
        let (p, w) = typed_array_lookup(&a, 0).unwrap();
        assert_eq!(p, some_payload(enat(1)));
        assert!(validate_typing(&w, &some(enat(1)), LangType::Option));
    }

    #[test]
    fn value_step() {
        let s = ComposedStep::Sum(SumStep::Value { n: 0, m: 1 });
        assert_eq!(
            preserve(&s, &nat_sum(0, 1)).unwrap(),
            ComposedTyping::Nat(1)
        );
        let s = ComposedStep::Sum(SumStep::Value { n: 6, m: 7 });
        assert_eq!(
            preserve(&s, &nat_sum(6, 7)).unwrap(),
            ComposedTyping::Nat(13)
        );
    }

    #[test]
    fn left_congruence() {
        let t = plus(plus(enat(1), enat(2)), enat(3));
        let (ty, w) = infer(&t).unwrap();
        let (t2, s) = drive_step(&t).unwrap();
        let out = preserve(&s, &w).unwrap();
        let expected = ComposedTyping::Sum(SumTyping::OkSum {
            left: Box::new(ComposedTyping::Nat(3)),
            right: Box::new(ComposedTyping::Nat(3)),
            left_term: enat(3),
            right_term: enat(3),
        });
        assert_eq!(out, expected);
        assert!(validate_typing(&out, &t2, ty));
    }

    #[test]
    fn lookup_miss_gives_none() {
        let t = index(chain(), enat(1));
        let (_, w) = infer(&t).unwrap();
        let (_, s) = drive_step(&t).unwrap();
        assert_eq!(
            preserve(&s, &w).unwrap(),
            ComposedTyping::Option(none_payload())
        );
    }

    #[test]
    fn mismatches() {
        let s = ComposedStep::Sum(SumStep::Value { n: 0, m: 1 });
        assert!(matches!(
            preserve(&s, &ComposedTyping::Nat(1)),
            Err(Error::SubjectMismatch(_))
        ));
        assert!(matches!(
            preserve(&s, &nat_sum(1, 1)),
            Err(Error::SubjectMismatch(_))
        ));

        let lookup = ComposedStep::Array(ArrayStep::Lookup {
            array: nil_payload(),
            n: 0,
        });
        assert!(preserve(&lookup, &nat_sum(0, 1)).is_err());
        let (_, ins) = infer(&chain()).unwrap();
        assert!(preserve(&lookup, &ins).is_err());
    }

    #[derive(Default)]
    struct Audit {
        calls: RefCell<Vec<&'static str>>,
    }

    impl PreservationHooks<ComposedStep, ComposedTyping> for Audit {
        fn wt_nat(&self, n: u64) -> ComposedTyping {
            self.calls.borrow_mut().push("wt_nat");
            ExprHooks.wt_nat(n)
        }
        fn wt_option(&self, m: Payload) -> ComposedTyping {
            self.calls.borrow_mut().push("wt_option");
            ExprHooks.wt_option(m)
        }
        fn lift_sum_wt(&self, w: SumTyping<ComposedTyping>) -> ComposedTyping {
            self.calls.borrow_mut().push("lift_sum_wt");
            ExprHooks.lift_sum_wt(w)
        }
        fn lift_array_wt(&self, w: ArrayTyping<ComposedTyping>) -> ComposedTyping {
            self.calls.borrow_mut().push("lift_array_wt");
            ExprHooks.lift_array_wt(w)
        }
        fn induction(&self, s: &ComposedStep, w: &ComposedTyping) -> Result<ComposedTyping> {
            // only the outermost fragment clause is audited
            self.calls.borrow_mut().push("induction");
            preserve(s, w)
        }
    }

    #[test]
    fn fragments_only_use_their_own_hooks() {
        let terms = [
            plus(plus(enat(1), enat(2)), enat(3)),
            plus(enat(1), plus(enat(2), enat(0))),
            plus(enat(4), enat(5)),
            index(chain(), plus(enat(0), enat(1))),
            index(chain(), enat(0)),
            index(nil(), plus(plus(enat(0), enat(0)), enat(0))),
        ];
        for t in terms {
            let (_, w) = infer(&t).unwrap();
            let (_, s) = drive_step(&t).unwrap();
            let audit = Audit::default();
            preserve_with(&audit, &s, &w).unwrap();
            let calls = audit.calls.into_inner();
            let forbidden: &[&str] = match s {
                ComposedStep::Sum(_) => &["wt_option", "lift_array_wt"],
                ComposedStep::Array(_) => &["wt_nat", "lift_sum_wt"],
            };
            assert!(
                calls.iter().all(|c| !forbidden.contains(c)),
                "{t:?}: {calls:?}"
            );
        }
    }
}
