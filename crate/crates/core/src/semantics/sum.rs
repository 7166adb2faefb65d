//! Step relation of the sum fragment, parametric in the enclosing step
//! relation `S` and in the lifts of sums and naturals.

use crate::error::{Error, Result};
use crate::fragments::{sum_payload, view_sum};
use crate::functor::{AtomValue, Payload, Term};
use crate::subobject::{Injection, LazyCoercion};

use super::StepRule;

#[derive(Clone, Copy, Debug)]
pub struct SumLifts<'a> {
    pub sum: &'a Injection,
    pub nat: &'a Injection,
}

/// `_⟶⁺_`. Terms named here are the implicit indices of each rule.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SumStep<S> {
    /// `stepl`: `e₁ + e₂ ⟶ e₁' + e₂` from `e₁ ⟶ e₁'`.
    Left {
        inner: Box<S>,
        left: Term,
        left_to: Term,
        right: Term,
    },
    /// `stepr`: `n₁ + e₂ ⟶ n₁ + e₂'` from `e₂ ⟶ e₂'`.
    Right {
        inner: Box<S>,
        left: Term,
        right: Term,
        right_to: Term,
    },
    /// `stepv`: `n + m ⟶ n +ℕ m`.
    Value { n: u64, m: u64 },
}

fn literal(nat: &Injection, t: &Term) -> Option<u64> {
    match nat.peel(t) {
        Some(Payload::Atom(AtomValue::Nat(n))) => Some(*n),
        _ => None,
    }
}

fn lit(nat: &Injection, n: u64) -> Result<Term> {
    nat.apply(Payload::nat(n))
}

impl<S> SumStep<S> {
    pub fn inner(&self) -> Option<&S> {
        match self {
            SumStep::Left { inner, .. } | SumStep::Right { inner, .. } => Some(inner),
            SumStep::Value { .. } => None,
        }
    }

    pub fn source(&self, lifts: SumLifts<'_>) -> Result<LazyCoercion> {
        let payload = match self {
            SumStep::Left { left, right, .. } | SumStep::Right { left, right, .. } => {
                sum_payload(left.clone(), right.clone())
            }
            SumStep::Value { n, m } => sum_payload(lit(lifts.nat, *n)?, lit(lifts.nat, *m)?),
        };
        Ok(lifts.sum.lazy(payload))
    }

    pub fn target(&self, lifts: SumLifts<'_>) -> Result<LazyCoercion> {
        Ok(match self {
            SumStep::Left { left_to, right, .. } => {
                lifts.sum.lazy(sum_payload(left_to.clone(), right.clone()))
            }
            SumStep::Right { left, right_to, .. } => {
                lifts.sum.lazy(sum_payload(left.clone(), right_to.clone()))
            }
            SumStep::Value { n, m } => {
                let k = n.checked_add(*m).ok_or(Error::Overflow(*n, *m))?;
                lifts.nat.lazy(Payload::nat(k))
            }
        })
    }

    /// Rule side conditions, with the premise checked by `valid_inner`.
    pub fn check(
        &self,
        lifts: SumLifts<'_>,
        rule: StepRule,
        valid_inner: &mut impl FnMut(&S, &Term, &Term) -> bool,
    ) -> bool {
        match self {
            SumStep::Left {
                inner,
                left,
                left_to,
                ..
            } => valid_inner(inner, left, left_to),
            SumStep::Right {
                inner,
                left,
                right,
                right_to,
            } => {
                (rule.relaxed_stepr || literal(lifts.nat, left).is_some())
                    && valid_inner(inner, right, right_to)
            }
            SumStep::Value { n, m } => n.checked_add(*m).is_some(),
        }
    }

    /// Deterministic strategy: left operand first, then the right operand
    /// once the left is a literal, then the addition itself.
    pub fn drive(
        payload: &Payload,
        lifts: SumLifts<'_>,
        rule: StepRule,
        drive_inner: &mut impl FnMut(&Term) -> Option<(Term, S)>,
    ) -> Option<SumStep<S>> {
        let (left, right) = view_sum(payload)?;
        match literal(lifts.nat, left) {
            None => {
                if let Some((left_to, inner)) = drive_inner(left) {
                    return Some(SumStep::Left {
                        inner: Box::new(inner),
                        left: left.clone(),
                        left_to,
                        right: right.clone(),
                    });
                }
                if rule.relaxed_stepr {
                    return step_right(left, right, drive_inner);
                }
                None
            }
            Some(n) => {
                if let Some(step) = step_right(left, right, drive_inner) {
                    return Some(step);
                }
                let m = literal(lifts.nat, right)?;
                n.checked_add(m)?;
                Some(SumStep::Value { n, m })
            }
        }
    }
}

fn step_right<S>(
    left: &Term,
    right: &Term,
    drive_inner: &mut impl FnMut(&Term) -> Option<(Term, S)>,
) -> Option<SumStep<S>> {
    let (right_to, inner) = drive_inner(right)?;
    Some(SumStep::Right {
        inner: Box::new(inner),
        left: left.clone(),
        right: right.clone(),
        right_to,
    })
}
