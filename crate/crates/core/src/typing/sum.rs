//! `WtSum`, parametric in the enclosing typing relation `W`.

use crate::fragments::{sum_payload, view_sum};
use crate::functor::{Payload, Term};
use crate::subobject::{Injection, LazyCoercion};

use super::LangType;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SumTyping<W> {
    /// `ok-sum`: `e₁ + e₂ : TNat` from `e₁ : TNat` and `e₂ : TNat`.
    OkSum {
        left: Box<W>,
        right: Box<W>,
        left_term: Term,
        right_term: Term,
    },
}

impl<W> SumTyping<W> {
    pub fn subject(&self, lift_sum: &Injection) -> (LazyCoercion, LangType) {
        match self {
            SumTyping::OkSum {
                left_term,
                right_term,
                ..
            } => (
                lift_sum.lazy(sum_payload(left_term.clone(), right_term.clone())),
                LangType::Nat,
            ),
        }
    }

    pub fn check(&self, valid_inner: &mut impl FnMut(&W, &Term, LangType) -> bool) -> bool {
        match self {
            SumTyping::OkSum {
                left,
                right,
                left_term,
                right_term,
            } => {
                valid_inner(left, left_term, LangType::Nat)
                    && valid_inner(right, right_term, LangType::Nat)
            }
        }
    }

    pub fn infer(
        payload: &Payload,
        infer_inner: &mut impl FnMut(&Term) -> Option<(LangType, W)>,
    ) -> Option<(LangType, SumTyping<W>)> {
        let (e1, e2) = view_sum(payload)?;
        let (LangType::Nat, left) = infer_inner(e1)? else {
            return None;
        };
        let (LangType::Nat, right) = infer_inner(e2)? else {
            return None;
        };
        Some((
            LangType::Nat,
            SumTyping::OkSum {
                left: Box::new(left),
                right: Box::new(right),
                left_term: e1.clone(),
                right_term: e2.clone(),
            },
        ))
    }
}
