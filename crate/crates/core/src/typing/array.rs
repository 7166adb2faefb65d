//! `WtArray`, parametric in the enclosing typing relation `W`.

use crate::fragments::{assign_payload, index_payload, nil_payload, view_array, ArrayView};
use crate::functor::{Payload, Term};
use crate::subobject::{Injection, LazyCoercion};

use super::LangType;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ArrayTyping<W> {
    /// `ok-nil`
    OkNil,
    /// `ok-ins`: `a[n] := e : TArray`. Premises are ordered as the rule
    /// states them: array, element, index.
    OkIns {
        array: Box<W>,
        value: Box<W>,
        index: Box<W>,
        array_term: Term,
        value_term: Term,
        index_term: Term,
    },
    /// `ok-lookup`: `a ! e : TOption`.
    OkLookup {
        array: Box<W>,
        index: Box<W>,
        array_term: Term,
        index_term: Term,
    },
}

impl<W> ArrayTyping<W> {
    pub fn subject(&self, lift_array: &Injection) -> (LazyCoercion, LangType) {
        match self {
            ArrayTyping::OkNil => (lift_array.lazy(nil_payload()), LangType::Array),
            ArrayTyping::OkIns {
                array_term,
                value_term,
                index_term,
                ..
            } => (
                lift_array.lazy(assign_payload(
                    array_term.clone(),
                    index_term.clone(),
                    value_term.clone(),
                )),
                LangType::Array,
            ),
            ArrayTyping::OkLookup {
                array_term,
                index_term,
                ..
            } => (
                lift_array.lazy(index_payload(array_term.clone(), index_term.clone())),
                LangType::Option,
            ),
        }
    }

    pub fn check(&self, valid_inner: &mut impl FnMut(&W, &Term, LangType) -> bool) -> bool {
        match self {
            ArrayTyping::OkNil => true,
            ArrayTyping::OkIns {
                array,
                value,
                index,
                array_term,
                value_term,
                index_term,
            } => {
                valid_inner(array, array_term, LangType::Array)
                    && valid_inner(value, value_term, LangType::Nat)
                    && valid_inner(index, index_term, LangType::Nat)
            }
            ArrayTyping::OkLookup {
                array,
                index,
                array_term,
                index_term,
            } => {
                valid_inner(array, array_term, LangType::Array)
                    && valid_inner(index, index_term, LangType::Nat)
            }
        }
    }

    pub fn infer(
        payload: &Payload,
        infer_inner: &mut impl FnMut(&Term) -> Option<(LangType, W)>,
    ) -> Option<(LangType, ArrayTyping<W>)> {
        let mut expect = |t: &Term, ty: LangType| match infer_inner(t)? {
            (found, w) if found == ty => Some(Box::new(w)),
            _ => None,
        };
        match view_array(payload)? {
            ArrayView::Nil => Some((LangType::Array, ArrayTyping::OkNil)),
            ArrayView::Assign {
                array,
                index,
                value,
            } => Some((
                LangType::Array,
                ArrayTyping::OkIns {
                    array: expect(array, LangType::Array)?,
                    value: expect(value, LangType::Nat)?,
                    index: expect(index, LangType::Nat)?,
                    array_term: array.clone(),
                    value_term: value.clone(),
                    index_term: index.clone(),
                },
            )),
            ArrayView::Index { array, index } => Some((
                LangType::Option,
                ArrayTyping::OkLookup {
                    array: expect(array, LangType::Array)?,
                    index: expect(index, LangType::Nat)?,
                    array_term: array.clone(),
                    index_term: index.clone(),
                },
            )),
        }
    }
}
