//! Step relation of the array fragment.

use crate::error::Result;
use crate::fragments::{array_lookup_via, index_payload, view_array, ArrayView};
use crate::functor::{has_shape, AtomValue, Payload, Term};
use crate::subobject::{Injection, LazyCoercion};

#[derive(Clone, Copy, Debug)]
pub struct ArrayLifts<'a> {
    pub array: &'a Injection,
    pub nat: &'a Injection,
    pub option: &'a Injection,
}

/// `_⟶[]_`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ArrayStep<S> {
    /// `stepi`: `a ! e ⟶ a ! e'` from `e ⟶ e'`.
    Index {
        inner: Box<S>,
        array: Term,
        index: Term,
        index_to: Term,
    },
    /// `lookup`: `liftA a ! liftℕ n ⟶ liftO L⟦a, n⟧`.
    Lookup { array: Payload, n: u64 },
}

impl<S> ArrayStep<S> {
    pub fn inner(&self) -> Option<&S> {
        match self {
            ArrayStep::Index { inner, .. } => Some(inner),
            ArrayStep::Lookup { .. } => None,
        }
    }

    pub fn source(&self, lifts: ArrayLifts<'_>) -> Result<LazyCoercion> {
        let payload = match self {
            ArrayStep::Index { array, index, .. } => index_payload(array.clone(), index.clone()),
            ArrayStep::Lookup { array, n } => index_payload(
                lifts.array.apply(array.clone())?,
                lifts.nat.apply(Payload::nat(*n))?,
            ),
        };
        Ok(lifts.array.lazy(payload))
    }

    pub fn target(&self, lifts: ArrayLifts<'_>) -> Result<LazyCoercion> {
        Ok(match self {
            ArrayStep::Index {
                array, index_to, ..
            } => lifts
                .array
                .lazy(index_payload(array.clone(), index_to.clone())),
            ArrayStep::Lookup { array, n } => {
                lifts
                    .option
                    .lazy(array_lookup_via(lifts.array, lifts.nat, array, *n)?)
            }
        })
    }

    pub fn check(
        &self,
        lifts: ArrayLifts<'_>,
        valid_inner: &mut impl FnMut(&S, &Term, &Term) -> bool,
    ) -> bool {
        match self {
            ArrayStep::Index {
                inner,
                index,
                index_to,
                ..
            } => valid_inner(inner, index, index_to),
            ArrayStep::Lookup { array, .. } => has_shape(lifts.array.target(), array),
        }
    }

    /// Steps the index while it can step; otherwise looks up once the index
    /// is a literal and the array operand is an array-fragment term.
    pub fn drive(
        payload: &Payload,
        lifts: ArrayLifts<'_>,
        drive_inner: &mut impl FnMut(&Term) -> Option<(Term, S)>,
    ) -> Option<ArrayStep<S>> {
        let Some(ArrayView::Index { array, index }) = view_array(payload) else {
            return None;
        };
        if let Some((index_to, inner)) = drive_inner(index) {
            return Some(ArrayStep::Index {
                inner: Box::new(inner),
                array: array.clone(),
                index: index.clone(),
                index_to,
            });
        }
        let Some(Payload::Atom(AtomValue::Nat(n))) = lifts.nat.peel(index) else {
            return None;
        };
        let a = lifts.array.peel(array)?;
        if !has_shape(lifts.array.target(), a) {
            return None;
        }
        Some(ArrayStep::Lookup {
            array: a.clone(),
            n: *n,
        })
    }
}
