//! The concrete fragments (naturals, options, sums, arrays), the composed
//! language built from them, and its smart constructors.

use std::sync::LazyLock;

use crate::error::{Error, Result};
use crate::functor::{has_shape, AtomValue, BaseSet, FunctorDesc, Payload, Term};
use crate::subobject::{ContainsPath, Direction, Injection};

use Direction::{Left, Right};
use FunctorDesc::Rec;

/// `A ℕ`
pub fn nat_shape() -> &'static FunctorDesc {
    static SHAPE: LazyLock<FunctorDesc> = LazyLock::new(|| FunctorDesc::Atom(BaseSet::Nat));
    &SHAPE
}

/// `X ⊕ A ⊤`
pub fn option_shape() -> &'static FunctorDesc {
    static SHAPE: LazyLock<FunctorDesc> =
        LazyLock::new(|| FunctorDesc::sum(Rec, FunctorDesc::Atom(BaseSet::Unit)));
    &SHAPE
}

/// `X ⊗ X`
pub fn sum_shape() -> &'static FunctorDesc {
    static SHAPE: LazyLock<FunctorDesc> = LazyLock::new(|| FunctorDesc::prod(Rec, Rec));
    &SHAPE
}

/// `X ⊗ X ⊗ X ⊕ A ⊤ ⊕ X ⊗ X`, with `⊗` binding tighter and both operators
/// associating as declared (`⊕` to the left, `⊗` to the right).
pub fn array_shape() -> &'static FunctorDesc {
    static SHAPE: LazyLock<FunctorDesc> = LazyLock::new(|| {
        FunctorDesc::sum(
            FunctorDesc::sum(
                FunctorDesc::prod(Rec, FunctorDesc::prod(Rec, Rec)),
                FunctorDesc::Atom(BaseSet::Unit),
            ),
            FunctorDesc::prod(Rec, Rec),
        )
    });
    &SHAPE
}

/// `A ℕ ⊕ Option ⊕ Sum ⊕ Array`, left-nested.
pub fn fexpr() -> &'static FunctorDesc {
    static SHAPE: LazyLock<FunctorDesc> = LazyLock::new(|| {
        FunctorDesc::sum(
            FunctorDesc::sum(
                FunctorDesc::sum(nat_shape().clone(), option_shape().clone()),
                sum_shape().clone(),
            ),
            array_shape().clone(),
        )
    });
    &SHAPE
}

fn lift(steps: &[Direction]) -> Injection {
    Injection::new(ContainsPath::new(fexpr().clone(), steps.to_vec()).expect("fixed lift path"))
}

/// `left (left (left refl))`
pub fn lift_nat() -> &'static Injection {
    static LIFT: LazyLock<Injection> = LazyLock::new(|| lift(&[Left, Left, Left]));
    &LIFT
}

/// `right (left (left refl))`
pub fn lift_option() -> &'static Injection {
    static LIFT: LazyLock<Injection> = LazyLock::new(|| lift(&[Right, Left, Left]));
    &LIFT
}

/// `right (left refl)`
pub fn lift_sum() -> &'static Injection {
    static LIFT: LazyLock<Injection> = LazyLock::new(|| lift(&[Right, Left]));
    &LIFT
}

/// `right refl`
pub fn lift_array() -> &'static Injection {
    static LIFT: LazyLock<Injection> = LazyLock::new(|| lift(&[Right]));
    &LIFT
}

// Fragment payloads. These are the arguments the lifts are applied to.

pub fn some_payload(e: Term) -> Payload {
    Payload::inl(Payload::Slot(e))
}

pub fn none_payload() -> Payload {
    Payload::inr(Payload::unit())
}

pub fn sum_payload(e1: Term, e2: Term) -> Payload {
    Payload::pair(Payload::Slot(e1), Payload::Slot(e2))
}

pub fn assign_payload(array: Term, index: Term, value: Term) -> Payload {
    Payload::inl(Payload::inl(Payload::pair(
        Payload::Slot(array),
        Payload::pair(Payload::Slot(index), Payload::Slot(value)),
    )))
}

pub fn nil_payload() -> Payload {
    Payload::inl(Payload::inr(Payload::unit()))
}

pub fn index_payload(array: Term, index: Term) -> Payload {
    Payload::inr(Payload::pair(Payload::Slot(array), Payload::Slot(index)))
}

fn lifted(inj: &Injection, p: Payload) -> Term {
    inj.apply(p).expect("fragment payload has its lift's shape")
}

pub fn enat(n: u64) -> Term {
    lifted(lift_nat(), Payload::nat(n))
}

pub fn plus(e1: Term, e2: Term) -> Term {
    lifted(lift_sum(), sum_payload(e1, e2))
}

pub fn some(e: Term) -> Term {
    lifted(lift_option(), some_payload(e))
}

pub fn none() -> Term {
    lifted(lift_option(), none_payload())
}

pub fn nil() -> Term {
    lifted(lift_array(), nil_payload())
}

pub fn assign(array: Term, index: Term, value: Term) -> Term {
    lifted(lift_array(), assign_payload(array, index, value))
}

pub fn index(array: Term, index: Term) -> Term {
    lifted(lift_array(), index_payload(array, index))
}

/// A view of an option-fragment payload.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OptionView<'a> {
    Some(&'a Term),
    None,
}

pub fn view_option(p: &Payload) -> Option<OptionView<'_>> {
    match p {
        Payload::InL(inner) => match inner.as_ref() {
            Payload::Slot(e) => Some(OptionView::Some(e)),
            _ => None,
        },
        Payload::InR(inner) => match inner.as_ref() {
            Payload::Atom(AtomValue::Unit) => Some(OptionView::None),
            _ => None,
        },
        _ => None,
    }
}

pub fn view_sum(p: &Payload) -> Option<(&Term, &Term)> {
    match p {
        Payload::Pair(a, b) => match (a.as_ref(), b.as_ref()) {
            (Payload::Slot(a), Payload::Slot(b)) => Some((a, b)),
            _ => None,
        },
        _ => None,
    }
}

/// A view of an array-fragment payload.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArrayView<'a> {
    Assign {
        array: &'a Term,
        index: &'a Term,
        value: &'a Term,
    },
    Nil,
    Index {
        array: &'a Term,
        index: &'a Term,
    },
}

pub fn view_array(p: &Payload) -> Option<ArrayView<'_>> {
    match p {
        Payload::InL(p) => match p.as_ref() {
            Payload::InL(p) => match p.as_ref() {
                Payload::Pair(a, rest) => match (a.as_ref(), rest.as_ref()) {
                    (Payload::Slot(array), Payload::Pair(i, e)) => match (i.as_ref(), e.as_ref()) {
                        (Payload::Slot(index), Payload::Slot(value)) => Some(ArrayView::Assign {
                            array,
                            index,
                            value,
                        }),
                        _ => None,
                    },
                    _ => None,
                },
                _ => None,
            },
            Payload::InR(p) => match p.as_ref() {
                Payload::Atom(AtomValue::Unit) => Some(ArrayView::Nil),
                _ => None,
            },
            _ => None,
        },
        Payload::InR(p) => view_sum(p).map(|(array, index)| ArrayView::Index { array, index }),
        _ => None,
    }
}

/// One composed-language node, decoded through the lift paths.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExprView<'a> {
    Nat(u64),
    Some(&'a Term),
    None,
    Plus(&'a Term, &'a Term),
    Nil,
    Assign {
        array: &'a Term,
        index: &'a Term,
        value: &'a Term,
    },
    Index {
        array: &'a Term,
        index: &'a Term,
    },
}

pub fn view(t: &Term) -> Option<ExprView<'_>> {
    if let Some(p) = lift_nat().peel(t) {
        return match p {
            Payload::Atom(AtomValue::Nat(n)) => Some(ExprView::Nat(*n)),
            _ => None,
        };
    }
    if let Some(p) = lift_option().peel(t) {
        return view_option(p).map(|o| match o {
            OptionView::Some(e) => ExprView::Some(e),
            OptionView::None => ExprView::None,
        });
    }
    if let Some(p) = lift_sum().peel(t) {
        return view_sum(p).map(|(a, b)| ExprView::Plus(a, b));
    }
    if let Some(p) = lift_array().peel(t) {
        return view_array(p).map(|a| match a {
            ArrayView::Assign {
                array,
                index,
                value,
            } => ExprView::Assign {
                array,
                index,
                value,
            },
            ArrayView::Nil => ExprView::Nil,
            ArrayView::Index { array, index } => ExprView::Index { array, index },
        });
    }
    None
}

/// The literal `n` if `t` is `enat n`.
pub fn as_nat(t: &Term) -> Option<u64> {
    match lift_nat().peel(t) {
        Some(Payload::Atom(AtomValue::Nat(n))) => Some(*n),
        _ => None,
    }
}

/// Values: literals, `none`, `some v` for a value `v`, and arrays built from
/// `nil` by assignments of literals to literal indices.
pub fn is_value(t: &Term) -> bool {
    match view(t) {
        Some(ExprView::Nat(_) | ExprView::None | ExprView::Nil) => true,
        Some(ExprView::Some(v)) => is_value(v),
        Some(ExprView::Assign {
            array,
            index,
            value,
        }) => {
            as_nat(index).is_some()
                && as_nat(value).is_some()
                && matches!(view(array), Some(ExprView::Nil | ExprView::Assign { .. }))
                && is_value(array)
        }
        _ => false,
    }
}

/// `L⟦a, n⟧`: the option payload `some e` for the outermost assignment of
/// `e` at literal index `n`, and `none` otherwise. The scan gives up with
/// `none` at the first node that is neither `nil` nor an assignment with a
/// literal index.
pub fn array_lookup(a: &Payload, n: u64) -> Result<Payload> {
    array_lookup_via(lift_array(), lift_nat(), a, n)
}

/// [`array_lookup`] for an array fragment embedded through `lift_array`,
/// with literals recognised through `lift_nat`.
pub fn array_lookup_via(
    lift_array: &Injection,
    lift_nat: &Injection,
    a: &Payload,
    n: u64,
) -> Result<Payload> {
    let shape = lift_array.target();
    if !has_shape(shape, a) {
        return Err(Error::ShapeMismatch {
            expected: shape.to_string(),
        });
    }
    let literal = |t: &Term| match lift_nat.peel(t) {
        Some(Payload::Atom(AtomValue::Nat(k))) => Some(*k),
        _ => None,
    };
    let mut at = a;
    loop {
        match view_array(at) {
            Some(ArrayView::Assign {
                array,
                index,
                value,
            }) => match literal(index) {
                Some(k) if k == n => return Ok(some_payload(value.clone())),
                Some(_) => match lift_array.peel(array) {
                    Some(next) if has_shape(shape, next) => at = next,
                    _ => return Ok(none_payload()),
                },
                None => return Ok(none_payload()),
            },
            _ => return Ok(none_payload()),
        }
    }
}
