//! Polynomial functors, their set interpretation and the fixed point.
//!
//! A [`FunctorDesc`] describes one layer of syntax. A [`Payload<T>`] is an
//! inhabitant of that layer whose recursive positions hold values of type `T`;
//! with `T = Term` it is one unrolled node of the fixed point.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// The constant sets an atom may range over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BaseSet {
    Nat,
    Unit,
}

/// A constant leaf of a payload. The tag is implied by the variant, so an
/// atom can never disagree with its set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AtomValue {
    Nat(u64),
    Unit,
}

impl AtomValue {
    pub fn set(self) -> BaseSet {
        match self {
            AtomValue::Nat(_) => BaseSet::Nat,
            AtomValue::Unit => BaseSet::Unit,
        }
    }
}

/// Syntax of polynomial functors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FunctorDesc {
    /// The recursion slot `X`.
    Rec,
    /// A constant set `A C`.
    Atom(BaseSet),
    Sum(Box<FunctorDesc>, Box<FunctorDesc>),
    Prod(Box<FunctorDesc>, Box<FunctorDesc>),
}

impl FunctorDesc {
    pub fn sum(left: FunctorDesc, right: FunctorDesc) -> Self {
        FunctorDesc::Sum(Box::new(left), Box::new(right))
    }

    pub fn prod(left: FunctorDesc, right: FunctorDesc) -> Self {
        FunctorDesc::Prod(Box::new(left), Box::new(right))
    }
}

impl fmt::Display for FunctorDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FunctorDesc::Rec => f.write_str("X"),
            FunctorDesc::Atom(BaseSet::Nat) => f.write_str("A ℕ"),
            FunctorDesc::Atom(BaseSet::Unit) => f.write_str("A ⊤"),
            FunctorDesc::Sum(l, r) => write!(f, "({l} ⊕ {r})"),
            FunctorDesc::Prod(l, r) => write!(f, "({l} ⊗ {r})"),
        }
    }
}

/// An element of `[F] T` for some descriptor `F`.
///
/// Payloads carry no descriptor; use [`validate_payload`] to check one against
/// a [`FunctorDesc`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Payload<T = Term> {
    Slot(T),
    Atom(AtomValue),
    InL(Box<Payload<T>>),
    InR(Box<Payload<T>>),
    Pair(Box<Payload<T>>, Box<Payload<T>>),
}

impl<T> Payload<T> {
    pub fn inl(p: Payload<T>) -> Self {
        Payload::InL(Box::new(p))
    }

    pub fn inr(p: Payload<T>) -> Self {
        Payload::InR(Box::new(p))
    }

    pub fn pair(fst: Payload<T>, snd: Payload<T>) -> Self {
        Payload::Pair(Box::new(fst), Box::new(snd))
    }

    pub fn nat(n: u64) -> Self {
        Payload::Atom(AtomValue::Nat(n))
    }

    pub fn unit() -> Self {
        Payload::Atom(AtomValue::Unit)
    }

    /// Number of payload constructors, slots and atoms counted as one.
    pub fn size(&self) -> usize {
        match self {
            Payload::Slot(_) | Payload::Atom(_) => 1,
            Payload::InL(p) | Payload::InR(p) => 1 + p.size(),
            Payload::Pair(a, b) => 1 + a.size() + b.size(),
        }
    }
}

/// A node of the fixed point `μ F`: `inn` applied to one unrolled layer.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Term(Arc<Payload<Term>>);

impl Term {
    /// `inn`. No shape check is made here; see [`Term::is_valid_over`].
    pub fn inn(node: Payload<Term>) -> Self {
        Term(Arc::new(node))
    }

    pub fn node(&self) -> &Payload<Term> {
        &self.0
    }

    /// Whether this term, and every term below it, inhabits `μ desc`.
    pub fn is_valid_over(&self, desc: &FunctorDesc) -> bool {
        validate_payload(desc, self.node(), &mut |t: &Term| t.is_valid_over(desc))
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "inn({:?})", self.0)
    }
}

/// Shape check realizing the interpretation `[desc]`. Slots are accepted under
/// `Rec` exactly when `check_slot` accepts their content.
pub fn validate_payload<T>(
    desc: &FunctorDesc,
    p: &Payload<T>,
    check_slot: &mut impl FnMut(&T) -> bool,
) -> bool {
    match (desc, p) {
        (FunctorDesc::Rec, Payload::Slot(t)) => check_slot(t),
        (FunctorDesc::Atom(set), Payload::Atom(v)) => v.set() == *set,
        (FunctorDesc::Sum(l, _), Payload::InL(p)) => validate_payload(l, p, check_slot),
        (FunctorDesc::Sum(_, r), Payload::InR(p)) => validate_payload(r, p, check_slot),
        (FunctorDesc::Prod(l, r), Payload::Pair(a, b)) => {
            validate_payload(l, a, check_slot) && validate_payload(r, b, check_slot)
        }
        _ => false,
    }
}

/// Shape check ignoring slot contents.
pub fn has_shape<T>(desc: &FunctorDesc, p: &Payload<T>) -> bool {
    validate_payload(desc, p, &mut |_| true)
}

/// The functorial action of `desc` on a payload: `g` is applied to every slot,
/// atoms and injections are left alone.
pub fn fmap<A, B>(
    desc: &FunctorDesc,
    p: &Payload<A>,
    g: &mut impl FnMut(&A) -> B,
) -> Result<Payload<B>> {
    // Shape first so that `g` is never run on a rejected payload.
    if !has_shape(desc, p) {
        return Err(Error::ShapeMismatch {
            expected: desc.to_string(),
        });
    }
    Ok(map_slots(p, g))
}

/// Slot-wise map without a shape check.
pub fn map_slots<A, B>(p: &Payload<A>, g: &mut impl FnMut(&A) -> B) -> Payload<B> {
    match p {
        Payload::Slot(a) => Payload::Slot(g(a)),
        Payload::Atom(v) => Payload::Atom(*v),
        Payload::InL(p) => Payload::inl(map_slots(p, g)),
        Payload::InR(p) => Payload::inr(map_slots(p, g)),
        Payload::Pair(a, b) => {
            let a = map_slots(a, g);
            Payload::pair(a, map_slots(b, g))
        }
    }
}

/// Fallible variant of [`map_slots`].
pub fn try_map_slots<A, B, E>(
    p: &Payload<A>,
    g: &mut impl FnMut(&A) -> std::result::Result<B, E>,
) -> std::result::Result<Payload<B>, E> {
    Ok(match p {
        Payload::Slot(a) => Payload::Slot(g(a)?),
        Payload::Atom(v) => Payload::Atom(*v),
        Payload::InL(p) => Payload::inl(try_map_slots(p, g)?),
        Payload::InR(p) => Payload::inr(try_map_slots(p, g)?),
        Payload::Pair(a, b) => {
            let a = try_map_slots(a, g)?;
            Payload::pair(a, try_map_slots(b, g)?)
        }
    })
}

/// Catamorphism over `μ desc`: every subterm is folded first, then the
/// algebra sees the node with its slots replaced by the results.
pub fn fold<R>(
    desc: &FunctorDesc,
    t: &Term,
    algebra: &mut impl FnMut(Payload<R>) -> R,
) -> Result<R> {
    if !has_shape(desc, t.node()) {
        return Err(Error::ShapeMismatch {
            expected: desc.to_string(),
        });
    }
    let layer = try_map_slots(t.node(), &mut |child: &Term| fold(desc, child, algebra))?;
    Ok(algebra(layer))
}
