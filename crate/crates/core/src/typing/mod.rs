//! Types, per-fragment typing derivations and the composed typing relation.

mod array;
mod sum;

use std::fmt;

pub use array::ArrayTyping;
pub use sum::SumTyping;

use crate::error::{Error, Result};
use crate::fragments::{lift_array, lift_nat, lift_option, lift_sum, option_shape};
use crate::functor::{has_shape, AtomValue, Payload, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LangType {
    Nat,
    Option,
    Array,
}

impl LangType {
    pub const ALL: [LangType; 3] = [LangType::Nat, LangType::Option, LangType::Array];
}

impl fmt::Display for LangType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LangType::Nat => "TNat",
            LangType::Option => "TOption",
            LangType::Array => "TArray",
        })
    }
}

/// `WtExpr`: the typing relation of the composed language, tying the
/// fragment relations back to itself.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ComposedTyping {
    /// `lift-wt-nat n`
    Nat(u64),
    /// `lift-wt-option m`. The payload's contents are not inspected.
    Option(Payload),
    /// `lift-wt-sum`
    Sum(SumTyping<ComposedTyping>),
    /// `lift-wt-array`
    Array(ArrayTyping<ComposedTyping>),
}

impl ComposedTyping {
    /// The judgement `term : type` this derivation claims.
    pub fn subject(&self) -> Result<(Term, LangType)> {
        match self {
            ComposedTyping::Nat(n) => Ok((lift_nat().apply(Payload::nat(*n))?, LangType::Nat)),
            ComposedTyping::Option(m) => {
                let t = lift_option().apply(m.clone()).map_err(|_| {
                    Error::MalformedDerivation("lift-wt-option payload is not an option".into())
                })?;
                Ok((t, LangType::Option))
            }
            ComposedTyping::Sum(s) => {
                let (lazy, ty) = s.subject(lift_sum());
                Ok((lazy.into_term()?, ty))
            }
            ComposedTyping::Array(a) => {
                let (lazy, ty) = a.subject(lift_array());
                Ok((lazy.into_term()?, ty))
            }
        }
    }

    /// Number of rule applications, lifts included.
    pub fn size(&self) -> usize {
        1 + match self {
            ComposedTyping::Nat(_) | ComposedTyping::Option(_) => 0,
            ComposedTyping::Sum(SumTyping::OkSum { left, right, .. }) => {
                1 + left.size() + right.size()
            }
            ComposedTyping::Array(ArrayTyping::OkNil) => 1,
            ComposedTyping::Array(ArrayTyping::OkIns {
                array,
                value,
                index,
                ..
            }) => 1 + array.size() + value.size() + index.size(),
            ComposedTyping::Array(ArrayTyping::OkLookup { array, index, .. }) => {
                1 + array.size() + index.size()
            }
        }
    }

    fn rules_hold(&self) -> bool {
        let mut inner = |w: &ComposedTyping, t: &Term, ty: LangType| validate_typing(w, t, ty);
        match self {
            ComposedTyping::Nat(_) => true,
            ComposedTyping::Option(m) => has_shape(option_shape(), m),
            ComposedTyping::Sum(s) => s.check(&mut inner),
            ComposedTyping::Array(a) => a.check(&mut inner),
        }
    }
}

pub fn typing_subject(d: &ComposedTyping) -> Result<(Term, LangType)> {
    d.subject()
}

/// Checks that `d` derives `t : ty`.
pub fn validate_typing(d: &ComposedTyping, t: &Term, ty: LangType) -> bool {
    d.rules_hold()
        && match d.subject() {
            Ok((subject, claimed)) => claimed == ty && subject == *t,
            Err(_) => false,
        }
}

/// Syntax-directed inference producing the unique derivation, if any.
pub fn infer(t: &Term) -> Option<(LangType, ComposedTyping)> {
    if let Some(p) = lift_nat().peel(t) {
        return match p {
            Payload::Atom(AtomValue::Nat(n)) => Some((LangType::Nat, ComposedTyping::Nat(*n))),
            _ => None,
        };
    }
    if let Some(p) = lift_option().peel(t) {
        return has_shape(option_shape(), p)
            .then(|| (LangType::Option, ComposedTyping::Option(p.clone())));
    }
    if let Some(p) = lift_sum().peel(t) {
        let (ty, s) = SumTyping::infer(p, &mut infer)?;
        return Some((ty, ComposedTyping::Sum(s)));
    }
    if let Some(p) = lift_array().peel(t) {
        let (ty, a) = ArrayTyping::infer(p, &mut infer)?;
        return Some((ty, ComposedTyping::Array(a)));
    }
    None
}
