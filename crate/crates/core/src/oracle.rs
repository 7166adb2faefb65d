//! A monolithic rendition of the same language, written directly over a
//! closed syntax tree. It shares no code with the modular step and typing
//! machinery and serves as ground truth for it.

use crate::functor::{AtomValue, Payload, Term};
use crate::typing::LangType;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonoExpr {
    Atom(u64),
    ESome(Box<MonoExpr>),
    ENone,
    Nil,
    Lookup(Box<MonoExpr>, Box<MonoExpr>),
    Ins(Box<MonoExpr>, Box<MonoExpr>, Box<MonoExpr>),
    Plus(Box<MonoExpr>, Box<MonoExpr>),
}

use MonoExpr::*;

fn bx(e: MonoExpr) -> Box<MonoExpr> {
    Box::new(e)
}

fn left(p: &Payload) -> Option<&Payload> {
    match p {
        Payload::InL(p) => Some(p),
        _ => None,
    }
}

fn right(p: &Payload) -> Option<&Payload> {
    match p {
        Payload::InR(p) => Some(p),
        _ => None,
    }
}

fn pair(p: &Payload) -> Option<(&Payload, &Payload)> {
    match p {
        Payload::Pair(a, b) => Some((a, b)),
        _ => None,
    }
}

fn slot(p: &Payload) -> Option<MonoExpr> {
    match p {
        Payload::Slot(t) => embed(t),
        _ => None,
    }
}

/// Reads a composed term as a monolithic tree. Fails on terms that are not
/// in the language.
pub fn embed(t: &Term) -> Option<MonoExpr> {
    let node = t.node();
    match node {
        Payload::InL(p) => match p.as_ref() {
            // A ℕ ⊕ Option
            Payload::InL(p) => match p.as_ref() {
                Payload::InL(p) => match p.as_ref() {
                    Payload::Atom(AtomValue::Nat(n)) => Some(Atom(*n)),
                    _ => None,
                },
                Payload::InR(p) => match p.as_ref() {
                    Payload::InL(e) => Some(ESome(bx(slot(e)?))),
                    Payload::InR(u) => {
                        matches!(u.as_ref(), Payload::Atom(AtomValue::Unit)).then_some(ENone)
                    }
                    _ => None,
                },
                _ => None,
            },
            // Sum
            Payload::InR(p) => {
                let (a, b) = pair(p)?;
                Some(Plus(bx(slot(a)?), bx(slot(b)?)))
            }
            _ => None,
        },
        Payload::InR(p) => {
            if let Some(p) = left(p) {
                if let Some(p) = left(p) {
                    let (a, rest) = pair(p)?;
                    let (i, e) = pair(rest)?;
                    return Some(Ins(bx(slot(a)?), bx(slot(i)?), bx(slot(e)?)));
                }
                let u = right(p)?;
                return matches!(u, Payload::Atom(AtomValue::Unit)).then_some(Nil);
            }
            let (a, i) = pair(right(p)?)?;
            Some(Lookup(bx(slot(a)?), bx(slot(i)?)))
        }
        _ => None,
    }
}

fn s(m: &MonoExpr) -> Payload {
    Payload::Slot(project(m))
}

/// Inverse of [`embed`].
pub fn project(m: &MonoExpr) -> Term {
    use Payload as P;
    let node = match m {
        Atom(n) => P::inl(P::inl(P::inl(P::nat(*n)))),
        ESome(e) => P::inl(P::inl(P::inr(P::inl(s(e))))),
        ENone => P::inl(P::inl(P::inr(P::inr(P::unit())))),
        Plus(a, b) => P::inl(P::inr(P::pair(s(a), s(b)))),
        Ins(a, i, e) => P::inr(P::inl(P::inl(P::pair(s(a), P::pair(s(i), s(e)))))),
        Nil => P::inr(P::inl(P::inr(P::unit()))),
        Lookup(a, i) => P::inr(P::inr(P::pair(s(a), s(i)))),
    };
    Term::inn(node)
}

/// `Welltyped`, checked directly.
pub fn mono_infer(m: &MonoExpr) -> Option<LangType> {
    let is = |e: &MonoExpr, ty: LangType| mono_infer(e) == Some(ty);
    match m {
        Atom(_) => Some(LangType::Nat),
        ESome(_) | ENone => Some(LangType::Option),
        Plus(a, b) => (is(a, LangType::Nat) && is(b, LangType::Nat)).then_some(LangType::Nat),
        Nil => Some(LangType::Array),
        Ins(a, i, e) => (is(a, LangType::Array) && is(i, LangType::Nat) && is(e, LangType::Nat))
            .then_some(LangType::Array),
        Lookup(a, i) => {
            (is(a, LangType::Array) && is(i, LangType::Nat)).then_some(LangType::Option)
        }
    }
}

fn lookup(a: &MonoExpr, n: u64) -> MonoExpr {
    match a {
        Ins(rest, i, e) => match i.as_ref() {
            Atom(k) if *k == n => ESome(e.clone()),
            Atom(_) => lookup(rest, n),
            _ => ENone,
        },
        _ => ENone,
    }
}

/// `_⟶E_` under the same deterministic strategy as the modular driver.
pub fn mono_step(m: &MonoExpr) -> Option<MonoExpr> {
    match m {
        Plus(a, b) => match (a.as_ref(), b.as_ref()) {
            (Atom(n), Atom(k)) => Some(Atom(n.checked_add(*k)?)),
            (Atom(_), _) => Some(Plus(a.clone(), bx(mono_step(b)?))),
            _ => Some(Plus(bx(mono_step(a)?), b.clone())),
        },
        Lookup(a, i) => {
            if let Some(i2) = mono_step(i) {
                return Some(Lookup(a.clone(), bx(i2)));
            }
            match (a.as_ref(), i.as_ref()) {
                (Nil | Ins(..) | Lookup(..), Atom(n)) => Some(lookup(a, *n)),
                _ => None,
            }
        }
        _ => None,
    }
}

/// Iterates [`mono_step`] at most `fuel` times, returning every term
/// reached after the start.
pub fn mono_trace(m: &MonoExpr, fuel: usize) -> Vec<MonoExpr> {
    let mut out: Vec<MonoExpr> = Vec::new();
    for _ in 0..fuel {
        match mono_step(out.last().unwrap_or(m)) {
            Some(next) => out.push(next),
            None => break,
        }
    }
    out
}
