//! Modular language fragments over polynomial functors.
//!
//! Syntax is the fixed point of a sum of per-fragment functors. Each
//! fragment states its step and typing rules over an abstract enclosing
//! language, reached through injections, and proves type preservation
//! against a small set of hooks. Instantiating those hooks ties the
//! fragments into one language: naturals with `+`, options, and arrays with
//! insertion and lookup.

pub mod checks;
pub mod enumerate;
pub mod error;
pub mod fragments;
pub mod functor;
pub mod gen;
pub mod oracle;
pub mod preservation;
pub mod semantics;
pub mod sexpr;
pub mod subobject;
pub mod syntax;
pub mod typing;

pub use error::{Error, Result};
pub use functor::{fmap, fold, AtomValue, BaseSet, FunctorDesc, Payload, Term};
pub use preservation::preserve;
pub use semantics::{drive_step, validate_step, ComposedStep, StepRule};
pub use subobject::{downcast, upcast, ContainsPath, Direction, Injection};
pub use typing::{infer, validate_typing, ComposedTyping, LangType};
