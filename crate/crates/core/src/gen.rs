//! Random terms and payloads for property runs.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::fragments::{assign, enat, index, nil, none, plus, some};
use crate::functor::{BaseSet, FunctorDesc, Payload, Term};
use crate::typing::LangType;

/// Draws natural-number literals and bounds term depth.
#[derive(Clone, Debug)]
pub struct GenConfig {
    pub literals: Vec<u64>,
    pub max_depth: usize,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            literals: vec![0, 1, 2, 3],
            max_depth: 4,
        }
    }
}

impl GenConfig {
    fn literal(&self, rng: &mut impl Rng) -> u64 {
        *self.literals.choose(rng).unwrap_or(&0)
    }

    fn leaf(&self, rng: &mut impl Rng) -> Term {
        match rng.gen_range(0..4) {
            0 | 1 => enat(self.literal(rng)),
            2 => nil(),
            _ => none(),
        }
    }

    /// Any term of the composed language, typed or not.
    pub fn term(&self, rng: &mut impl Rng) -> Term {
        self.term_at(rng, self.max_depth)
    }

    fn term_at(&self, rng: &mut impl Rng, depth: usize) -> Term {
        if depth == 0 || rng.gen_bool(0.25) {
            return self.leaf(rng);
        }
        let d = depth - 1;
        match rng.gen_range(0..4) {
            0 => some(self.term_at(rng, d)),
            1 => plus(self.term_at(rng, d), self.term_at(rng, d)),
            2 => index(self.term_at(rng, d), self.term_at(rng, d)),
            _ => assign(
                self.term_at(rng, d),
                self.term_at(rng, d),
                self.term_at(rng, d),
            ),
        }
    }

    /// A term that has type `ty`.
    pub fn typed_term(&self, rng: &mut impl Rng, ty: LangType) -> Term {
        self.typed_at(rng, ty, self.max_depth)
    }

    fn typed_at(&self, rng: &mut impl Rng, ty: LangType, depth: usize) -> Term {
        let stop = depth == 0 || rng.gen_bool(0.2);
        let d = depth.saturating_sub(1);
        match ty {
            LangType::Nat => {
                if stop {
                    enat(self.literal(rng))
                } else {
                    plus(
                        self.typed_at(rng, LangType::Nat, d),
                        self.typed_at(rng, LangType::Nat, d),
                    )
                }
            }
            LangType::Option => {
                if stop {
                    return none();
                }
                match rng.gen_range(0..3) {
                    0 => none(),
                    1 => some(self.term_at(rng, d)),
                    _ => index(
                        self.typed_at(rng, LangType::Array, d),
                        self.typed_at(rng, LangType::Nat, d),
                    ),
                }
            }
            LangType::Array => {
                if stop {
                    nil()
                } else {
                    assign(
                        self.typed_at(rng, LangType::Array, d),
                        self.typed_at(rng, LangType::Nat, d),
                        self.typed_at(rng, LangType::Nat, d),
                    )
                }
            }
        }
    }

    /// A payload of shape `desc` with random terms in its slots.
    pub fn payload(&self, rng: &mut impl Rng, desc: &FunctorDesc) -> Payload {
        match desc {
            FunctorDesc::Rec => Payload::Slot(self.term_at(rng, self.max_depth.saturating_sub(1))),
            FunctorDesc::Atom(BaseSet::Nat) => Payload::nat(self.literal(rng)),
            FunctorDesc::Atom(BaseSet::Unit) => Payload::unit(),
            FunctorDesc::Sum(l, r) => {
                if rng.gen_bool(0.5) {
                    Payload::inl(self.payload(rng, l))
                } else {
                    Payload::inr(self.payload(rng, r))
                }
            }
            FunctorDesc::Prod(l, r) => Payload::pair(self.payload(rng, l), self.payload(rng, r)),
        }
    }
}
