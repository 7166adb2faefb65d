//! Bounded exhaustive enumeration of terms and payloads.
//!
//! Constructor depth counts leaves (literals, `nil`, `none`) as depth 0 and
//! every other constructor as one more than its deepest child. The terms of
//! depth at most `d` are the leaves plus every constructor applied to terms
//! of depth at most `d - 1`, which yields each term exactly once.

use crate::error::{Error, Result};
use crate::fragments::{assign, enat, index, nil, none, plus, some};
use crate::functor::{BaseSet, FunctorDesc, Payload, Term};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumerator {
    pub literals: Vec<u64>,
    pub cap: usize,
    /// Largest population [`Enumerator::terms`] will materialize.
    pub budget: u128,
    /// Largest population [`Enumerator::for_each`] will visit.
    pub stream_budget: u128,
}

impl Default for Enumerator {
    fn default() -> Self {
        Enumerator {
            literals: vec![0, 1, 2],
            cap: 4,
            budget: 1_000_000,
            stream_budget: 50_000_000,
        }
    }
}

impl Enumerator {
    pub fn with_literals(literals: Vec<u64>) -> Self {
        Enumerator {
            literals,
            ..Self::default()
        }
    }

    /// Number of terms of depth at most `depth`, saturating.
    pub fn population(&self, depth: usize) -> u128 {
        let leaves = self.literals.len() as u128 + 2;
        let mut n = leaves;
        for _ in 0..depth {
            let sq = n.saturating_mul(n);
            n = leaves
                .saturating_add(n)
                .saturating_add(sq.saturating_mul(2))
                .saturating_add(sq.saturating_mul(n));
        }
        n
    }

    fn admit(&self, depth: usize, budget: u128) -> Result<()> {
        if depth > self.cap {
            return Err(Error::DepthCapExceeded {
                depth,
                cap: self.cap,
            });
        }
        let size = self.population(depth);
        if size > budget {
            return Err(Error::PopulationTooLarge {
                depth,
                size,
                budget,
            });
        }
        Ok(())
    }

    fn leaves(&self) -> Vec<Term> {
        let mut out: Vec<Term> = self.literals.iter().map(|&n| enat(n)).collect();
        out.push(nil());
        out.push(none());
        out
    }

    fn layer(&self, below: &[Term], f: &mut impl FnMut(Term)) {
        for t in self.leaves() {
            f(t);
        }
        for e in below {
            f(some(e.clone()));
        }
        for a in below {
            for b in below {
                f(plus(a.clone(), b.clone()));
            }
        }
        for a in below {
            for i in below {
                f(index(a.clone(), i.clone()));
            }
        }
        for a in below {
            for i in below {
                for e in below {
                    f(assign(a.clone(), i.clone(), e.clone()));
                }
            }
        }
    }

    fn up_to(&self, depth: usize) -> Vec<Term> {
        let mut terms = self.leaves();
        for _ in 0..depth {
            let mut next = Vec::new();
            self.layer(&terms, &mut |t| next.push(t));
            terms = next;
        }
        terms
    }

    /// Every term of depth at most `depth`, in a fixed order.
    pub fn terms(&self, depth: usize) -> Result<Vec<Term>> {
        self.admit(depth, self.budget)?;
        Ok(self.up_to(depth))
    }

    /// Visits the same sequence as [`Enumerator::terms`] without holding it.
    /// Returns the number of terms visited.
    pub fn for_each(&self, depth: usize, mut f: impl FnMut(&Term)) -> Result<u128> {
        self.admit(depth, self.stream_budget)?;
        let mut count = 0u128;
        let mut visit = |t: Term| {
            count += 1;
            f(&t);
        };
        if depth == 0 {
            self.leaves().into_iter().for_each(&mut visit);
        } else {
            self.layer(&self.up_to(depth - 1), &mut visit);
        }
        Ok(count)
    }
}

/// [`Enumerator::terms`] with the default literal pool and cap.
pub fn enumerate_terms(depth: usize) -> Result<Vec<Term>> {
    Enumerator::default().terms(depth)
}

/// Visits every payload of shape `desc` whose slots are drawn from `slots`
/// and whose natural-number atoms are drawn from `literals`.
pub fn for_each_payload(
    desc: &FunctorDesc,
    slots: &[Term],
    literals: &[u64],
    f: &mut dyn FnMut(Payload),
) {
    match desc {
        FunctorDesc::Rec => slots.iter().for_each(|t| f(Payload::Slot(t.clone()))),
        FunctorDesc::Atom(BaseSet::Nat) => literals.iter().for_each(|&n| f(Payload::nat(n))),
        FunctorDesc::Atom(BaseSet::Unit) => f(Payload::unit()),
        FunctorDesc::Sum(l, r) => {
            for_each_payload(l, slots, literals, &mut |p| f(Payload::inl(p)));
            for_each_payload(r, slots, literals, &mut |p| f(Payload::inr(p)));
        }
        FunctorDesc::Prod(l, r) => for_each_payload(l, slots, literals, &mut |a| {
            for_each_payload(r, slots, literals, &mut |b| f(Payload::pair(a.clone(), b)))
        }),
    }
}
