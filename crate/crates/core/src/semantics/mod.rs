//! Small-step semantics: per-fragment step derivations, the composed step
//! relation that ties them together, and a deterministic driver.

mod array;
mod sum;

pub use array::{ArrayLifts, ArrayStep};
pub use sum::{SumLifts, SumStep};

use crate::error::Result;
use crate::fragments::{lift_array, lift_nat, lift_option, lift_sum};
use crate::functor::Term;

/// Switches between the strict `stepr` rule, which requires the left operand
/// to be a literal, and the relaxed variant that accepts any left operand.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct StepRule {
    pub relaxed_stepr: bool,
}

impl StepRule {
    pub const STRICT: StepRule = StepRule {
        relaxed_stepr: false,
    };
    pub const RELAXED: StepRule = StepRule {
        relaxed_stepr: true,
    };
}

pub fn sum_lifts() -> SumLifts<'static> {
    SumLifts {
        sum: lift_sum(),
        nat: lift_nat(),
    }
}

pub fn array_lifts() -> ArrayLifts<'static> {
    ArrayLifts {
        array: lift_array(),
        nat: lift_nat(),
        option: lift_option(),
    }
}

/// `_⟶_` on the composed language: `step⁺` and `step[]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ComposedStep {
    Sum(SumStep<ComposedStep>),
    Array(ArrayStep<ComposedStep>),
}

impl ComposedStep {
    /// Source and target terms, reconstructed by coercing the fragment-level
    /// endpoints.
    pub fn endpoints(&self) -> Result<(Term, Term)> {
        match self {
            ComposedStep::Sum(s) => Ok((
                s.source(sum_lifts())?.into_term()?,
                s.target(sum_lifts())?.into_term()?,
            )),
            ComposedStep::Array(s) => Ok((
                s.source(array_lifts())?.into_term()?,
                s.target(array_lifts())?.into_term()?,
            )),
        }
    }

    /// Number of rule applications in the derivation.
    pub fn size(&self) -> usize {
        1 + match self {
            ComposedStep::Sum(s) => s.inner().map_or(0, ComposedStep::size),
            ComposedStep::Array(s) => s.inner().map_or(0, ComposedStep::size),
        }
    }
}

pub fn step_endpoints(d: &ComposedStep) -> Result<(Term, Term)> {
    d.endpoints()
}

/// Result of iterating the driver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trace {
    pub start: Term,
    /// Each step's target together with its derivation.
    pub steps: Vec<(Term, ComposedStep)>,
    /// Set when fuel ran out while the last term could still step.
    pub fuel_exhausted: bool,
}

impl Trace {
    pub fn last(&self) -> &Term {
        self.steps.last().map_or(&self.start, |(t, _)| t)
    }
}

impl StepRule {
    pub fn validate_step(self, d: &ComposedStep, from: &Term, to: &Term) -> bool {
        let mut inner = |s: &ComposedStep, a: &Term, b: &Term| self.validate_step(s, a, b);
        let rules_hold = match d {
            ComposedStep::Sum(s) => s.check(sum_lifts(), self, &mut inner),
            ComposedStep::Array(s) => s.check(array_lifts(), &mut inner),
        };
        rules_hold
            && match d.endpoints() {
                Ok((a, b)) => a == *from && b == *to,
                Err(_) => false,
            }
    }

    pub fn drive_step(self, t: &Term) -> Option<(Term, ComposedStep)> {
        let mut inner = |t: &Term| self.drive_step(t);
        let step = if let Some(p) = lift_sum().peel(t) {
            ComposedStep::Sum(SumStep::drive(p, sum_lifts(), self, &mut inner)?)
        } else {
            let p = lift_array().peel(t)?;
            ComposedStep::Array(ArrayStep::drive(p, array_lifts(), &mut inner)?)
        };
        let (_, target) = step.endpoints().ok()?;
        Some((target, step))
    }

    pub fn trace(self, t: &Term, fuel: usize) -> Trace {
        let mut steps: Vec<(Term, ComposedStep)> = Vec::new();
        let mut at = t.clone();
        for _ in 0..fuel {
            match self.drive_step(&at) {
                Some((next, d)) => {
                    at = next.clone();
                    steps.push((next, d));
                }
                None => {
                    return Trace {
                        start: t.clone(),
                        steps,
                        fuel_exhausted: false,
                    }
                }
            }
        }
        let fuel_exhausted = self.drive_step(&at).is_some();
        Trace {
            start: t.clone(),
            steps,
            fuel_exhausted,
        }
    }
}

/// Checks that `d` derives `from ⟶ to` under the strict rule set.
pub fn validate_step(d: &ComposedStep, from: &Term, to: &Term) -> bool {
    StepRule::STRICT.validate_step(d, from, to)
}

/// One step of the deterministic strategy, with its derivation.
pub fn drive_step(t: &Term) -> Option<(Term, ComposedStep)> {
    StepRule::STRICT.drive_step(t)
}

pub fn trace(t: &Term, fuel: usize) -> Trace {
    StepRule::STRICT.trace(t, fuel)
}
