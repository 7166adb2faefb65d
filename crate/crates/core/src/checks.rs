//! Per-term property checks and exhaustive sweeps over an enumeration.

use std::fmt;

use crate::enumerate::Enumerator;
use crate::error::Result;
use crate::fragments::is_value;
use crate::functor::Term;
use crate::oracle::{embed, mono_infer, mono_step};
use crate::preservation::preserve;
use crate::semantics::{drive_step, validate_step};
use crate::sexpr;
use crate::syntax;
use crate::typing::{infer, validate_typing};

/// Which properties a sweep checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    /// Modular typing and stepping against the monolithic oracle.
    Oracle,
    /// Everything: driver soundness, values, inference, preservation,
    /// oracle agreement and serialization round trips.
    Full,
}

#[derive(Clone, Debug, Default)]
pub struct SweepReport {
    pub visited: u128,
    pub well_typed: u128,
    pub stepped: u128,
    pub failure_count: u128,
    /// The first few failures, for display.
    pub failures: Vec<String>,
}

const KEPT_FAILURES: usize = 10;

impl SweepReport {
    pub fn ok(&self) -> bool {
        self.failure_count == 0
    }

    fn fail(&mut self, t: &Term, what: &str) {
        self.failure_count += 1;
        if self.failures.len() < KEPT_FAILURES {
            let shown = syntax::render(t).unwrap_or_else(|_| format!("{t:?}"));
            self.failures.push(format!("{shown}: {what}"));
        }
    }
}

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "terms visited:   {}", self.visited)?;
        writeln!(f, "well typed:      {}", self.well_typed)?;
        writeln!(f, "stepped:         {}", self.stepped)?;
        write!(f, "failures:        {}", self.failure_count)?;
        for line in &self.failures {
            write!(f, "\n  {line}")?;
        }
        Ok(())
    }
}

fn oracle_checks(t: &Term, report: &mut SweepReport) {
    let Some(m) = embed(t) else {
        report.fail(t, "term has no monolithic counterpart");
        return;
    };
    if infer(t).map(|(ty, _)| ty) != mono_infer(&m) {
        report.fail(t, "typing disagrees with the oracle");
    }
    let modular = drive_step(t).map(|(t2, _)| embed(&t2));
    let mono = mono_step(&m).map(Some);
    if modular != mono {
        report.fail(t, "single step disagrees with the oracle");
    }
}

fn full_checks(t: &Term, report: &mut SweepReport) {
    let typing = infer(t);
    let step = drive_step(t);
    if let Some((ty, w)) = &typing {
        report.well_typed += 1;
        if !validate_typing(w, t, *ty) {
            report.fail(t, "inferred derivation does not validate");
        }
        match sexpr::render_typing(w).and_then(|s| sexpr::parse_typing(&s)) {
            Ok(back) if back == *w => {}
            _ => report.fail(t, "typing s-expression does not round-trip"),
        }
    }
    if let Some((t2, s)) = &step {
        report.stepped += 1;
        if is_value(t) {
            report.fail(t, "a value steps");
        }
        if !validate_step(s, t, t2) {
            report.fail(t, "driver derivation does not validate");
        }
        if sexpr::parse_step(&sexpr::render_step(s), t).as_ref() != Ok(s) {
            report.fail(t, "step s-expression does not round-trip");
        }
        if let Some((ty, w)) = &typing {
            match preserve(s, w) {
                Ok(w2) if validate_typing(&w2, t2, *ty) => {}
                Ok(_) => report.fail(t, "preserved derivation does not validate"),
                Err(e) => report.fail(t, &format!("preservation failed: {e}")),
            }
        }
    }
    match syntax::render(t).and_then(|s| syntax::parse(&s)) {
        Ok(back) if back == *t => {}
        _ => report.fail(t, "surface syntax does not round-trip"),
    }
    oracle_checks(t, report);
}

/// Runs `suite` on every term the enumerator yields at `depth`.
pub fn sweep(e: &Enumerator, depth: usize, suite: Suite) -> Result<SweepReport> {
    let mut report = SweepReport::default();
    report.visited = e.for_each(depth, |t| match suite {
        Suite::Oracle => {
            if infer(t).is_some() {
                report.well_typed += 1;
            }
            if drive_step(t).is_some() {
                report.stepped += 1;
            }
            oracle_checks(t, &mut report)
        }
        Suite::Full => full_checks(t, &mut report),
    })?;
    Ok(report)
}
