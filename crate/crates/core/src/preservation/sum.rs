use crate::error::{Error, Result};
use crate::semantics::{SumLifts, SumStep};
use crate::typing::SumTyping;

use super::PreservationHooks;

/// `preservation-Sum`: rewrites a sum typing across a sum step, using only
/// the hooks for everything outside the sum fragment.
pub fn preservation_sum<S, W: Clone>(
    hooks: &impl PreservationHooks<S, W>,
    lifts: SumLifts<'_>,
    step: &SumStep<S>,
    typing: &SumTyping<W>,
) -> Result<W> {
    let source = step.source(lifts)?;
    let (subject, _) = typing.subject(lifts.sum);
    if source != subject {
        return Err(Error::SubjectMismatch(
            "sum step and ok-sum speak about different terms".into(),
        ));
    }
    let SumTyping::OkSum {
        left,
        right,
        left_term,
        right_term,
    } = typing;
    match step {
        SumStep::Left { inner, left_to, .. } => Ok(hooks.lift_sum_wt(SumTyping::OkSum {
            left: Box::new(hooks.induction(inner, left)?),
            right: right.clone(),
            left_term: left_to.clone(),
            right_term: right_term.clone(),
        })),
        SumStep::Right {
            inner, right_to, ..
        } => Ok(hooks.lift_sum_wt(SumTyping::OkSum {
            left: left.clone(),
            right: Box::new(hooks.induction(inner, right)?),
            left_term: left_term.clone(),
            right_term: right_to.clone(),
        })),
        SumStep::Value { n, m } => {
            Ok(hooks.wt_nat(n.checked_add(*m).ok_or(Error::Overflow(*n, *m))?))
        }
    }
}
