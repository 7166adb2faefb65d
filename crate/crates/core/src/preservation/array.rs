use crate::error::{Error, Result};
use crate::fragments::array_lookup_via;
use crate::semantics::{ArrayLifts, ArrayStep};
use crate::typing::ArrayTyping;

use super::PreservationHooks;

/// `preservation-Array`.
pub fn preservation_array<S, W: Clone>(
    hooks: &impl PreservationHooks<S, W>,
    lifts: ArrayLifts<'_>,
    step: &ArrayStep<S>,
    typing: &ArrayTyping<W>,
) -> Result<W> {
    let source = step.source(lifts)?;
    let (subject, _) = typing.subject(lifts.array);
    if source != subject {
        return Err(Error::SubjectMismatch(
            "array step and array typing speak about different terms".into(),
        ));
    }
    let ArrayTyping::OkLookup {
        array,
        index,
        array_term,
        ..
    } = typing
    else {
        // only ok-lookup types an index node
        return Err(Error::SubjectMismatch(
            "array step paired with a non-lookup typing".into(),
        ));
    };
    match step {
        ArrayStep::Index {
            inner, index_to, ..
        } => Ok(hooks.lift_array_wt(ArrayTyping::OkLookup {
            array: array.clone(),
            index: Box::new(hooks.induction(inner, index)?),
            array_term: array_term.clone(),
            index_term: index_to.clone(),
        })),
        ArrayStep::Lookup { array, n } => {
            Ok(hooks.wt_option(array_lookup_via(lifts.array, lifts.nat, array, *n)?))
        }
    }
}
