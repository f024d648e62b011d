//! Breadth-first enumeration of mutation sequences.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::sequence::MutationSequence;

/// Outcome of an exhaustive property check over mutation sequences.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub ok: bool,
    /// Shortest (then lexicographically smallest) sequence reaching a violation.
    pub counterexample: Option<MutationSequence>,
    /// Number of states examined, the root included.
    pub visited: usize,
}

/// Visits every sequence over `1..=n` of length `<= depth`, skipping immediate
/// repeats `k,k`, level by level. Stops at the first level containing a
/// violation and reports the lexicographically smallest witness there.
pub(crate) fn exhaustive<S>(
    root: S,
    n: usize,
    depth: usize,
    mut step: impl FnMut(&S, usize) -> Result<S>,
    mut violates: impl FnMut(&S) -> bool,
) -> Result<SearchReport> {
    if depth == 0 {
        return Err(Error::ZeroBound { what: "depth" });
    }
    let mut visited = 1;
    if violates(&root) {
        return Ok(SearchReport {
            ok: false,
            counterexample: Some(MutationSequence::empty()),
            visited,
        });
    }
    let mut level = vec![(MutationSequence::empty(), root)];
    for _ in 0..depth {
        let mut next = Vec::with_capacity(level.len() * n.saturating_sub(1).max(1));
        for (seq, state) in &level {
            for k in 1..=n {
                if seq.last() == Some(k) {
                    continue;
                }
                let child = step(state, k)?;
                visited += 1;
                let mut child_seq = seq.clone();
                child_seq.push(k);
                if violates(&child) {
                    return Ok(SearchReport {
                        ok: false,
                        counterexample: Some(child_seq),
                        visited,
                    });
                }
                next.push((child_seq, child));
            }
        }
        level = next;
    }
    Ok(SearchReport {
        ok: true,
        counterexample: None,
        visited,
    })
}
