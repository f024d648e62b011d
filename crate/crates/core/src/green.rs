//! Green sequences, source numberings and maximal green sequences.
//!
//! A direction is green when its c-vector is entrywise non-negative (and
//! nonzero). A sequence is green if every step mutates at a green direction,
//! and maximal if the final seed has no green direction left. Zero columns
//! never count as green.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exchange::ExchangeMatrix;
use crate::framed::{ColumnSign, FramedSeed};
use crate::matrix::IntMatrix;
use crate::sequence::MutationSequence;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GreenSequenceReport {
    pub sequence: MutationSequence,
    /// C-matrix before the first step and after every step.
    pub step_c_matrices: Vec<IntMatrix>,
    pub is_green_sequence: bool,
    pub is_maximal: bool,
}

impl GreenSequenceReport {
    pub fn final_c(&self) -> &IntMatrix {
        self.step_c_matrices
            .last()
            .expect("the initial C-matrix is always recorded")
    }
}

/// Replays `seq` from `seed`, recomputing every colour from scratch.
pub fn verify_green_sequence(
    seed: &FramedSeed,
    seq: &MutationSequence,
) -> Result<GreenSequenceReport> {
    seq.validate(seed.n())?;
    let mut current = seed.clone();
    let mut step_c_matrices = vec![current.c().clone()];
    let mut is_green_sequence = true;
    for k in seq.iter() {
        if current.column_sign(k)? != ColumnSign::Green {
            is_green_sequence = false;
        }
        current = current.mutate(k)?;
        step_c_matrices.push(current.c().clone());
    }
    let no_green_left = current
        .column_signs()
        .iter()
        .all(|s| *s != ColumnSign::Green);
    Ok(GreenSequenceReport {
        sequence: seq.clone(),
        step_c_matrices,
        is_green_sequence,
        is_maximal: is_green_sequence && no_green_left,
    })
}

/// Repeatedly takes the smallest index that is a source (row entries `<= 0`)
/// of the submatrix on the indices not yet chosen.
pub fn admissible_source_numbering(b: &ExchangeMatrix) -> Result<MutationSequence> {
    b.require_sign_skew_symmetric()?;
    let n = b.n();
    let mut remaining: Vec<usize> = (0..n).collect();
    let mut order = MutationSequence::empty();
    while !remaining.is_empty() {
        let pos = remaining
            .iter()
            .position(|&i| remaining.iter().all(|&k| b.get(i, k) <= 0))
            .ok_or_else(|| Error::NoSource {
                remaining: remaining.iter().map(|i| i + 1).collect(),
            })?;
        order.push(remaining.remove(pos) + 1);
    }
    Ok(order)
}

/// Is `i` (1-based) a source of `b`, i.e. is row `i` entrywise non-positive?
pub fn is_source(b: &ExchangeMatrix, i: usize) -> Result<bool> {
    let i = b.check_direction(i)?;
    Ok((0..b.n()).all(|k| b.get(i, k) <= 0))
}

/// Maximal green sequence obtained by mutating along the admissible source
/// numbering of an acyclic `b`. The replay is verified independently; a
/// failed verification is an error.
pub fn source_mgs(b: &ExchangeMatrix) -> Result<GreenSequenceReport> {
    let numbering = admissible_source_numbering(b)?;
    let seed = FramedSeed::extend(b)?;
    let report = verify_green_sequence(&seed, &numbering)?;
    if !report.is_green_sequence {
        return Err(Error::GreenVerification(format!(
            "source numbering {numbering} mutates at a non-green direction"
        )));
    }
    if !report.is_maximal {
        return Err(Error::GreenVerification(format!(
            "green directions remain after {numbering}"
        )));
    }
    Ok(report)
}

/// Every maximal green sequence of length `<= max_len`, in lexicographic
/// order, found by depth-first search over green directions `1..=n`.
///
/// The search tree grows quickly; `n <= 5` with `max_len <= 8` is the
/// intended range.
pub fn brute_force_green_search(
    seed: &FramedSeed,
    max_len: usize,
) -> Result<Vec<GreenSequenceReport>> {
    let mut found = Vec::new();
    let mut path = MutationSequence::empty();
    let mut cs = vec![seed.c().clone()];
    dfs(seed, max_len, &mut path, &mut cs, &mut found)?;
    found.sort_by(|a, b| a.sequence.cmp(&b.sequence));
    Ok(found)
}

fn dfs(
    state: &FramedSeed,
    max_len: usize,
    path: &mut MutationSequence,
    cs: &mut Vec<IntMatrix>,
    found: &mut Vec<GreenSequenceReport>,
) -> Result<()> {
    let greens = state.green_indices();
    if greens.is_empty() {
        if !path.is_empty() {
            found.push(GreenSequenceReport {
                sequence: path.clone(),
                step_c_matrices: cs.clone(),
                is_green_sequence: true,
                is_maximal: true,
            });
        }
        return Ok(());
    }
    if path.len() == max_len {
        return Ok(());
    }
    for k in greens {
        let next = state.mutate(k)?;
        path.push(k);
        cs.push(next.c().clone());
        dfs(&next, max_len, path, cs, found)?;
        cs.pop();
        *path = MutationSequence::new(path.directions()[..path.len() - 1].to_vec());
    }
    Ok(())
}
