use serde::Serialize;

use super::build_truncation;
use crate::error::{Error, Result};
use crate::exchange::ExchangeMatrix;
use crate::framed::FramedSeed;
use crate::sequence::MutationSequence;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DivergenceKind {
    /// The folded quiver differs from the framed seed, or some label has no
    /// interior representative left.
    FoldingMismatch,
    GammaViolation,
    OrbitSignDisagreement,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Divergence {
    /// Number of mutations applied when the mismatch was seen.
    pub step: usize,
    pub kind: DivergenceKind,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CommutationReport {
    pub ok: bool,
    pub first_divergence: Option<Divergence>,
    /// Prefixes compared, the empty one included.
    pub steps_checked: usize,
}

/// Replays `s` as orbit-mutations on the framed depth-`m` truncation and as
/// ordinary mutations on `extend(b)`, comparing after every prefix.
///
/// Each prefix must fold back to the seed exactly, pass the loop and
/// 2-cycle checks, and show one column sign per orbit. Requires
/// `m >= 2 * s.len() + 2` so the interior outlasts the sequence.
pub fn verify_unfolding_commutation(
    b: &ExchangeMatrix,
    s: &MutationSequence,
    m: usize,
) -> Result<CommutationReport> {
    let needed = 2 * s.len() + 2;
    if m < needed {
        return Err(Error::InteriorBudget {
            m,
            needed,
            len: s.len(),
        });
    }
    s.validate(b.n())?;
    let mut seed = FramedSeed::extend(b)?;
    let mut quiver = build_truncation(b, m, true)?;
    let mut steps_checked = 0;
    let directions = s.directions();
    for step in 0..=directions.len() {
        if step > 0 {
            let k = directions[step - 1];
            seed = seed.mutate(k)?;
            quiver = match quiver.orbit_mutate(super::OrbitIndex(k)) {
                Ok(q) => q,
                Err(Error::GammaViolation { detail, .. }) => {
                    return Ok(diverged(step, DivergenceKind::GammaViolation, detail, steps_checked))
                }
                Err(e) => return Err(e),
            };
        }
        steps_checked += 1;
        match quiver.fold(None) {
            Ok(f) if f.clone().into_seed().as_ref() == Some(&seed) => {}
            Ok(f) => {
                let detail = format!("folded b = {:?}, c = {:?}", f.b, f.c);
                return Ok(diverged(step, DivergenceKind::FoldingMismatch, detail, steps_checked));
            }
            Err(e) => {
                return Ok(diverged(step, DivergenceKind::FoldingMismatch, e.to_string(), steps_checked))
            }
        }
        let gamma = quiver.check_gamma_conditions();
        if !gamma.ok() {
            let detail = format!("{:?}", gamma.witnesses.first());
            return Ok(diverged(step, DivergenceKind::GammaViolation, detail, steps_checked));
        }
        if !quiver.orbit_signs_agree() {
            let detail = format!("{:?}", quiver.orbit_column_signs());
            return Ok(diverged(step, DivergenceKind::OrbitSignDisagreement, detail, steps_checked));
        }
    }
    Ok(CommutationReport {
        ok: true,
        first_divergence: None,
        steps_checked,
    })
}

fn diverged(step: usize, kind: DivergenceKind, detail: String, steps_checked: usize) -> CommutationReport {
    CommutationReport {
        ok: false,
        first_divergence: Some(Divergence { step, kind, detail }),
        steps_checked,
    }
}
