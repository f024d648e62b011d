//! Orbit-mutation of the unfolding against ordinary mutation of the seed.

use cluster_unfold::samples::rank4_acyclic;
use cluster_unfold::unfolding::verify_unfolding_commutation;
use cluster_unfold::{build_truncation, FramedSeed, MutationSequence};

fn main() -> cluster_unfold::Result<()> {
    let b = rank4_acyclic();
    let seq: MutationSequence = "3,1,4".parse()?;
    let m = 2 * seq.len() + 2;

    let q = build_truncation(&b, m, true)?.orbit_mutate_sequence(seq.iter())?;
    let folded = q.fold(None)?.into_seed().expect("framed");
    let direct = FramedSeed::extend(&b)?.apply_sequence(&seq)?;
    println!("folded:\n{folded}");
    assert_eq!(folded, direct);
    println!("interior vertices left: {}", q.interior_vertices().count());

    let report = verify_unfolding_commutation(&b, &seq, m)?;
    println!("commutes: {} ({} prefixes)", report.ok, report.steps_checked);

    // too small a truncation is refused up front
    println!("m = {}: {:?}", m - 1, verify_unfolding_commutation(&b, &seq, m - 1).err());
    Ok(())
}
