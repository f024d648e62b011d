//! Tracks c-vectors of the principal extension and checks sign-coherence.

use cluster_unfold::samples::{a3_linear, rank4_acyclic};
use cluster_unfold::FramedSeed;

fn main() -> cluster_unfold::Result<()> {
    let seed = FramedSeed::extend(&rank4_acyclic())?;
    let moved = seed.apply_sequence(&[1, 3, 2].into())?;
    println!("{moved}");
    println!("column signs: {:?}", moved.column_signs());
    println!("det C = {}", moved.c().determinant()?);

    for (name, b) in [("rank 4", rank4_acyclic()), ("A3", a3_linear())] {
        let r = FramedSeed::extend(&b)?.check_sign_coherence(6)?;
        println!("{name}: sign-coherent up to depth 6: {} ({} seeds)", r.ok, r.visited);
    }
    Ok(())
}
