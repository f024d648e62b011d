//! The source sequence of an acyclic matrix, cross-checked by exhaustive search.

use cluster_unfold::samples::rank4_acyclic;
use cluster_unfold::{brute_force_green_search, source_mgs, FramedSeed};

fn main() -> cluster_unfold::Result<()> {
    let b = rank4_acyclic();
    let report = source_mgs(&b)?;
    println!("source sequence: {}", report.sequence);
    for (t, c) in report.step_c_matrices.iter().enumerate() {
        println!("C after {t} steps:\n{c}");
    }

    let all = brute_force_green_search(&FramedSeed::extend(&b)?, 6)?;
    println!("maximal green sequences of length <= 6: {}", all.len());
    for r in &all {
        println!("  {}", r.sequence);
    }
    assert!(all.iter().any(|r| r.sequence == report.sequence));
    Ok(())
}
