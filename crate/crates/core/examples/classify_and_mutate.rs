//! Classifies a matrix and walks a short mutation sequence.

use cluster_unfold::samples::rank4_acyclic;
use cluster_unfold::{ExchangeMatrix, MutationSequence};

fn main() -> cluster_unfold::Result<()> {
    let b = rank4_acyclic();
    let report = b.classify();
    println!("{b}");
    println!("skew-symmetric: {}", report.skew_symmetric);
    println!("symmetrizer: {:?}", report.symmetrizer);
    println!("sign-skew-symmetric: {}", report.sign_skew_symmetric);
    println!("acyclic: {}", report.acyclic);

    let seq: MutationSequence = "2,4,1".parse()?;
    let mut cur = b.clone();
    for k in seq.iter() {
        cur = cur.mutate(k)?;
        println!("after mutating at {k}:\n{cur}");
    }
    // mutation is an involution
    let back: Vec<usize> = seq.iter().collect::<Vec<_>>().into_iter().rev().collect();
    assert_eq!(cur.apply_sequence(&back.into())?, b);

    let total = b.check_total_mutability(6)?;
    println!("totally mutable up to depth 6: {} ({} matrices)", total.ok, total.visited);

    let skew = ExchangeMatrix::parse("3\n0 2 -1\n-1 0 1\n1 -1 0\n")?;
    let r = skew.check_total_mutability(3)?;
    println!("sign-skew-symmetric after every sequence of length <= 3: {} {:?}", r.ok, r.counterexample);
    Ok(())
}
