//! Builds a framed truncation of the unfolding, prints its summary and
//! writes Graphviz output to stdout.
//!
//! ```text
//! cargo run --example unfolding_truncation | dot -Tsvg > unfolding.svg
//! ```

use cluster_unfold::samples::rank4_acyclic;
use cluster_unfold::{build_piece, build_truncation};

fn main() -> cluster_unfold::Result<()> {
    let b = rank4_acyclic();
    for i in 1..=b.n() {
        let piece = build_piece(&b, i, true)?;
        eprintln!("piece {i}: {} vertices, {} arrows", piece.vertices().len(), piece.arrow_count());
    }

    let q = build_truncation(&b, 3, true)?;
    eprintln!("{q}");
    let folded = q.fold(None)?.into_seed().expect("framed");
    assert_eq!(folded.b(), &b);
    print!("{}", q.to_dot());
    Ok(())
}
