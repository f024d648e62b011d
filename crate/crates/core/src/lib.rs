//! Exact-integer seed mutation for sign-skew-symmetric exchange matrices.
//!
//! The crate covers four layers:
//!
//! - [`ExchangeMatrix`]: classification (skew-symmetric, symmetrizable,
//!   sign-skew-symmetric, acyclic), mutation, and an exhaustive check that
//!   mutation keeps a matrix sign-skew-symmetric.
//! - [`FramedSeed`]: the pair `(B, C)`, c-vector mutation, green/red
//!   columns, sign-coherence checks and maximal green sequences built from a
//!   source ordering ([`green`]).
//! - [`unfolding`]: finite truncations of the unfolding quiver of an acyclic
//!   matrix, orbit-mutation, folding, and a check that folding commutes with
//!   mutation.
//! - [`cli`]: the `cluster-unfold` command line.
//!
//! All arithmetic is checked `i64`; overflow is an [`Error::Overflow`], never
//! a wrapped value. Mutation directions are 1-based in every public API.
//!
//! ```
//! use cluster_unfold::{ExchangeMatrix, FramedSeed};
//!
//! let b = ExchangeMatrix::from_rows(&[[0, -1], [1, 0]]).unwrap();
//! let seed = FramedSeed::extend(&b).unwrap().mutate(1).unwrap();
//! assert_eq!(seed.b().matrix().to_rows(), vec![vec![0, 1], vec![-1, 0]]);
//! assert_eq!(seed.c().to_rows(), vec![vec![-1, 0], vec![0, 1]]);
//! ```

pub mod cli;
pub mod error;
pub mod exchange;
pub mod framed;
pub mod green;
pub mod matrix;
pub mod samples;
mod search;
pub mod sequence;
pub mod unfolding;

pub use error::{Error, Result};
pub use exchange::{ClassificationReport, ExchangeMatrix};
pub use framed::{ColumnSign, FramedSeed};
pub use green::{
    admissible_source_numbering, brute_force_green_search, is_source, source_mgs,
    verify_green_sequence, GreenSequenceReport,
};
pub use matrix::IntMatrix;
pub use search::SearchReport;
pub use sequence::MutationSequence;
pub use unfolding::{build_piece, build_truncation, LabeledQuiver, OrbitIndex};
