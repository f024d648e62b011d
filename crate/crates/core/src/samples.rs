//! Small named matrices used across tests, examples and documentation.

use crate::exchange::ExchangeMatrix;

/// The acyclic sign-skew-symmetric 4x4 matrix
///
/// ```text
///  0 -1  0 -1
///  3  0 -1  0
///  0  5  0 -2
///  1  0  3  0
/// ```
///
/// It is not skew-symmetrizable and its unique source ordering is `1,2,3,4`.
pub fn rank4_acyclic() -> ExchangeMatrix {
    ExchangeMatrix::from_rows(&[[0, -1, 0, -1], [3, 0, -1, 0], [0, 5, 0, -2], [1, 0, 3, 0]])
        .expect("square")
}

/// `[[0, 1], [-1, 0]]`, the rank-2 skew-symmetric matrix with `Δ(B) = 2 → 1`.
pub fn rank2_skew() -> ExchangeMatrix {
    ExchangeMatrix::from_rows(&[[0, 1], [-1, 0]]).expect("square")
}

/// The linear `A_3` orientation `1 → 2 → 3`.
pub fn a3_linear() -> ExchangeMatrix {
    ExchangeMatrix::from_rows(&[[0, -1, 0], [1, 0, -1], [0, 1, 0]]).expect("square")
}

/// The oriented 3-cycle `1 → 2 → 3 → 1`.
pub fn cyclic3() -> ExchangeMatrix {
    ExchangeMatrix::from_rows(&[[0, -1, 1], [1, 0, -1], [-1, 1, 0]]).expect("square")
}

/// The 1x1 zero matrix.
pub fn rank1() -> ExchangeMatrix {
    ExchangeMatrix::from_rows(&[[0]]).expect("square")
}
