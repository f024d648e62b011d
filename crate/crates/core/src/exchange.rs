//! Exchange matrices: classification, mutation and total-mutability checks.
//!
//! Mutation directions are 1-based at this boundary; matrix entries are
//! addressed 0-based through [`IntMatrix`].

use std::collections::VecDeque;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{parse_square_matrix, IntMatrix};
use crate::search::{self, SearchReport};
use crate::sequence::MutationSequence;

/// Square integer matrix `B` of exchange data.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "IntMatrix", into = "IntMatrix")]
pub struct ExchangeMatrix(IntMatrix);

/// The four structural flags of an exchange matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub skew_symmetric: bool,
    /// Diagonal of the minimal positive integer symmetrizer `D`, if one exists.
    pub symmetrizer: Option<Vec<u64>>,
    pub sign_skew_symmetric: bool,
    /// Whether `Δ(B)` (edge `i → j` iff `b_ij < 0`) has no directed cycle.
    pub acyclic: bool,
}

/// `(|x| y + x |y|) / 2`, which is `x·y` when both are positive, `-x·y` when
/// both are negative and 0 otherwise.
#[inline]
pub(crate) fn mutation_term(x: i64, y: i64) -> Result<i64> {
    let overflow = Error::Overflow {
        context: "mutating an exchange matrix",
    };
    if x > 0 && y > 0 {
        x.checked_mul(y).ok_or(overflow)
    } else if x < 0 && y < 0 {
        x.checked_mul(y).and_then(i64::checked_neg).ok_or(overflow)
    } else {
        Ok(0)
    }
}

#[inline]
pub(crate) fn checked_add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow {
        context: "mutating an exchange matrix",
    })
}

impl ExchangeMatrix {
    pub fn new(matrix: IntMatrix) -> Result<Self> {
        if !matrix.is_square() || matrix.nrows() == 0 {
            return Err(Error::Dimension(format!(
                "exchange matrix must be square and non-empty, got {}x{}",
                matrix.nrows(),
                matrix.ncols()
            )));
        }
        Ok(Self(matrix))
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        Self::new(IntMatrix::from_rows(rows)?)
    }

    /// Parses the `n`-then-rows text format.
    pub fn parse(text: &str) -> Result<Self> {
        Self::new(parse_square_matrix(text)?)
    }

    pub fn n(&self) -> usize {
        self.0.nrows()
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    /// Entry `b_ij` with 0-based indices.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.0.get(i, j)
    }

    pub fn is_skew_symmetric(&self) -> bool {
        let n = self.n();
        (0..n).all(|i| (0..n).all(|j| self.get(i, j) == -self.get(j, i)))
    }

    /// First 0-based pair breaking sign-skew-symmetry, scanning row-major.
    pub fn sign_skew_violation(&self) -> Option<(usize, usize)> {
        let n = self.n();
        for i in 0..n {
            for j in i..n {
                let (a, b) = (self.get(i, j), self.get(j, i));
                let fine = (a == 0 && b == 0) || (a.signum() * b.signum() < 0);
                if !fine {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_sign_skew_symmetric(&self) -> bool {
        self.sign_skew_violation().is_none()
    }

    pub(crate) fn require_sign_skew_symmetric(&self) -> Result<()> {
        match self.sign_skew_violation() {
            None => Ok(()),
            Some((i, j)) => Err(Error::NotSignSkewSymmetric {
                i: i + 1,
                j: j + 1,
                bij: self.get(i, j),
                bji: self.get(j, i),
            }),
        }
    }

    /// Kahn's algorithm on `Δ(B)`; returns a topological order (0-based) when acyclic.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.n();
        let mut indegree = vec![0usize; n];
        for i in 0..n {
            for j in 0..n {
                if i != j && self.get(i, j) < 0 {
                    indegree[j] += 1;
                }
            }
        }
        let mut ready: VecDeque<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = ready.pop_front() {
            order.push(v);
            for j in 0..n {
                if j != v && self.get(v, j) < 0 {
                    indegree[j] -= 1;
                    if indegree[j] == 0 {
                        ready.push_back(j);
                    }
                }
            }
        }
        // A negative diagonal entry is a loop in Δ(B).
        let has_loop = (0..n).any(|i| self.get(i, i) < 0);
        (order.len() == n && !has_loop).then_some(order)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    pub(crate) fn require_acyclic_sign_skew(&self) -> Result<()> {
        self.require_sign_skew_symmetric()?;
        if !self.is_acyclic() {
            return Err(Error::NotAcyclic);
        }
        Ok(())
    }

    /// Minimal positive integer `D` with `d_i b_ij = -d_j b_ji`, found by
    /// propagating ratios along a spanning forest of the nonzero pattern.
    pub fn symmetrizer(&self) -> Option<Vec<u64>> {
        let n = self.n();
        // d as reduced fractions (num, den), None = not yet reached
        let mut d: Vec<Option<(u128, u128)>> = vec![None; n];
        let mut component = vec![usize::MAX; n];
        let mut roots = Vec::new();
        for root in 0..n {
            if d[root].is_some() {
                continue;
            }
            d[root] = Some((1, 1));
            component[root] = roots.len();
            roots.push(root);
            let mut queue = VecDeque::from([root]);
            while let Some(i) = queue.pop_front() {
                let (num, den) = d[i].expect("queued vertices are assigned");
                for j in 0..n {
                    let (bij, bji) = (self.get(i, j), self.get(j, i));
                    if j == i || (bij == 0 && bji == 0) || d[j].is_some() {
                        continue;
                    }
                    if bij.signum() * bji.signum() >= 0 {
                        return None;
                    }
                    // d_j = d_i * |b_ij| / |b_ji|
                    let n2 = num
                        .checked_mul(bij.unsigned_abs() as u128)
                        .expect("symmetrizer numerator overflow");
                    let d2 = den
                        .checked_mul(bji.unsigned_abs() as u128)
                        .expect("symmetrizer denominator overflow");
                    let g = n2.gcd(&d2);
                    d[j] = Some((n2 / g, d2 / g));
                    component[j] = component[i];
                    queue.push_back(j);
                }
            }
        }

        let mut out = vec![0u64; n];
        for c in 0..roots.len() {
            let members: Vec<usize> = (0..n).filter(|&v| component[v] == c).collect();
            let lcm = members
                .iter()
                .fold(1u128, |acc, &v| acc.lcm(&d[v].expect("assigned").1));
            let scaled: Vec<u128> = members
                .iter()
                .map(|&v| {
                    let (num, den) = d[v].expect("assigned");
                    num.checked_mul(lcm / den).expect("symmetrizer overflow")
                })
                .collect();
            let g = scaled.iter().fold(0u128, |acc, &x| acc.gcd(&x));
            for (&v, &x) in members.iter().zip(&scaled) {
                out[v] = u64::try_from(x / g).expect("symmetrizer entry exceeds u64");
            }
        }

        let consistent = (0..n).all(|i| {
            (0..n).all(|j| {
                let lhs = out[i] as i128 * self.get(i, j) as i128;
                let rhs = -(out[j] as i128) * self.get(j, i) as i128;
                lhs == rhs
            })
        });
        consistent.then_some(out)
    }

    pub fn classify(&self) -> ClassificationReport {
        let skew_symmetric = self.is_skew_symmetric();
        let symmetrizer = if skew_symmetric {
            Some(vec![1; self.n()])
        } else {
            self.symmetrizer()
        };
        ClassificationReport {
            skew_symmetric,
            symmetrizer,
            sign_skew_symmetric: self.is_sign_skew_symmetric(),
            acyclic: self.is_acyclic(),
        }
    }

    pub(crate) fn check_direction(&self, k: usize) -> Result<usize> {
        if k == 0 || k > self.n() {
            return Err(Error::IndexOutOfRange { index: k, n: self.n() });
        }
        Ok(k - 1)
    }

    /// Matrix mutation in 1-based direction `k`.
    pub fn mutate(&self, k: usize) -> Result<Self> {
        let k = self.check_direction(k)?;
        let n = self.n();
        let mut out = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let b = self.get(i, j);
                let value = if i == k || j == k {
                    -b
                } else {
                    checked_add(b, mutation_term(self.get(i, k), self.get(k, j))?)?
                };
                out.set(i, j, value);
            }
        }
        Ok(Self(out))
    }

    /// Left fold of [`mutate`](Self::mutate) over the sequence.
    pub fn apply_sequence(&self, seq: &MutationSequence) -> Result<Self> {
        seq.validate(self.n())?;
        seq.iter().try_fold(self.clone(), |b, k| b.mutate(k))
    }

    /// Mutates along every sequence of length `<= depth` (no immediate
    /// repeats) and reports the shortest one leaving sign-skew-symmetry.
    pub fn check_total_mutability(&self, depth: usize) -> Result<SearchReport> {
        search::exhaustive(
            self.clone(),
            self.n(),
            depth,
            |b, k| b.mutate(k),
            |b| !b.is_sign_skew_symmetric(),
        )
    }
}

impl TryFrom<IntMatrix> for ExchangeMatrix {
    type Error = Error;

    fn try_from(m: IntMatrix) -> Result<Self> {
        Self::new(m)
    }
}

impl From<ExchangeMatrix> for IntMatrix {
    fn from(b: ExchangeMatrix) -> Self {
        b.0
    }
}

impl fmt::Debug for ExchangeMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Display for ExchangeMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples::rank4_acyclic;

    fn b(rows: &[&[i64]]) -> ExchangeMatrix {
        ExchangeMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn classify_rank_two() {
        let r = b(&[&[0, 1], &[-1, 0]]).classify();
        assert_eq!(
            r,
            ClassificationReport {
                skew_symmetric: true,
                symmetrizer: Some(vec![1, 1]),
                sign_skew_symmetric: true,
                acyclic: true,
            }
        );
    }

    #[test]
    fn classify_four_by_four_example() {
        let r = rank4_acyclic().classify();
        assert!(r.sign_skew_symmetric);
        assert!(r.acyclic);
        assert!(!r.skew_symmetric);
        // d_1 = 3 d_2 = 15 d_3 along 1-2-3, but d_1 = (2/3) d_3 along 1-4-3
        assert_eq!(r.symmetrizer, None);
    }

    #[test]
    fn classify_not_sign_skew() {
        let r = b(&[&[0, 1], &[0, 0]]).classify();
        assert!(!r.sign_skew_symmetric);
        assert!(!r.skew_symmetric);
        assert_eq!(r.symmetrizer, None);
    }

    #[test]
    fn symmetrizable_non_skew() {
        // B_2 / C_2 type: d_1 * 1 = -d_2 * (-2) => d = (2, 1)
        let r = b(&[&[0, 1], &[-2, 0]]).classify();
        assert!(!r.skew_symmetric);
        assert_eq!(r.symmetrizer, Some(vec![2, 1]));
        // two components are scaled independently
        let r = b(&[&[0, 2, 0, 0], &[-1, 0, 0, 0], &[0, 0, 0, 3], &[0, 0, -1, 0]]).classify();
        assert_eq!(r.symmetrizer, Some(vec![1, 2, 1, 3]));
    }

    #[test]
    fn cyclic_detection() {
        let cyc = b(&[&[0, -1, 1], &[1, 0, -1], &[-1, 1, 0]]);
        assert!(cyc.is_sign_skew_symmetric());
        assert!(!cyc.is_acyclic());
        assert!(b(&[&[0, -1, 0], &[1, 0, -1], &[0, 1, 0]]).is_acyclic());
    }

    #[test]
    fn mutate_rank_two() {
        let m = b(&[&[0, 1], &[-1, 0]]);
        assert_eq!(m.mutate(1).unwrap(), b(&[&[0, -1], &[1, 0]]));
        assert_eq!(m.mutate(3), Err(Error::IndexOutOfRange { index: 3, n: 2 }));
        assert_eq!(m.mutate(0), Err(Error::IndexOutOfRange { index: 0, n: 2 }));
    }

    #[test]
    fn mutate_four_by_four_at_one() {
        // entrywise: row/column 1 negated; b_ij for i,j != 1 gains
        // term(b_i1, b_1j) which is nonzero only for sign-equal pairs;
        // b_21 = 3 > 0, b_41 = 1 > 0 while b_1j <= 0, so nothing else changes
        let expected = b(&[&[0, 1, 0, 1], &[-3, 0, -1, 0], &[0, 5, 0, -2], &[-1, 0, 3, 0]]);
        assert_eq!(rank4_acyclic().mutate(1).unwrap(), expected);
    }

    #[test]
    fn apply_sequence_conventions() {
        let p = rank4_acyclic();
        assert_eq!(p.apply_sequence(&MutationSequence::empty()).unwrap(), p);
        assert_eq!(p.apply_sequence(&[3, 3].into()).unwrap(), p);
        assert_eq!(
            p.apply_sequence(&[1, 2].into()).unwrap(),
            p.mutate(1).unwrap().mutate(2).unwrap()
        );
        assert_eq!(
            p.apply_sequence(&[1, 5].into()),
            Err(Error::IndexOutOfRange { index: 5, n: 4 })
        );
    }

    #[test]
    fn total_mutability_examples() {
        let r = rank4_acyclic().check_total_mutability(4).unwrap();
        assert!(r.ok, "{r:?}");
        assert_eq!(r.visited, 1 + 4 + 12 + 36 + 108);
        assert!(b(&[&[0, 1], &[-1, 0]]).check_total_mutability(1).unwrap().ok);
        assert_eq!(
            rank4_acyclic().check_total_mutability(0),
            Err(Error::ZeroBound { what: "depth" })
        );
    }

    #[test]
    fn total_mutability_finds_shortest_witness() {
        let cyc = b(&[&[0, -1, 2], &[1, 0, -1], &[-1, 1, 0]]);
        // non sign-skew input is its own witness
        let bad = b(&[&[0, 1], &[0, 0]]).check_total_mutability(3).unwrap();
        assert_eq!(bad.counterexample, Some(MutationSequence::empty()));
        let r = cyc.check_total_mutability(3).unwrap();
        if let Some(w) = &r.counterexample {
            assert!(!cyc.apply_sequence(w).unwrap().is_sign_skew_symmetric());
            for len in 0..w.len() {
                for s in MutationSequence::all_without_repeats(3, len) {
                    assert!(cyc.apply_sequence(&s).unwrap().is_sign_skew_symmetric());
                }
            }
        }
    }

    #[test]
    fn overflow_is_reported() {
        let m = i64::MAX / 2;
        let big = b(&[&[0, m, 0], &[-m, 0, m], &[0, -m, 0]]);
        assert!(matches!(big.mutate(2), Err(Error::Overflow { .. })));
    }
}
