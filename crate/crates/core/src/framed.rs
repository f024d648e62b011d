//! Framed seeds `(B, C)` and c-vector mutation.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exchange::{checked_add, mutation_term, ExchangeMatrix};
use crate::matrix::IntMatrix;
use crate::search::{self, SearchReport};
use crate::sequence::MutationSequence;

/// Sign pattern of one c-vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ColumnSign {
    /// All entries `>= 0`, at least one positive.
    Green,
    /// All entries `<= 0`, at least one negative.
    Red,
    /// Entries of both strict signs.
    Mixed,
    Zero,
}

impl ColumnSign {
    pub fn of(entries: impl IntoIterator<Item = i64>) -> Self {
        let (mut pos, mut neg) = (false, false);
        for x in entries {
            pos |= x > 0;
            neg |= x < 0;
        }
        match (pos, neg) {
            (true, false) => ColumnSign::Green,
            (false, true) => ColumnSign::Red,
            (true, true) => ColumnSign::Mixed,
            (false, false) => ColumnSign::Zero,
        }
    }

    /// Sign-coherent columns are everything except `Mixed`.
    pub fn is_coherent(self) -> bool {
        self != ColumnSign::Mixed
    }
}

impl fmt::Display for ColumnSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ColumnSign::Green => "green",
            ColumnSign::Red => "red",
            ColumnSign::Mixed => "mixed",
            ColumnSign::Zero => "zero",
        })
    }
}

/// An exchange matrix together with its C-matrix, whose columns are the c-vectors.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "SeedDocument", into = "SeedDocument")]
pub struct FramedSeed {
    b: ExchangeMatrix,
    c: IntMatrix,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SeedDocument {
    b: Vec<Vec<i64>>,
    c: Vec<Vec<i64>>,
}

impl TryFrom<SeedDocument> for FramedSeed {
    type Error = Error;

    fn try_from(doc: SeedDocument) -> Result<Self> {
        let b = ExchangeMatrix::from_rows(&doc.b)?;
        let c = IntMatrix::from_rows(&doc.c)?;
        FramedSeed::new(b, c)
    }
}

impl From<FramedSeed> for SeedDocument {
    fn from(s: FramedSeed) -> Self {
        SeedDocument {
            b: s.b.matrix().to_rows(),
            c: s.c.to_rows(),
        }
    }
}

impl FramedSeed {
    pub fn new(b: ExchangeMatrix, c: IntMatrix) -> Result<Self> {
        if c.nrows() != b.n() || c.ncols() != b.n() {
            return Err(Error::Dimension(format!(
                "C-matrix is {}x{} but B is {}x{}",
                c.nrows(),
                c.ncols(),
                b.n(),
                b.n()
            )));
        }
        Ok(Self { b, c })
    }

    /// The extended seed `(B, I_n)`. Rejects matrices that are not sign-skew-symmetric.
    pub fn extend(b: &ExchangeMatrix) -> Result<Self> {
        b.require_sign_skew_symmetric()?;
        Ok(Self {
            b: b.clone(),
            c: IntMatrix::identity(b.n()),
        })
    }

    pub fn n(&self) -> usize {
        self.b.n()
    }

    pub fn b(&self) -> &ExchangeMatrix {
        &self.b
    }

    pub fn c(&self) -> &IntMatrix {
        &self.c
    }

    /// The `2n x n` stacked matrix with `B` above `C`.
    pub fn stacked(&self) -> IntMatrix {
        let n = self.n();
        let mut out = IntMatrix::zeros(2 * n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, self.b.get(i, j));
                out.set(n + i, j, self.c.get(i, j));
            }
        }
        out
    }

    /// Mutation in 1-based direction `k`: `B` by the matrix mutation rule,
    /// `C` by the c-vector rule that negates column `k`.
    pub fn mutate(&self, k: usize) -> Result<Self> {
        let b = self.b.mutate(k)?;
        let k = k - 1;
        let n = self.n();
        let mut c = IntMatrix::zeros(n, n);
        for i in 0..n {
            let cik = self.c.get(i, k);
            for j in 0..n {
                let value = if j == k {
                    -self.c.get(i, j)
                } else {
                    checked_add(self.c.get(i, j), mutation_term(cik, self.b.get(k, j))?)?
                };
                c.set(i, j, value);
            }
        }
        Ok(Self { b, c })
    }

    pub fn apply_sequence(&self, seq: &MutationSequence) -> Result<Self> {
        seq.validate(self.n())?;
        seq.iter().try_fold(self.clone(), |s, k| s.mutate(k))
    }

    /// Sign of the c-vector in 1-based column `j`.
    pub fn column_sign(&self, j: usize) -> Result<ColumnSign> {
        let j = self.b.check_direction(j)?;
        Ok(ColumnSign::of(self.c.column(j)))
    }

    pub fn column_signs(&self) -> Vec<ColumnSign> {
        (0..self.n()).map(|j| ColumnSign::of(self.c.column(j))).collect()
    }

    /// 1-based indices whose c-vector is green.
    pub fn green_indices(&self) -> Vec<usize> {
        self.column_signs()
            .iter()
            .enumerate()
            .filter(|(_, s)| **s == ColumnSign::Green)
            .map(|(j, _)| j + 1)
            .collect()
    }

    pub fn is_sign_coherent(&self) -> bool {
        self.column_signs().into_iter().all(ColumnSign::is_coherent)
    }

    /// Mutates along every sequence of length `<= depth` (no immediate
    /// repeats) and reports the shortest one producing a mixed c-vector.
    pub fn check_sign_coherence(&self, depth: usize) -> Result<SearchReport> {
        search::exhaustive(
            self.clone(),
            self.n(),
            depth,
            |s, k| s.mutate(k),
            |s| !s.is_sign_coherent(),
        )
    }

    /// Serializes as a JSON object with keys `b` and `c`, one matrix per line.
    pub fn to_document(&self) -> String {
        fn rows(m: &IntMatrix) -> String {
            let rows: Vec<String> = (0..m.nrows())
                .map(|i| {
                    let cells: Vec<String> = m.row(i).iter().map(i64::to_string).collect();
                    format!("[{}]", cells.join(", "))
                })
                .collect();
            format!("[{}]", rows.join(", "))
        }
        format!(
            "{{\n  \"b\": {},\n  \"c\": {}\n}}\n",
            rows(self.b.matrix()),
            rows(&self.c)
        )
    }

    pub fn from_document(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::SeedDocument(e.to_string()))
    }
}

impl fmt::Display for FramedSeed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B =\n{}C =\n{}", self.b, self.c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples::{rank1, rank2_skew, rank4_acyclic};

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn extend_examples() {
        let s = FramedSeed::extend(&rank2_skew()).unwrap();
        assert_eq!(s.c(), &IntMatrix::identity(2));
        assert_eq!(s.b(), &rank2_skew());

        let s = FramedSeed::extend(&rank1()).unwrap();
        assert_eq!(s.c(), &m(&[&[1]]));

        let stacked = FramedSeed::extend(&rank4_acyclic()).unwrap().stacked();
        let expected = m(&[
            &[0, -1, 0, -1],
            &[3, 0, -1, 0],
            &[0, 5, 0, -2],
            &[1, 0, 3, 0],
            &[1, 0, 0, 0],
            &[0, 1, 0, 0],
            &[0, 0, 1, 0],
            &[0, 0, 0, 1],
        ]);
        assert_eq!(stacked, expected);

        let bad = ExchangeMatrix::from_rows(&[[0, 1], [0, 0]]).unwrap();
        assert!(matches!(
            FramedSeed::extend(&bad),
            Err(Error::NotSignSkewSymmetric { i: 1, j: 2, .. })
        ));
    }

    #[test]
    fn mutate_rank_two() {
        let s = FramedSeed::extend(&rank2_skew()).unwrap().mutate(1).unwrap();
        assert_eq!(s.b().matrix(), &m(&[&[0, -1], &[1, 0]]));
        // c'_11 = -1, c'_12 = 0 + (|1|*1 + 1*|1|)/2 = 1, c'_22 = 1
        assert_eq!(s.c(), &m(&[&[-1, 1], &[0, 1]]));
        assert!(matches!(s.mutate(3), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn mutate_rank4_at_one() {
        let s = FramedSeed::extend(&rank4_acyclic()).unwrap().mutate(1).unwrap();
        // row 1 of B is non-positive, so only column 1 of C changes
        let expected = m(&[&[-1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
        assert_eq!(s.c(), &expected);
    }

    #[test]
    fn framed_involution() {
        let s = FramedSeed::extend(&rank4_acyclic()).unwrap();
        for k in 1..=4 {
            let t = s.apply_sequence(&[2, 3].into()).unwrap();
            assert_eq!(t.mutate(k).unwrap().mutate(k).unwrap(), t);
        }
    }

    #[test]
    fn column_signs() {
        let s = FramedSeed::extend(&rank4_acyclic()).unwrap();
        for j in 1..=4 {
            assert_eq!(s.column_sign(j).unwrap(), ColumnSign::Green);
            assert_eq!(s.mutate(j).unwrap().column_sign(j).unwrap(), ColumnSign::Red);
        }
        let mixed = FramedSeed::new(rank2_skew(), m(&[&[1, 0], &[-1, 1]])).unwrap();
        assert_eq!(mixed.column_sign(1).unwrap(), ColumnSign::Mixed);
        assert_eq!(ColumnSign::of([0, 0]), ColumnSign::Zero);
        assert!(s.column_sign(5).is_err());
    }

    #[test]
    fn sign_coherence_examples() {
        let r = FramedSeed::extend(&rank4_acyclic())
            .unwrap()
            .check_sign_coherence(4)
            .unwrap();
        assert!(r.ok);
        let r = FramedSeed::extend(&rank2_skew())
            .unwrap()
            .check_sign_coherence(6)
            .unwrap();
        assert!(r.ok);
        assert!(matches!(
            FramedSeed::extend(&rank1()).unwrap().check_sign_coherence(0),
            Err(Error::ZeroBound { .. })
        ));
        let mixed = FramedSeed::new(rank2_skew(), m(&[&[1, 0], &[-1, 1]])).unwrap();
        let r = mixed.check_sign_coherence(1).unwrap();
        assert_eq!(r.counterexample, Some(MutationSequence::empty()));
    }

    #[test]
    fn document_round_trip() {
        let s = FramedSeed::extend(&rank4_acyclic())
            .unwrap()
            .apply_sequence(&[1, 3, 2].into())
            .unwrap();
        let doc = s.to_document();
        let back = FramedSeed::from_document(&doc).unwrap();
        assert_eq!(back, s);
        assert_eq!(back.to_document(), doc);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(FramedSeed::from_document(&json).unwrap(), s);
    }

    #[test]
    fn document_rejects_bad_shapes() {
        assert!(FramedSeed::from_document(r#"{"b": [[0, 1], [-1, 0]], "c": [[1]]}"#).is_err());
        assert!(FramedSeed::from_document(r#"{"b": [[0, 1], [-1, 0]]}"#).is_err());
        assert!(FramedSeed::from_document(r#"{"b": [[0, 1]], "c": [[1, 0]]}"#).is_err());
    }
}
