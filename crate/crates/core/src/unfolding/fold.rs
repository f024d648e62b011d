use std::collections::BTreeMap;

use super::LabeledQuiver;
use crate::error::{Error, Result};
use crate::exchange::{checked_add, ExchangeMatrix};
use crate::framed::FramedSeed;
use crate::matrix::IntMatrix;

/// Orbit-summed adjacency of a labeled quiver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Folding {
    pub b: ExchangeMatrix,
    /// Present when the quiver is framed.
    pub c: Option<IntMatrix>,
}

impl Folding {
    /// The folded framed seed; `None` for unframed quivers.
    pub fn into_seed(self) -> Option<FramedSeed> {
        let c = self.c?;
        FramedSeed::new(self.b, c).ok()
    }
}

impl LabeledQuiver {
    /// Column of the folded matrices at representative `rep`:
    /// `b[i] = Σ b(x, rep)` over mutable `x` labeled `i + 1`, and `c[i]` the
    /// same sum over frozen vertices.
    pub fn fold_column(&self, rep: usize) -> Result<(Vec<i64>, Vec<i64>)> {
        let v = self.vertex(rep)?;
        if !v.is_mutable() || !self.is_interior(rep) {
            return Err(Error::NotInterior {
                vertex: rep,
                label: v.label,
            });
        }
        let mut b = vec![0i64; self.rank];
        let mut c = vec![0i64; self.rank];
        for &x in self.adj[rep].keys() {
            let u = &self.vertices[x];
            let slot = if u.is_mutable() { &mut b } else { &mut c };
            slot[u.label - 1] = checked_add(slot[u.label - 1], self.entry(x, rep))?;
        }
        Ok((b, c))
    }

    /// Default representative of each label: the interior vertex of least
    /// depth, ties broken by id.
    pub fn default_representatives(&self) -> BTreeMap<usize, usize> {
        let mut reps: BTreeMap<usize, usize> = BTreeMap::new();
        for v in self.interior_vertices() {
            reps.entry(v.label)
                .and_modify(|r| {
                    if v.depth < self.vertices[*r].depth {
                        *r = v.id;
                    }
                })
                .or_insert(v.id);
        }
        reps
    }

    /// Folds the quiver at the given representatives (label → vertex id),
    /// or at [`default_representatives`](Self::default_representatives).
    pub fn fold(&self, representatives: Option<&BTreeMap<usize, usize>>) -> Result<Folding> {
        let defaults;
        let reps = match representatives {
            Some(r) => r,
            None => {
                defaults = self.default_representatives();
                &defaults
            }
        };
        let n = self.rank;
        let mut b = IntMatrix::zeros(n, n);
        let mut c = IntMatrix::zeros(n, n);
        for label in 1..=n {
            let &rep = reps.get(&label).ok_or(Error::MissingLabel(label))?;
            let v = self.vertex(rep)?;
            if v.label != label {
                return Err(Error::NotInterior {
                    vertex: rep,
                    label,
                });
            }
            let (bcol, ccol) = self.fold_column(rep)?;
            for i in 0..n {
                b.set(i, label - 1, bcol[i]);
                c.set(i, label - 1, ccol[i]);
            }
        }
        Ok(Folding {
            b: ExchangeMatrix::new(b)?,
            c: self.framed.then_some(c),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples::{a3_linear, rank1, rank4_acyclic};
    use crate::unfolding::{build_piece, build_truncation, Vertex, VertexKind};

    #[test]
    fn truncation_folds_back() {
        for b in [rank4_acyclic(), a3_linear(), rank1()] {
            for m in 3..=5 {
                let q = build_truncation(&b, m, true).unwrap();
                let seed = q.fold(None).unwrap().into_seed().unwrap();
                assert_eq!(seed, FramedSeed::extend(&b).unwrap(), "m = {m}");
                let plain = build_truncation(&b, m, false).unwrap().fold(None).unwrap();
                assert_eq!(plain.b, b);
                assert_eq!(plain.c, None);
            }
        }
    }

    #[test]
    fn unexpanded_labels_have_no_representative() {
        // label 3 first appears two rings out, so two rounds never expand it
        let q = build_truncation(&rank4_acyclic(), 2, true).unwrap();
        assert_eq!(q.fold(None), Err(Error::MissingLabel(3)));
    }

    #[test]
    fn piece_column_at_centre() {
        let p = rank4_acyclic();
        for i in 1..=4 {
            let q = build_piece(&p, i, true).unwrap();
            let (b, c) = q.fold_column(0).unwrap();
            assert_eq!(b, p.matrix().column(i - 1));
            let mut e = vec![0; 4];
            e[i - 1] = 1;
            assert_eq!(c, e);
            assert!(matches!(q.fold_column(2), Err(Error::NotInterior { .. })));
        }
    }

    #[test]
    fn single_framed_vertex() {
        let q = LabeledQuiver::from_parts(
            1,
            vec![
                Vertex { id: 0, label: 1, kind: VertexKind::Mutable, depth: 0 },
                Vertex { id: 1, label: 1, kind: VertexKind::Frozen, depth: 0 },
            ],
            &BTreeMap::from([((0, 1), 1)]),
        )
        .unwrap();
        let seed = q.fold(None).unwrap().into_seed().unwrap();
        assert_eq!(seed.b().matrix().to_rows(), vec![vec![0]]);
        assert_eq!(seed.c().to_rows(), vec![vec![1]]);
    }

    #[test]
    fn explicit_representatives_are_checked() {
        let q = build_truncation(&rank4_acyclic(), 3, true).unwrap();
        let mut reps = q.default_representatives();
        assert_eq!(reps.get(&1), Some(&0));
        reps.remove(&4);
        assert_eq!(q.fold(Some(&reps)), Err(Error::MissingLabel(4)));
        let mut reps = q.default_representatives();
        reps.insert(4, 0);
        assert!(matches!(q.fold(Some(&reps)), Err(Error::NotInterior { .. })));
        let leaf = q.vertices().iter().rev().find(|v| v.is_mutable()).unwrap();
        let mut reps = q.default_representatives();
        reps.insert(leaf.label, leaf.id);
        assert!(matches!(q.fold(Some(&reps)), Err(Error::NotInterior { .. })));
    }
}
