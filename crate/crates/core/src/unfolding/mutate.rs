use std::collections::{BTreeMap, BTreeSet};

use super::{Defects, LabeledQuiver, OrbitIndex, Part, Radius, VertexKind};
use crate::error::{Error, Result};
use crate::exchange::{checked_add, mutation_term};

impl LabeledQuiver {
    /// Ordinary quiver mutation at one mutable vertex. Entries between two
    /// frozen vertices are never created.
    pub(crate) fn mutate_vertex(&mut self, t: usize) -> Result<()> {
        debug_assert!(self.vertices[t].is_mutable());
        let around: Vec<(usize, i64)> = self.adj[t].iter().map(|(&y, &w)| (y, w)).collect();
        for (a, &(x, tx)) in around.iter().enumerate() {
            for &(y, ty) in &around[a + 1..] {
                if !self.vertices[x].is_mutable() && !self.vertices[y].is_mutable() {
                    continue;
                }
                // b(x, y) += term(b(x, t), b(t, y)), and b(x, t) = -b(t, x)
                let delta = mutation_term(-tx, ty)?;
                if delta == 0 {
                    continue;
                }
                let updated = checked_add(self.entry(x, y), delta)?;
                if updated == 0 {
                    self.adj[x].remove(&y);
                    self.adj[y].remove(&x);
                } else {
                    self.adj[x].insert(y, updated);
                    self.adj[y].insert(x, -updated);
                }
            }
        }
        for (y, w) in around {
            self.adj[t].insert(y, -w);
            self.adj[y].insert(t, w);
        }
        Ok(())
    }

    /// Orbit-mutation at label `k`: the composition of ordinary mutations at
    /// every mutable vertex labeled `k`.
    ///
    /// Refused when the interior radius is below 2 or when the faithful part
    /// of the quiver has an orbit loop or orbit 2-cycle. Consumes 2 units of
    /// radius and shrinks the interior as described in the module docs.
    pub fn orbit_mutate(&self, k: OrbitIndex) -> Result<LabeledQuiver> {
        self.check_label(k.0)?;
        if let Radius::Finite(r) = self.interior_radius {
            if r < 2 {
                return Err(Error::ExhaustedInterior { radius: r });
            }
        }
        let gamma = self.check_gamma_conditions();
        if !gamma.ok() {
            return Err(Error::GammaViolation {
                label: k.0,
                detail: format!("{:?}", gamma.witnesses.first()),
            });
        }

        let mut out = self.clone();
        let orbit: Vec<usize> = self
            .vertices
            .iter()
            .filter(|v| v.is_mutable() && v.label == k.0)
            .map(|v| v.id)
            .collect();
        for &t in &orbit {
            out.mutate_vertex(t)?;
        }

        for v in self.vertices.iter().filter(|v| v.is_mutable()) {
            out.defects[v.id] = self.defects_after(v.id, k.0);
        }
        out.interior_radius = match self.interior_radius {
            Radius::Finite(r) => Radius::Finite(r - 2),
            Radius::Complete => Radius::Complete,
        };
        Ok(out)
    }

    /// Doubts about row `x` after orbit-mutation at `k`, from the doubts
    /// before it.
    fn defects_after(&self, x: usize, k: usize) -> Defects {
        let own = &self.defects[x];
        if self.vertices[x].label == k {
            // the row is negated, so positive and negative parts swap
            let mut out = Defects {
                unknown: own.unknown,
                ..Defects::default()
            };
            out.entries = own.entries.iter().map(|&(kind, l, p)| (kind, l, p.flip())).collect();
            return out;
        }
        if own.touches(VertexKind::Mutable, k) {
            // the set of k-neighbours itself is in doubt
            return Defects::unknown();
        }
        let around: Vec<(usize, i64)> = self.adj[x]
            .iter()
            .filter(|(&t, _)| self.vertices[t].is_mutable() && self.vertices[t].label == k)
            .map(|(&t, &a)| (t, a))
            .collect();
        if around.is_empty() {
            return own.clone();
        }
        // every shift term(a, b(t, y)) has the sign of a (or vanishes)
        let shift_parts: BTreeSet<Part> = around.iter().map(|&(_, a)| Part::read_by(a)).collect();

        // uncertain shifts, by class of the far endpoint
        let mut uncertain: BTreeMap<(VertexKind, usize), BTreeSet<Part>> = BTreeMap::new();
        for &(t, a) in &around {
            let read = Part::read_by(a);
            let theirs = &self.defects[t];
            if theirs.unknown {
                return Defects::unknown();
            }
            for &(kind, l, p) in &theirs.entries {
                if p == read {
                    uncertain.entry((kind, l)).or_default().insert(read);
                }
            }
        }

        // signs of the current entries of x, by class
        let mut present: BTreeMap<(VertexKind, usize), BTreeSet<Part>> = BTreeMap::new();
        for (&y, &w) in &self.adj[x] {
            let u = &self.vertices[y];
            present.entry((u.kind, u.label)).or_default().insert(Part::read_by(w));
        }

        let mut old: BTreeMap<(VertexKind, usize), BTreeSet<Part>> = BTreeMap::new();
        for &(kind, l, p) in &own.entries {
            old.entry((kind, l)).or_default().insert(p);
        }

        let both = [Part::Positive, Part::Negative];
        let mut out = Defects::default();
        for (&(kind, l), parts) in &old {
            // a doubtful entry moved by shifts of one sign p keeps agreeing on
            // the other part only if its doubt was already confined to p
            let keep = parts.len() == 1 && shift_parts.iter().all(|q| parts.contains(q));
            let add: &[Part] = if keep { &[] } else { &both };
            out.entries.extend(add.iter().map(|&p| (kind, l, p)));
            out.entries.extend(parts.iter().map(|&p| (kind, l, p)));
        }
        for (&(kind, l), parts) in &uncertain {
            // an uncertain shift of sign s on an exact base of sign s (or 0)
            // only disturbs part s
            let confined = parts.len() == 1
                && !old.contains_key(&(kind, l))
                && shift_parts.len() == 1
                && present
                    .get(&(kind, l))
                    .is_none_or(|signs| signs.iter().all(|q| parts.contains(q)));
            if confined {
                out.entries.extend(parts.iter().map(|&p| (kind, l, p)));
            } else {
                out.entries.extend(both.iter().map(|&p| (kind, l, p)));
            }
        }
        out
    }

    /// Orbit-mutations applied left to right.
    pub fn orbit_mutate_sequence(&self, labels: impl IntoIterator<Item = usize>) -> Result<LabeledQuiver> {
        labels
            .into_iter()
            .try_fold(self.clone(), |q, k| q.orbit_mutate(OrbitIndex(k)))
    }
}
