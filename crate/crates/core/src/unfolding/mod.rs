//! Finite truncations of the unfolding quiver of an acyclic
//! sign-skew-symmetric matrix.
//!
//! The unfolding is an infinite, locally finite tree-shaped quiver whose
//! vertices carry labels `1..=n`. Vertices sharing a label form one orbit of
//! the label-preserving automorphism group, which is never materialized.
//! Summing arrows over orbits ("folding") recovers `B`, and mutating every
//! vertex of an orbit at once ("orbit-mutation") commutes with folding.
//!
//! A [`LabeledQuiver`] stores a finite piece of that tree. Arrow data follow
//! one convention throughout: the adjacency entry `b(x, y)` is the number of
//! arrows `y → x` minus the number of arrows `x → y`. For a frozen vertex `f`
//! and a mutable vertex `a`, `b(f, a)` is the C-matrix entry `c(f, a)`.
//!
//! Only part of a truncation is faithful to the infinite quiver. Every
//! mutable vertex records which entries of its row may be wrong, by the
//! kind and label of the other endpoint and by whether the positive or the
//! negative part of the entry may be off. A vertex is *interior* when nothing
//! may be wrong. Right after construction the unexpanded outer ring lacks
//! exactly known neighbours and everything else is interior. Orbit-mutation
//! at `k` changes `b(x, y)` by `term(b(x, t), b(t, y))` for `k`-labeled
//! neighbours `t`, which only reads the positive part of `b(t, y)` when
//! `b(x, t) > 0` and the negative part when `b(x, t) < 0`; doubts travel
//! along exactly those reads. Folding and every orbit-level query only look
//! at interior vertices.
//!
//! Alongside the per-vertex bookkeeping, [`LabeledQuiver::interior_radius`]
//! keeps the coarse budget: a depth-`m` truncation starts at radius `m - 1`
//! and each orbit-mutation consumes 2.

mod build;
mod dot;
mod fold;
mod mutate;
mod verify;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::framed::ColumnSign;

pub use build::{build_piece, build_truncation};
pub use fold::Folding;
pub use verify::{verify_unfolding_commutation, CommutationReport, Divergence, DivergenceKind};

/// A 1-based orbit label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct OrbitIndex(pub usize);

impl fmt::Display for OrbitIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\u{304}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum VertexKind {
    Mutable,
    Frozen,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Vertex {
    pub id: usize,
    pub label: usize,
    pub kind: VertexKind,
    /// Gluing round that introduced the vertex; frozen vertices share their partner's.
    pub depth: usize,
}

impl Vertex {
    pub fn is_mutable(&self) -> bool {
        self.kind == VertexKind::Mutable
    }
}

/// Depth up to which a truncation is trusted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Radius {
    Finite(usize),
    /// The construction closed up into a finite quiver; nothing is truncated.
    Complete,
}

impl fmt::Display for Radius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Radius::Finite(r) => write!(f, "{r}"),
            Radius::Complete => f.write_str("complete"),
        }
    }
}

/// An offending configuration found by [`LabeledQuiver::check_gamma_conditions`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum GammaWitness {
    /// Arrow `from → to` inside one orbit.
    Loop { from: usize, to: usize },
    /// Path `from → via → to` leaving an orbit and returning to it.
    TwoCycle { from: usize, via: usize, to: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GammaReport {
    pub loop_free: bool,
    pub two_cycle_free: bool,
    pub witnesses: Vec<GammaWitness>,
}

impl GammaReport {
    pub fn ok(&self) -> bool {
        self.loop_free && self.two_cycle_free
    }
}

/// Which sign part of an adjacency entry may be wrong.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) enum Part {
    Positive,
    Negative,
}

impl Part {
    pub(crate) fn flip(self) -> Part {
        match self {
            Part::Positive => Part::Negative,
            Part::Negative => Part::Positive,
        }
    }

    /// The part of `b(t, y)` read by `term(a, b(t, y))`.
    pub(crate) fn read_by(a: i64) -> Part {
        if a > 0 {
            Part::Positive
        } else {
            Part::Negative
        }
    }
}

/// Entries of one row that may disagree with the infinite quiver.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct Defects {
    /// Anything may be wrong.
    pub(crate) unknown: bool,
    /// `(kind, label, part)` of the other endpoint of a doubtful entry.
    pub(crate) entries: BTreeSet<(VertexKind, usize, Part)>,
}

impl Defects {
    pub(crate) fn unknown() -> Self {
        Defects {
            unknown: true,
            entries: BTreeSet::new(),
        }
    }

    pub(crate) fn is_clean(&self) -> bool {
        !self.unknown && self.entries.is_empty()
    }

    pub(crate) fn touches(&self, kind: VertexKind, label: usize) -> bool {
        self.unknown
            || self
                .entries
                .range((kind, label, Part::Positive)..=(kind, label, Part::Negative))
                .next()
                .is_some()
    }
}

/// A finite labeled quiver with mutable and frozen vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledQuiver {
    rank: usize,
    framed: bool,
    vertices: Vec<Vertex>,
    /// `adj[x][y] = b(x, y)`; antisymmetric, zero entries are not stored.
    adj: Vec<BTreeMap<usize, i64>>,
    /// Per-vertex doubts; always clean for frozen vertices, whose rows are
    /// read off the mutable rows by antisymmetry.
    defects: Vec<Defects>,
    interior_radius: Radius,
}

impl LabeledQuiver {
    /// Assembles a complete finite quiver from explicit data.
    ///
    /// Vertex ids must be `0..len` in order. `arrows` maps `(from, to)` to a
    /// positive multiplicity. Every mutable vertex is treated as interior.
    pub fn from_parts(
        rank: usize,
        vertices: Vec<Vertex>,
        arrows: &BTreeMap<(usize, usize), u64>,
    ) -> Result<Self> {
        for (idx, v) in vertices.iter().enumerate() {
            if v.id != idx {
                return Err(Error::UnknownVertex(v.id));
            }
            if v.label == 0 || v.label > rank {
                return Err(Error::IndexOutOfRange {
                    index: v.label,
                    n: rank,
                });
            }
        }
        let mut adj = vec![BTreeMap::new(); vertices.len()];
        for (&(from, to), &mult) in arrows {
            if from >= vertices.len() {
                return Err(Error::UnknownVertex(from));
            }
            if to >= vertices.len() {
                return Err(Error::UnknownVertex(to));
            }
            if from == to || mult == 0 {
                return Err(Error::Dimension(format!(
                    "arrow {from} -> {to} with multiplicity {mult} is not allowed"
                )));
            }
            if !vertices[from].is_mutable() && !vertices[to].is_mutable() {
                return Err(Error::Dimension(format!(
                    "arrow {from} -> {to} joins two frozen vertices"
                )));
            }
            let mult = i64::try_from(mult).map_err(|_| Error::Overflow {
                context: "reading arrow multiplicities",
            })?;
            let entry: &mut i64 = adj[to].entry(from).or_insert(0);
            *entry += mult;
            let value = *entry;
            adj[from].insert(to, -value);
        }
        for row in &mut adj {
            row.retain(|_, v| *v != 0);
        }
        let framed = vertices.iter().any(|v| !v.is_mutable());
        let defects = vec![Defects::default(); vertices.len()];
        Ok(Self {
            rank,
            framed,
            vertices,
            adj,
            defects,
            interior_radius: Radius::Complete,
        })
    }

    /// Number of labels (orbits of mutable vertices).
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_framed(&self) -> bool {
        self.framed
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex(&self, id: usize) -> Result<&Vertex> {
        self.vertices.get(id).ok_or(Error::UnknownVertex(id))
    }

    pub fn mutable_count(&self) -> usize {
        self.vertices.iter().filter(|v| v.is_mutable()).count()
    }

    pub fn frozen_count(&self) -> usize {
        self.vertices.len() - self.mutable_count()
    }

    pub fn interior_radius(&self) -> Radius {
        self.interior_radius
    }

    pub fn is_complete(&self) -> bool {
        self.interior_radius == Radius::Complete
    }

    /// Whether every arrow at mutable vertex `id` is faithful.
    pub fn is_interior(&self, id: usize) -> bool {
        self.vertices.get(id).is_some_and(Vertex::is_mutable) && self.defects[id].is_clean()
    }

    pub fn interior_vertices(&self) -> impl Iterator<Item = &Vertex> + '_ {
        self.vertices.iter().filter(|v| self.is_interior(v.id))
    }

    /// Adjacency entry `b(x, y)`: arrows `y → x` minus arrows `x → y`.
    pub fn entry(&self, x: usize, y: usize) -> i64 {
        self.adj
            .get(x)
            .and_then(|row| row.get(&y))
            .copied()
            .unwrap_or(0)
    }

    /// Nonzero adjacency entries of row `x`, keyed by the other endpoint.
    pub fn neighbours(&self, x: usize) -> &BTreeMap<usize, i64> {
        &self.adj[x]
    }

    /// All arrows as `(from, to) → multiplicity`.
    pub fn arrows(&self) -> BTreeMap<(usize, usize), u64> {
        let mut out = BTreeMap::new();
        for (x, row) in self.adj.iter().enumerate() {
            for (&y, &w) in row {
                if w > 0 {
                    out.insert((y, x), w as u64);
                }
            }
        }
        out
    }

    pub fn arrow_count(&self) -> usize {
        self.adj
            .iter()
            .map(|row| row.values().filter(|w| **w > 0).count())
            .sum()
    }

    fn label_of(&self, id: usize) -> usize {
        self.vertices[id].label
    }

    fn check_label(&self, label: usize) -> Result<()> {
        if label == 0 || label > self.rank {
            return Err(Error::IndexOutOfRange {
                index: label,
                n: self.rank,
            });
        }
        Ok(())
    }

    /// Sign of the c-vector of mutable vertex `id` (its arrows to frozen vertices).
    pub fn column_sign(&self, id: usize) -> ColumnSign {
        ColumnSign::of(
            self.adj[id]
                .iter()
                .filter(|(f, _)| !self.vertices[**f].is_mutable())
                .map(|(_, w)| -w),
        )
    }

    /// Looks for orbit loops and orbit 2-cycles among faithful arrows: loops
    /// on arrows with an interior endpoint, 2-cycles through an interior
    /// middle vertex. Only mutable vertices take part.
    pub fn check_gamma_conditions(&self) -> GammaReport {
        let mut witnesses = Vec::new();
        let mut loop_free = true;
        let mut two_cycle_free = true;
        for v in self.vertices.iter().filter(|v| v.is_mutable()) {
            let x = v.id;
            for (&y, &w) in &self.adj[x] {
                // w > 0 means y → x
                if w <= 0 || !self.vertices[y].is_mutable() {
                    continue;
                }
                if (self.is_interior(x) || self.is_interior(y)) && self.label_of(y) == v.label {
                    loop_free = false;
                    witnesses.push(GammaWitness::Loop { from: y, to: x });
                }
            }
            if !self.is_interior(x) {
                continue;
            }
            let mut incoming: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
            let mut outgoing: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
            for (&y, &w) in &self.adj[x] {
                if !self.vertices[y].is_mutable() || self.label_of(y) == v.label {
                    continue;
                }
                let bucket = if w > 0 { &mut incoming } else { &mut outgoing };
                bucket.entry(self.label_of(y)).or_default().push(y);
            }
            for (label, sources) in &incoming {
                if let Some(targets) = outgoing.get(label) {
                    two_cycle_free = false;
                    for &a in sources {
                        for &b in targets {
                            witnesses.push(GammaWitness::TwoCycle { from: a, via: x, to: b });
                        }
                    }
                }
            }
        }
        GammaReport {
            loop_free,
            two_cycle_free,
            witnesses,
        }
    }

    /// Labels all of whose interior vertices are sources (no incoming arrow
    /// from a mutable vertex). Labels without interior vertices are skipped.
    pub fn orbit_sources(&self) -> Vec<OrbitIndex> {
        let mut seen = vec![false; self.rank + 1];
        let mut blocked = vec![false; self.rank + 1];
        for v in self.interior_vertices() {
            seen[v.label] = true;
            let incoming = self.adj[v.id]
                .iter()
                .any(|(&y, &w)| w > 0 && self.vertices[y].is_mutable());
            blocked[v.label] |= incoming;
        }
        (1..=self.rank)
            .filter(|&l| seen[l] && !blocked[l])
            .map(OrbitIndex)
            .collect()
    }

    /// Column signs observed on the interior vertices of each label.
    pub fn orbit_column_signs(&self) -> BTreeMap<usize, BTreeSet<ColumnSign>> {
        let mut out: BTreeMap<usize, BTreeSet<ColumnSign>> = BTreeMap::new();
        for v in self.interior_vertices() {
            out.entry(v.label).or_default().insert(self.column_sign(v.id));
        }
        out
    }

    /// Whether each orbit's interior c-vectors share one sign.
    pub fn orbit_signs_agree(&self) -> bool {
        self.orbit_column_signs().values().all(|s| s.len() <= 1)
    }

    /// Vertices within `depth` of the construction roots, in id order.
    pub fn vertices_within(&self, depth: usize) -> impl Iterator<Item = &Vertex> + '_ {
        self.vertices.iter().filter(move |v| v.depth <= depth)
    }
}

impl fmt::Display for LabeledQuiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let interior = self.interior_vertices().count();
        write!(
            f,
            "{} mutable + {} frozen vertices, {} arrows, {} interior, radius {}",
            self.mutable_count(),
            self.frozen_count(),
            self.arrow_count(),
            interior,
            self.interior_radius
        )
    }
}
