use std::collections::BTreeMap;

use super::{Defects, LabeledQuiver, Part, Radius, Vertex, VertexKind};
use crate::error::{Error, Result};
use crate::exchange::ExchangeMatrix;

struct Builder<'a> {
    b: &'a ExchangeMatrix,
    framed: bool,
    vertices: Vec<Vertex>,
    adj: Vec<BTreeMap<usize, i64>>,
    parent: Vec<Option<usize>>,
    expanded: Vec<bool>,
}

impl<'a> Builder<'a> {
    fn new(b: &'a ExchangeMatrix, framed: bool) -> Self {
        Self {
            b,
            framed,
            vertices: Vec::new(),
            adj: Vec::new(),
            parent: Vec::new(),
            expanded: Vec::new(),
        }
    }

    fn add_vertex(&mut self, label: usize, kind: VertexKind, depth: usize, parent: Option<usize>) -> usize {
        let id = self.vertices.len();
        self.vertices.push(Vertex {
            id,
            label,
            kind,
            depth,
        });
        self.adj.push(BTreeMap::new());
        self.parent.push(parent);
        self.expanded.push(false);
        id
    }

    /// Records `b(x, y) = w`, `b(y, x) = -w`.
    fn set_entry(&mut self, x: usize, y: usize, w: i64) {
        self.adj[x].insert(y, w);
        self.adj[y].insert(x, -w);
    }

    /// Glues the piece of `v`'s label onto `v`: its frozen partner and every
    /// satellite except the one identified with `v`'s parent. Returns the new
    /// mutable vertices in id order.
    fn expand(&mut self, v: usize) -> Vec<usize> {
        let Vertex { label, depth, .. } = self.vertices[v];
        let centre = label - 1;
        if self.framed {
            let f = self.add_vertex(label, VertexKind::Frozen, depth, Some(v));
            // one arrow v → f
            self.set_entry(f, v, 1);
        }
        let parent_label = self.parent[v].map(|p| self.vertices[p].label);
        let mut fresh = Vec::new();
        for j in 0..self.b.n() {
            if j == centre {
                continue;
            }
            let bj = self.b.get(j, centre);
            let mut count = bj.unsigned_abs();
            if parent_label == Some(j + 1) {
                let p = self.parent[v].expect("parent label implies parent");
                debug_assert_eq!(self.adj[p].get(&v).copied(), Some(bj.signum()));
                count -= 1;
            }
            for _ in 0..count {
                let s = self.add_vertex(j + 1, VertexKind::Mutable, depth + 1, Some(v));
                // each satellite contributes sign(b_j,centre) to the folded column
                self.set_entry(s, v, bj.signum());
                fresh.push(s);
            }
        }
        self.expanded[v] = true;
        fresh
    }

    /// Entries an unexpanded vertex is missing: the satellites and frozen
    /// partner that expanding it would add.
    fn missing(&self, v: usize) -> Defects {
        let Vertex { label, .. } = self.vertices[v];
        let parent_label = self.parent[v].map(|p| self.vertices[p].label);
        let mut defects = Defects::default();
        if self.framed {
            // b(v, f) = -1
            defects.entries.insert((VertexKind::Frozen, label, Part::Negative));
        }
        for j in 0..self.b.n() {
            if j == label - 1 {
                continue;
            }
            let bj = self.b.get(j, label - 1);
            let count = bj.unsigned_abs() - u64::from(parent_label == Some(j + 1));
            if count > 0 {
                // b(v, s) = -sign(b_j,label)
                defects
                    .entries
                    .insert((VertexKind::Mutable, j + 1, Part::read_by(-bj)));
            }
        }
        defects
    }

    fn finish(self, rank: usize, radius: Radius) -> LabeledQuiver {
        let defects = self
            .vertices
            .iter()
            .map(|v| {
                if v.is_mutable() && !self.expanded[v.id] {
                    self.missing(v.id)
                } else {
                    Defects::default()
                }
            })
            .collect();
        LabeledQuiver {
            rank,
            framed: self.framed,
            vertices: self.vertices,
            adj: self.adj,
            defects,
            interior_radius: radius,
        }
    }
}

/// The single piece for 1-based label `i`: a centre labeled `i`, `|b_ji|`
/// satellites labeled `j` for each `j != i`, and with `framed` a frozen
/// vertex `i′` receiving one arrow from the centre. Only the centre is interior.
pub fn build_piece(b: &ExchangeMatrix, i: usize, framed: bool) -> Result<LabeledQuiver> {
    b.require_acyclic_sign_skew()?;
    b.check_direction(i)?;
    let mut builder = Builder::new(b, framed);
    let centre = builder.add_vertex(i, VertexKind::Mutable, 0, None);
    builder.expand(centre);
    Ok(builder.finish(b.n(), Radius::Finite(0)))
}

/// The depth-`m` truncation `Q_(m)` of the unfolding quiver.
///
/// Construction starts from the piece of label 1 and glues pieces onto
/// every new vertex, ring by ring, `m` times in total. The gluing identifies
/// the existing arrow to the parent with the lowest-id satellite of the
/// parent's label. Matrices whose nonzero pattern is disconnected get one
/// root per component, at the smallest label of each. If a round adds no
/// mutable vertex the quiver is complete and the radius becomes
/// [`Radius::Complete`].
pub fn build_truncation(b: &ExchangeMatrix, m: usize, framed: bool) -> Result<LabeledQuiver> {
    b.require_acyclic_sign_skew()?;
    if m == 0 {
        return Err(Error::ZeroBound {
            what: "truncation depth",
        });
    }
    let mut builder = Builder::new(b, framed);
    let mut frontier: Vec<usize> = component_roots(b)
        .into_iter()
        .map(|r| builder.add_vertex(r + 1, VertexKind::Mutable, 0, None))
        .collect();
    let mut complete = false;
    for _ in 0..m {
        let mut next = Vec::new();
        for &v in &frontier {
            next.extend(builder.expand(v));
        }
        if next.is_empty() {
            complete = true;
            break;
        }
        frontier = next;
    }
    let radius = if complete {
        Radius::Complete
    } else {
        Radius::Finite(m - 1)
    };
    Ok(builder.finish(b.n(), radius))
}

/// Smallest 0-based index of each connected component of the nonzero pattern.
fn component_roots(b: &ExchangeMatrix) -> Vec<usize> {
    let n = b.n();
    let mut seen = vec![false; n];
    let mut roots = Vec::new();
    for r in 0..n {
        if seen[r] {
            continue;
        }
        roots.push(r);
        seen[r] = true;
        let mut stack = vec![r];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if !seen[j] && (b.get(i, j) != 0 || b.get(j, i) != 0) {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
    }
    roots
}
