use std::fmt::Write;

use super::LabeledQuiver;

impl LabeledQuiver {
    /// Graphviz rendering. Nodes appear in id order, edges in `(from, to)`
    /// order, so equal quivers give byte-identical output.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph unfolding {\n");
        for v in &self.vertices {
            if v.is_mutable() {
                let _ = writeln!(out, "  n{} [shape=ellipse, label=\"v{} ({})\"];", v.id, v.id, v.label);
            } else {
                let _ = writeln!(out, "  n{} [shape=box, label=\"{}\u{2032}\"];", v.id, v.label);
            }
        }
        for ((from, to), mult) in self.arrows() {
            if mult > 1 {
                let _ = writeln!(out, "  n{from} -> n{to} [label={mult}];");
            } else {
                let _ = writeln!(out, "  n{from} -> n{to};");
            }
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use crate::samples::rank1;
    use crate::unfolding::{build_truncation, LabeledQuiver, Vertex, VertexKind};

    #[test]
    fn rank_one_dot() {
        let q = build_truncation(&rank1(), 1, true).unwrap();
        assert_eq!(
            q.to_dot(),
            "digraph unfolding {\n  n0 [shape=ellipse, label=\"v0 (1)\"];\n  n1 [shape=box, label=\"1′\"];\n  n0 -> n1;\n}\n"
        );
    }

    #[test]
    fn multiplicities_are_labelled() {
        let v = |id, label| Vertex { id, label, kind: VertexKind::Mutable, depth: 0 };
        let q = LabeledQuiver::from_parts(2, vec![v(0, 1), v(1, 2)], &BTreeMap::from([((1, 0), 3)])).unwrap();
        assert!(q.to_dot().contains("  n1 -> n0 [label=3];\n"));
    }
}
