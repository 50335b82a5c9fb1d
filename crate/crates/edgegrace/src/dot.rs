//! Graphviz output: edges carry their labels, vertices their induced residues.

use std::fmt::Write;

use edgegrace_core::{induce, EdgeLabeling};

pub fn labeling_to_dot(labeling: &EdgeLabeling, name: &str) -> String {
    let residues = induce(labeling);
    let mut out = String::new();
    writeln!(out, "graph {name} {{").unwrap();
    for (v, r) in residues.residues().iter().enumerate() {
        writeln!(out, "    {v} [label=\"{r}\"];").unwrap();
    }
    for (&(u, v), label) in labeling.graph().edges().iter().zip(labeling.labels()) {
        writeln!(out, "    {u} -- {v} [label=\"{label}\"];").unwrap();
    }
    out.push_str("}\n");
    out
}
