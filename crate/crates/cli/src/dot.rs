//! Graphviz output for the Auslander-Reiten quiver.

use std::fmt::Write;

use repherd_core::catalog::{ArQuiver, Catalog};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Projectives are boxes, injectives diamonds, modules that are both get a
/// double-bordered box. Dashed edges run from `X` to `τX`.
pub fn render(cat: &Catalog, q: &ArQuiver) -> String {
    let mut out = String::from("digraph ar_quiver {\n  rankdir=LR;\n");
    for (i, e) in cat.entries.iter().enumerate() {
        let dims: Vec<String> = e.module.dims().iter().map(usize::to_string).collect();
        let label = format!("{} dim=({})", e.name, dims.join(","));
        let shape = match (e.is_projective(), e.is_injective()) {
            (true, true) => ", shape=box, peripheries=2",
            (true, false) => ", shape=box",
            (false, true) => ", shape=diamond",
            (false, false) => "",
        };
        writeln!(out, "  n{i} [label={}{shape}];", quote(&label)).expect("string write");
    }
    for &(x, y, m) in &q.arrows {
        writeln!(out, "  n{x} -> n{y} [label=\"{m}\"];").expect("string write");
    }
    for &(x, t) in &q.tau {
        writeln!(out, "  n{x} -> n{t} [style=dashed, constraint=false];").expect("string write");
    }
    out.push_str("}\n");
    out
}
